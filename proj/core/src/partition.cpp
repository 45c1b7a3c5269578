#include "morse/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace morse {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("empty partition");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);

  color_.resize(parts_.size());
  int off = 0;
  for (int i = 0; i < k(); ++i) {
    offset_.push_back(off);
    off += parts_[i];
    if (i == 0 || parts_[i] != parts_[i - 1]) {
      distinct_.push_back(parts_[i]);
      mult_.push_back(1);
      color_begin_.push_back(i);
    } else {
      ++mult_.back();
    }
    color_[i] = static_cast<int>(distinct_.size()) - 1;
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition entry: " + tok);
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition: " + text);
  return Partition(parts);
}

int Partition::block_of_letter(int x) const {
  for (int i = k() - 1; i >= 0; --i)
    if (x >= offset_[i]) return i;
  throw std::out_of_range("letter out of range");
}

std::vector<int> Partition::young_generators() const {
  std::vector<int> gens;
  for (int i = 0; i < k(); ++i)
    for (int a = offset_[i]; a + 1 < offset_[i] + parts_[i]; ++a)
      gens.push_back(a);
  return gens;
}

std::string Partition::to_string() const {
  std::string s;
  for (int i = 0; i < k(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::uint64_t multinomial_dim(const Partition& p) {
  if (p.n() > 20) throw std::overflow_error("multinomial_dim limited to n <= 20");
  auto fact = [](int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  std::uint64_t d = fact(p.n());
  for (int i = 0; i < p.k(); ++i) d /= fact(p.part(i));
  return d;
}

namespace {
void partitions_rec(int remaining, int min_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 1) throw std::invalid_argument("all_partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitions_rec(n, 1, acc, out);
  return out;
}

}  // namespace morse
