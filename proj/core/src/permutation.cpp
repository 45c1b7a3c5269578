#include "morse/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace morse {

Permutation::Permutation(int n) : img_(n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::adjacent_transposition(int n, int a) {
  if (a < 0 || a + 1 >= n) throw std::invalid_argument("transposition index out of range");
  Permutation w(n);
  std::swap(w.img_[a], w.img_[a + 1]);
  return w;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation w(n);
  std::swap(w.img_.at(a), w.img_.at(b));
  return w;
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (size() != v.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(img_.size());
  for (int x = 0; x < size(); ++x) out[x] = img_[v.img_[x]];
  Permutation w;
  w.img_ = std::move(out);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(img_.size());
  for (int x = 0; x < size(); ++x) out[img_[x]] = x;
  Permutation w;
  w.img_ = std::move(out);
  return w;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> cycles;
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    int len = 0, y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = img_[y];
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i] + 1);
  }
  return s;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  // Right-multiply by adjacent transpositions at descents until the identity
  // is reached; the collected indices, reversed, compose back to w.
  Permutation v = w;
  std::vector<int> picked;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int a = 0; a + 1 < v.size(); ++a) {
      if (v(a) > v(a + 1)) {
        v = v * Permutation::adjacent_transposition(v.size(), a);
        picked.push_back(a);
        progress = true;
        break;
      }
    }
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

}  // namespace morse
