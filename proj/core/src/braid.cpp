#include "morse/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace morse {

namespace {
void check_letters(int strands, const std::vector<int>& letters) {
  for (int l : letters) {
    int i = l > 0 ? l : -l;
    if (l == 0 || i < 1 || i >= strands)
      throw std::invalid_argument("braid letter out of range: " + std::to_string(l));
  }
}
}  // namespace

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  check_letters(strands, letters);
}

BraidWord parse_braid(int strands, const std::string& text) {
  std::vector<int> letters;
  std::stringstream ss(text);
  int v;
  while (ss >> v) letters.push_back(v);
  if (!ss.eof()) throw std::invalid_argument("malformed braid word: " + text);
  return BraidWord(strands, std::move(letters));
}

std::string braid_str(const BraidWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord braid_inverse(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  for (int l : w.letters) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands, std::move(stack));
}

Permutation strand_permutation(const BraidWord& w) {
  Permutation out(w.strands);
  for (int l : w.letters) {
    int i = l > 0 ? l : -l;
    out = out * Permutation::adjacent_transposition(w.strands, i - 1);
  }
  return out;
}

BraidWord invert_gens_obar(const BraidWord& w) {
  BraidWord out = w;
  for (int& l : out.letters) l = -l;
  return out;
}

BraidWord cabling_zeta(const Partition& p, const BraidWord& w) {
  if (w.strands != p.k())
    throw std::invalid_argument("cabling_zeta: word must have k strands");
  BraidWord out;
  out.strands = p.n();
  for (int l : w.letters) {
    int i = (l > 0 ? l : -l) - 1;  // 0-based rope index
    int lo = p.block_offset(i);
    int ni = p.part(i), nj = p.part(i + 1);
    // Positive block transposition: n_{i+1} descending runs of length n_i.
    std::vector<int> image;
    image.reserve(static_cast<size_t>(ni) * nj);
    for (int r = 0; r < nj; ++r)
      for (int d = 0; d < ni; ++d) image.push_back(lo + ni + r - d);
    if (l > 0) {
      out.letters.insert(out.letters.end(), image.begin(), image.end());
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it)
        out.letters.push_back(-*it);
    }
  }
  check_letters(out.strands, out.letters);
  return out;
}

Permutation block_permutation(const Partition& p, const Permutation& g) {
  if (g.size() != p.k()) throw std::invalid_argument("block permutation size mismatch");
  // Rope i lands after all ropes j with g(j) < g(i).
  std::vector<int> new_offset(p.k(), 0);
  for (int i = 0; i < p.k(); ++i)
    for (int j = 0; j < p.k(); ++j)
      if (g(j) < g(i)) new_offset[i] += p.part(j);
  std::vector<int> img(p.n());
  for (int i = 0; i < p.k(); ++i)
    for (int t = 0; t < p.part(i); ++t) img[p.block_offset(i) + t] = new_offset[i] + t;
  return Permutation(img);
}

}  // namespace morse
