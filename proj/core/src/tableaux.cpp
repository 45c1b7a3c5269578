#include "morse/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "morse/betamap.hpp"

namespace morse {

namespace {

void shapes_rec(int remaining, int max_part, Shape& acc, std::vector<Shape>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    acc.push_back(p);
    shapes_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

std::int64_t count_fillings(const Shape& shape, std::vector<int>& remaining,
                            std::vector<std::vector<int>>& grid, int r, int c) {
  if (r == static_cast<int>(shape.size())) return 1;
  int nr = r, nc = c + 1;
  if (nc >= shape[r]) {
    nr = r + 1;
    nc = 0;
  }
  std::int64_t total = 0;
  int lo = (c > 0) ? grid[r][c - 1] : 1;                    // rows weakly increase
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[v - 1] == 0) continue;
    if (r > 0 && v <= grid[r - 1][c]) continue;             // columns strictly increase
    grid[r][c] = v;
    --remaining[v - 1];
    total += count_fillings(shape, remaining, grid, nr, nc);
    ++remaining[v - 1];
  }
  return total;
}

// Beta-set representation for the Murnaghan-Nakayama recursion: removing a
// border strip of length t moves one bead b to b - t on the abacus.
std::int64_t mn_rec(std::vector<int> beads, const Shape& parts, size_t idx) {
  if (idx == parts.size()) return 1;
  int t = parts[idx];
  std::int64_t total = 0;
  for (size_t i = 0; i < beads.size(); ++i) {
    int target = beads[i] - t;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int crossings = 0;
    for (int c : beads)
      if (c > target && c < beads[i]) ++crossings;
    std::vector<int> next = beads;
    next[i] = target;
    std::int64_t sub = mn_rec(std::move(next), parts, idx + 1);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

std::vector<Shape> partition_shapes(int n) {
  std::vector<Shape> out;
  Shape acc;
  shapes_rec(n, n, acc, out);
  return out;
}

std::int64_t kostka_number(const Shape& shape, const std::vector<int>& content) {
  int boxes = std::accumulate(shape.begin(), shape.end(), 0);
  int total = std::accumulate(content.begin(), content.end(), 0);
  if (boxes != total) throw std::invalid_argument("shape/content size mismatch");
  if (shape.empty()) return 1;
  std::vector<int> remaining = content;
  std::vector<std::vector<int>> grid(shape.size());
  for (size_t r = 0; r < shape.size(); ++r) grid[r].assign(shape[r], 0);
  return count_fillings(shape, remaining, grid, 0, 0);
}

std::map<Shape, std::int64_t> kostka_decomposition(const Partition& p) {
  std::vector<int> content = p.parts();
  std::map<Shape, std::int64_t> out;
  for (const Shape& shape : partition_shapes(p.n()))
    out[shape] = kostka_number(shape, content);
  return out;
}

std::int64_t shape_dim(const Shape& shape) {
  int n = std::accumulate(shape.begin(), shape.end(), 0);
  int rows = static_cast<int>(shape.size());
  std::vector<int> conj(shape.empty() ? 0 : shape[0], 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < shape[r]; ++c) ++conj[c];
  std::int64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::int64_t hooks = 1;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < shape[r]; ++c) hooks *= (shape[r] - c) + (conj[c] - r) - 1;
  return fact / hooks;
}

std::int64_t symmetric_character(const Shape& shape, const Shape& cycle_type) {
  int n = std::accumulate(shape.begin(), shape.end(), 0);
  int m = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  if (n != m) throw std::invalid_argument("shape/cycle-type size mismatch");
  int rows = static_cast<int>(shape.size());
  std::vector<int> beads(rows);
  for (int i = 0; i < rows; ++i) beads[i] = shape[i] + (rows - 1 - i);
  return mn_rec(beads, cycle_type, 0);
}

std::int64_t conjugacy_class_size(int n, const Shape& cycle_type) {
  std::int64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::int64_t z = 1;
  int run = 0;
  for (size_t i = 0; i < cycle_type.size(); ++i) {
    z *= cycle_type[i];
    run = (i > 0 && cycle_type[i] == cycle_type[i - 1]) ? run + 1 : 1;
    z *= run;
  }
  return fact / z;
}

Permutation class_representative(const Shape& cycle_type) {
  int n = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  std::vector<int> img(n);
  int off = 0;
  for (int len : cycle_type) {
    for (int t = 0; t < len; ++t) img[off + t] = off + (t + 1) % len;
    off += len;
  }
  return Permutation(img);
}

std::map<Shape, std::int64_t> beta_action_decomposition(const Partition& p) {
  int n = p.n();
  std::int64_t order = 1;
  for (int i = 2; i <= n; ++i) order *= i;

  // Permutation character: a BetaMap is fixed by w iff it is constant on the
  // cycles of w.
  std::vector<BetaMap> betas = enumerate_beta(p);
  std::vector<Shape> types = partition_shapes(n);
  std::vector<std::int64_t> fixed(types.size(), 0);
  for (size_t t = 0; t < types.size(); ++t) {
    Permutation w = class_representative(types[t]);
    for (const BetaMap& b : betas)
      if (sigma_action_on_beta(w, b) == b) ++fixed[t];
  }

  std::map<Shape, std::int64_t> out;
  for (const Shape& shape : partition_shapes(n)) {
    std::int64_t acc = 0;
    for (size_t t = 0; t < types.size(); ++t)
      acc += conjugacy_class_size(n, types[t]) * fixed[t] *
             symmetric_character(shape, types[t]);
    if (acc % order != 0) throw std::logic_error("non-integral multiplicity");
    out[shape] = acc / order;
  }
  return out;
}

}  // namespace morse
