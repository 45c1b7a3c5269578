#include "morse/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace morse {

namespace {

using Cplx = std::complex<double>;

void check_distinct(const std::vector<Cplx>& pts, const char* what) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (std::abs(pts[i] - pts[j]) < 1e-12)
        throw std::invalid_argument(std::string(what) + " must be pairwise distinct");
}

// Values W_m = sum_j coef[m][j] * z_j for the current point configuration.
std::vector<Cplx> values_of(const std::vector<std::vector<Cplx>>& coef,
                            const std::vector<Cplx>& z) {
  std::vector<Cplx> vals(coef.size(), Cplx(0.0));
  for (size_t m = 0; m < coef.size(); ++m)
    for (size_t j = 0; j < z.size(); ++j) vals[m] += coef[m][j] * z[j];
  return vals;
}

double min_pairwise_gap(const std::vector<Cplx>& vals) {
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = i + 1; j < vals.size(); ++j)
      gap = std::min(gap, std::abs(vals[i] - vals[j]));
  return gap;
}

struct Engine {
  std::vector<std::vector<Cplx>> coef;  // per beta, per moving point
  std::vector<Cplx> base;               // base configuration of moving points
  int steps0, max_steps;
  double min_separation;

  // Tracks the letters in reverse word order; returns slot -> beta index.
  TrackResult run(const std::vector<int>& letters) const {
    size_t nb = coef.size();
    std::vector<Cplx> pts = base;
    std::vector<int> slot_to_label(base.size());
    for (size_t i = 0; i < base.size(); ++i) slot_to_label[i] = static_cast<int>(i);

    TrackResult result;
    result.min_gap_observed = min_pairwise_gap(values_of(coef, pts));
    if (result.min_gap_observed < min_separation)
      throw std::invalid_argument("initial critical values are closer than min_separation");
    std::vector<Cplx> cur = values_of(coef, pts);
    std::vector<int> cur_idx(nb);
    for (size_t j = 0; j < nb; ++j) cur_idx[j] = static_cast<int>(j);
    result.steps_used = steps0;

    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      int a = (*it > 0 ? *it : -*it) - 1;  // 0-based lower slot
      int l1 = slot_to_label[a], l2 = slot_to_label[a + 1];
      Cplx x1 = pts[l1], x2 = pts[l2];
      Cplx center = (x1 + x2) / 2.0, radius = (x1 - x2) / 2.0;
      double dir = (*it > 0) ? 1.0 : -1.0;

      int steps = steps0;
      for (;; steps *= 2) {
        if (steps > max_steps) {
          result.diagnostic = "unresolved near-collision of critical values; "
                              "choose more generic data";
          throw std::runtime_error(result.diagnostic);
        }
        std::vector<Cplx> scur = cur;
        std::vector<int> sidx = cur_idx;
        std::vector<Cplx> spts = pts;
        bool ok = true;
        double letter_gap = result.min_gap_observed;
        for (int m = 1; m <= steps && ok; ++m) {
          double t = static_cast<double>(m) / steps;
          Cplx rot = std::polar(1.0, dir * std::numbers::pi * t);
          spts[l1] = center + radius * rot;
          spts[l2] = center - radius * rot;
          std::vector<Cplx> vals = values_of(coef, spts);
          letter_gap = std::min(letter_gap, min_pairwise_gap(vals));
          std::vector<char> taken(nb, 0);
          for (size_t j = 0; j < nb && ok; ++j) {
            double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
            int best = -1;
            for (size_t v = 0; v < nb; ++v) {
              double d = std::abs(scur[j] - vals[v]);
              if (d < d1) {
                d2 = d1;
                d1 = d;
                best = static_cast<int>(v);
              } else if (d < d2) {
                d2 = d;
              }
            }
            // Safety margin: the nearest successor must win clearly.
            if (nb > 1 && (3.0 * d1 >= d2 || d2 - d1 < min_separation)) {
              ok = false;
              break;
            }
            if (taken[best]) {
              ok = false;
              break;
            }
            taken[best] = 1;
            scur[j] = vals[best];
            sidx[j] = best;
          }
        }
        if (ok) {
          cur = std::move(scur);
          cur_idx = std::move(sidx);
          pts = std::move(spts);
          result.min_gap_observed = std::min(result.min_gap_observed, letter_gap);
          result.steps_used = std::max(result.steps_used, steps);
          break;
        }
      }
      std::swap(slot_to_label[a], slot_to_label[a + 1]);
    }
    result.permutation = std::move(cur_idx);
    return result;
  }
};

}  // namespace

TrackerProblem default_tracker_problem(const Partition& p) {
  // Sorted real configurations with irrational spacing jitter, so that the
  // W_beta are pairwise distinct (equispaced points create exact collisions).
  TrackerProblem prob;
  prob.partition = p;
  int n = p.n(), k = p.k();
  double mean = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = i + 0.25 * std::sqrt(2.0 * (i + 1));
    prob.lambdas.push_back(Cplx(x, 0.0));
    mean += x / n;
  }
  for (auto& l : prob.lambdas) l -= mean;
  for (int j = 0; j < k; ++j)
    prob.us.push_back(Cplx(j + 0.25 * std::sqrt(3.0 * (j + 1)), 0.0));
  return prob;
}

std::vector<Cplx> critical_values(const TrackerProblem& prob) {
  const Partition& p = prob.partition;
  if (static_cast<int>(prob.lambdas.size()) != p.n())
    throw std::invalid_argument("need n lambda values");
  if (static_cast<int>(prob.us.size()) != p.k())
    throw std::invalid_argument("need k u values");
  check_distinct(prob.lambdas, "lambdas");
  check_distinct(prob.us, "us");
  std::vector<BetaMap> betas = enumerate_beta(p);
  std::vector<Cplx> vals;
  for (const BetaMap& b : betas) {
    Cplx w = 0.0;
    for (int i = 0; i < p.n(); ++i) w += prob.lambdas[i] * prob.us[b.assign[i]];
    vals.push_back(prob.tau * w);
  }
  if (min_pairwise_gap(vals) < prob.min_separation)
    throw std::invalid_argument("critical values are closer than min_separation");
  return vals;
}

TrackResult track_family_monodromy(const TrackerProblem& prob, const BraidWord& w) {
  const Partition& p = prob.partition;
  if (w.strands != p.n()) throw std::invalid_argument("word must have n strands");
  critical_values(prob);  // validates the configuration

  std::vector<BetaMap> betas = enumerate_beta(p);
  Engine eng;
  eng.base = prob.lambdas;
  eng.steps0 = prob.steps;
  eng.max_steps = prob.max_steps;
  eng.min_separation = prob.min_separation;
  eng.coef.resize(betas.size());
  for (size_t m = 0; m < betas.size(); ++m) {
    eng.coef[m].assign(p.n(), Cplx(0.0));
    for (int i = 0; i < p.n(); ++i)
      eng.coef[m][i] = prob.tau * prob.us[betas[m].assign[i]];
  }

  TrackResult result = eng.run(w.letters);
  Permutation pi = strand_permutation(w);
  result.verdict = TrackVerdict::Match;
  for (size_t j = 0; j < betas.size(); ++j) {
    int predicted = beta_index(betas, sigma_action_on_beta(pi, betas[j]));
    if (predicted != result.permutation[j]) {
      result.verdict = TrackVerdict::Mismatch;
      result.diagnostic = "tracked permutation disagrees with the strand-permutation action";
      break;
    }
  }
  return result;
}

TrackResult track_microlocal_monodromy(const TrackerProblem& prob, const ColoredBraid& c) {
  const Partition& p = prob.partition;
  if (!(c.partition == p)) throw std::invalid_argument("colored braid partition mismatch");
  if (!preserves_colors(c))
    throw std::invalid_argument("braid word does not preserve colors (not in B_nbar)");
  critical_values(prob);

  std::vector<BetaMap> betas = enumerate_beta(p);
  Engine eng;
  eng.base = prob.us;
  eng.steps0 = prob.steps;
  eng.max_steps = prob.max_steps;
  eng.min_separation = prob.min_separation;
  eng.coef.resize(betas.size());
  for (size_t m = 0; m < betas.size(); ++m) {
    eng.coef[m].assign(p.k(), Cplx(0.0));
    for (int i = 0; i < p.n(); ++i)
      eng.coef[m][betas[m].assign[i]] += prob.tau * prob.lambdas[i];
  }

  TrackResult result = eng.run(c.word.letters);
  Permutation pi = strand_permutation(c.word);
  result.verdict = TrackVerdict::Match;
  for (size_t j = 0; j < betas.size(); ++j) {
    int predicted = beta_index(betas, relabel_blocks(pi, betas[j]));
    if (predicted != result.permutation[j]) {
      result.verdict = TrackVerdict::Mismatch;
      result.diagnostic = "tracked permutation disagrees with the block relabeling";
      break;
    }
  }
  return result;
}

}  // namespace morse
