#pragma once

#include <complex>
#include <string>
#include <vector>

#include "morse/betamap.hpp"
#include "morse/colored_braid.hpp"
#include "morse/partition.hpp"

namespace morse {

// Numerical monodromy oracle: follows the critical values
// W_beta = tau * sum_i lambda_i u_{beta(i)} while the lambdas (family) or the
// u's (microlocal) move along the geometric realization of a braid word, and
// extracts the induced permutation of BetaMaps by nearest-value matching.
struct TrackerProblem {
  Partition partition;
  std::vector<std::complex<double>> lambdas;  // n pairwise distinct
  std::vector<std::complex<double>> us;       // k pairwise distinct
  std::complex<double> tau{1.0, 0.0};
  int steps = 16;            // initial subdivision per braid letter
  int max_steps = 1 << 13;   // refinement cap per letter
  double min_separation = 1e-8;
};

/// Sorted real default configuration for the partition.
TrackerProblem default_tracker_problem(const Partition& p);

enum class TrackVerdict { Match, Mismatch, SkippedSignStructure };

struct TrackResult {
  std::vector<int> permutation;  // slot j (started at beta_j) -> final beta index
  TrackVerdict verdict = TrackVerdict::Match;
  double min_gap_observed = 0.0;
  int steps_used = 0;  // largest per-letter subdivision used
  std::string diagnostic;
};

/// W_beta for every BetaMap in enumerate_beta order; throws if two values are
/// closer than min_separation.
std::vector<std::complex<double>> critical_values(const TrackerProblem& prob);

/// Moves the lambdas along w (each letter is a half-turn exchange of two
/// adjacent points; the rightmost letter moves first, so that tracked
/// permutations compose like the left action).  The verdict compares against
/// sigma_action_on_beta(strand_permutation(w), .).
TrackResult track_family_monodromy(const TrackerProblem& prob, const BraidWord& w);

/// Moves the u's along the colored word; the verdict compares against the
/// block relabeling beta -> strand_permutation(word) o beta (cases I/III; the
/// signed case II comparison applies only when the microlocal matrix is a
/// signed permutation, and is the caller's affair).
TrackResult track_microlocal_monodromy(const TrackerProblem& prob, const ColoredBraid& c);

}  // namespace morse
