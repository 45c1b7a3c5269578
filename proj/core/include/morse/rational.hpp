#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace morse {

// Exact rational scalar used by all algebraic computations.
using Rat = mpq_class;

/// Canonical decimal string, "p" or "p/q" with q > 0 and gcd(p,q) = 1.
std::string rat_str(const Rat& q);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat rat_parse(const std::string& s);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

double rat_double(const Rat& q);

}  // namespace morse
