#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "morse/partition.hpp"
#include "morse/permutation.hpp"

namespace morse {

// Character-theoretic machinery for S_n.  Irreducible representations are
// labelled by shapes: partitions written as descending part lists.
using Shape = std::vector<int>;

/// All shapes of n, in deterministic order.
std::vector<Shape> partition_shapes(int n);

/// Number of semistandard Young tableaux of the given shape whose content has
/// content[i] entries equal to i+1.
std::int64_t kostka_number(const Shape& shape, const std::vector<int>& content);

/// Multiplicity of each irreducible in the permutation module
/// Ind_{S_{n_1} x ... x S_{n_k}}^{S_n} 1, computed by tableau enumeration.
std::map<Shape, std::int64_t> kostka_decomposition(const Partition& p);

/// dim of the irreducible labelled by shape (hook length formula).
std::int64_t shape_dim(const Shape& shape);

/// Irreducible character value chi^shape on the class of the given cycle type
/// (Murnaghan-Nakayama).
std::int64_t symmetric_character(const Shape& shape, const Shape& cycle_type);

/// Size of the conjugacy class of S_n with the given cycle type.
std::int64_t conjugacy_class_size(int n, const Shape& cycle_type);

/// A representative permutation with the given cycle type (consecutive cycles).
Permutation class_representative(const Shape& cycle_type);

/// Multiplicity of each irreducible in the permutation action on BetaMaps,
/// computed by character inner products (independent of kostka_decomposition).
std::map<Shape, std::int64_t> beta_action_decomposition(const Partition& p);

}  // namespace morse
