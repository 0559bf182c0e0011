#pragma once

// Saturated subsets and homogeneous generating sets of the syzygy module of
// a list of terms c_1 x^a_1, ..., c_s x^a_s.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sbasis/poly.hpp"

namespace sbasis {

using IndexSet = std::vector<std::size_t>;

/// All subsets of {0..n-1}, in the recursive order of the SINGULAR powerSet
/// procedure: P(n) = P(n-1), {n-1}, then S+{n-1} for the nonempty S of
/// P(n-1). Throws TooManyGenerators for n > 20.
std::vector<IndexSet> powerSet(std::size_t n);

struct SaturatedSubset {
  IndexSet indices;       // sorted
  ExponentVector lcm;     // lcm of the monomials indexed by `indices`

  friend bool operator==(const SaturatedSubset&, const SaturatedSubset&) = default;
};

/// True if every monomial dividing lcm(J) is indexed by J.
bool isSaturated(std::span<const std::size_t> J, std::span<const ExponentVector> monomials);

/// {j : monomials[j] | lcm(J)}.
SaturatedSubset saturate(std::span<const std::size_t> J, std::span<const ExponentVector> monomials);

/// Every nonempty saturated subset, in (size, lexicographic) order.
///
/// Enumerated through the distinct lcms of subsets (a saturated set is
/// determined by its lcm), not through the power set. Throws
/// TooManyGenerators above `limit` results.
std::vector<SaturatedSubset> saturatedSubsets(std::span<const ExponentVector> monomials,
                                              std::size_t limit = std::size_t{1} << 20);

/// Subsets of {0..sigma}, saturated with respect to monomials[0..sigma],
/// that contain sigma; (size, lexicographic) order.
std::vector<SaturatedSubset> saturatedSubsetsContaining(std::span<const ExponentVector> monomials,
                                                        std::size_t sigma,
                                                        std::size_t limit = std::size_t{1} << 20);

struct SyzygyVector {
  std::vector<Polynomial> coords;
  ExponentVector degree;
};

/// Union over saturated J of the coefficient syzygies of (c_j : j in J),
/// each scaled by x^gamma_J / x^a_j. Generates syz(terms) over R[x].
std::vector<SyzygyVector> homogeneousSyzygyBasis(std::span<const Term> terms, const PolyRingPtr& ring);

/// Degree x^a when v is a nonzero homogeneous syzygy of `terms` (every
/// coordinate a term, x^a_i * LM(v_i) = x^a, sum v_i * terms_i = 0).
std::optional<ExponentVector> isHomogeneousSyzygy(std::span<const Polynomial> v, std::span<const Term> terms);

}  // namespace sbasis
