#pragma once

// Standard bases of ideals in the localization R[x]_> for any matrix
// ordering: the syzygy-driven algorithm, Moeller's incremental variant, the
// homogenization route and the s-polynomial algorithm over PIDs, plus
// strong standard bases and membership.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sbasis/normalform.hpp"
#include "sbasis/poly.hpp"

namespace sbasis {

struct Basis {
  PolyRingPtr ring;
  std::vector<Polynomial> gens;
  /// When tracked: gens[i] == sum lifts[i][j] * input[j], exactly.
  std::vector<std::vector<Polynomial>> lifts;
  bool isStandard = false;
  bool isStrong = false;

  bool hasLifts() const noexcept { return !gens.empty() && lifts.size() == gens.size(); }
};

enum class Route { Generic, Moeller, Homogenization, PID };

const char* routeName(Route route) noexcept;

struct DriverOptions {
  /// Ceiling on processed syzygies / pairs; also handed to every normal form.
  std::size_t iterationLimit = 1'000'000;
  bool trackLifts = false;
  /// Engine used on the homogenized ideal; unset picks the s-polynomial
  /// loop over PIDs and Moeller's loop otherwise.
  std::optional<Route> homogenizationEngine;
};

/// Wraps polynomials as a basis without any claims.
Basis makeBasis(std::span<const Polynomial> gens);

std::vector<Term> leadingIdeal(const Basis& G);
bool termInLeadingIdeal(const Term& t, const Basis& G);

/// L(A) == L(B), decided by mutual leading-term membership.
bool sameLeadingIdeal(std::span<const Polynomial> A, std::span<const Polynomial> B);

/// The syzygy criterion: for a homogeneous generating set of
/// syz(LT(g_1), ..., LT(g_t)), every combination sum h_i g_i reduces to 0.
bool satisfiesSyzygyCriterion(std::span<const Polynomial> G, const DriverOptions& options = {});

/// Processes a FIFO queue of leading-term syzygies; each nonzero normal
/// form joins G and enqueues the new syzygies that involve it.
Basis standardBasisGeneric(std::span<const Polynomial> F, const DriverOptions& options = {});

/// Moeller-style: for sigma = 1, 2, ... walks the saturated subsets of
/// {1..sigma} containing sigma and the quotient ideal
/// <LC(f_j) : j in J, j != sigma> : <LC(f_sigma)>.
Basis standardBasisMoeller(std::span<const Polynomial> F, const DriverOptions& options = {});

/// Homogenize, compute a Groebner basis for the lifted global ordering,
/// then set t = 1.
Basis standardBasisViaHomogenization(std::span<const Polynomial> F, const DriverOptions& options = {});

/// lcm(LT f, LT g)/LT(f) * f - lcm(LT f, LT g)/LT(g) * g, the term lcm
/// carrying the coefficient lcm. Throws RingNotPID.
Polynomial spoly(const Polynomial& f, const Polynomial& g);

/// Buchberger-style pair loop with spoly. Throws RingNotPID.
Basis standardBasisPID(std::span<const Polynomial> F, const DriverOptions& options = {});

Basis standardBasis(std::span<const Polynomial> F, Route route, const DriverOptions& options = {});

/// For each saturated J: f_J = sum a_j x^(a_J - a_j) f_j with
/// sum a_j c_j = gcd(c_j), followed by clean. Throws RingNotPID, and
/// NotAStandardBasis when G is unflagged and fails the syzygy criterion.
Basis strongStandardBasis(const Basis& G, const DriverOptions& options = {});

/// Drops every element whose leading term is term-divisible by the leading
/// term of another kept element (the earlier one survives among equals).
std::vector<Polynomial> clean(std::span<const Polynomial> G);
/// Indices kept by clean.
std::vector<std::size_t> cleanIndices(std::span<const Polynomial> G);

/// NF(f | G) == 0. Throws NotAStandardBasis when G is unflagged and fails
/// the syzygy criterion.
bool idealMembershipLocalized(const Polynomial& f, const Basis& G, std::size_t iterationLimit = 1'000'000);

/// Checks gens[i] == sum lifts[i][j] * input[j] for every i.
bool verifyLifts(const Basis& G, std::span<const Polynomial> input);

}  // namespace sbasis
