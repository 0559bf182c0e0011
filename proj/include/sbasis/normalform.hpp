#pragma once

// Normal forms for arbitrary (local, global, mixed) orderings over rings
// with solvable linear equations, with verifiable standard
// representations u*f = sum xi_i*g_i + r.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sbasis/poly.hpp"

namespace sbasis {

/// value = sum coeff * x^shift * T[index] with LT(value) = LT(h).
struct ReductionCandidate {
  struct Entry {
    std::size_t index;
    Scalar coeff;
    ExponentVector shift;
  };
  std::vector<Entry> support;
  Polynomial value;
};

/// Picks a reducer for h from T or returns nullopt when S(T,h) is empty.
///
/// The divisors D = {g : LM(g) | LM(h)} are sorted by (ecart, position in T);
/// the shortest prefix whose leading coefficients generate LC(h) supplies
/// the support and the coefficients come from coeffring's lift. This keeps
/// the support's maximal ecart as small as possible.
std::optional<ReductionCandidate> chooseReducer(std::span<const Polynomial> T, const Polynomial& h);

struct StandardRepresentation {
  Polynomial unit;                 // u, with LT(u) = 1
  std::vector<Polynomial> coeffs;  // xi_1..xi_s
  Polynomial remainder;            // r
};

struct NormalFormOptions {
  std::size_t iterationLimit = 1'000'000;
  /// Reduce the remainder's lower terms as well. Fields with a global
  /// ordering only.
  bool tailReduce = false;
  /// Skip building u and xi (they are returned as 1 and zeros).
  bool certificate = true;
};

struct NormalFormStats {
  std::size_t iterations = 0;
  std::size_t tGrowth = 0;
};

/// Mora-style normal form: h := f, T := G; while a reducer k exists, add h
/// to T if ecart(k) > ecart(h), then h := h - k.
/// Throws ZeroPolynomial for a zero entry of G and IterationLimit.
StandardRepresentation normalForm(const Polynomial& f, std::span<const Polynomial> G,
                                  const NormalFormOptions& options = {}, NormalFormStats* stats = nullptr);

/// Same contract, reducing by a single g with LT(g) | LT(h). Throws
/// RingNotEligible unless the ring has the single-divisor property.
StandardRepresentation normalFormDivisorRule(const Polynomial& f, std::span<const Polynomial> G,
                                             const NormalFormOptions& options = {},
                                             NormalFormStats* stats = nullptr);

/// c*x^a lies in <LT(g) : g in G> iff c is in the ideal generated by the
/// leading coefficients of those g with LM(g) | x^a.
bool termInLeadingIdeal(const Term& t, std::span<const Polynomial> G);

enum class CertificateStatus {
  Ok,
  ShapeMismatch,
  IdentityFails,
  UnitNotInLocalization,
  LeadingMonomialNotMaximal,
  RemainderReducible,
};

const char* describe(CertificateStatus status) noexcept;

/// Re-checks u*f - sum xi_i*g_i - r == 0, u in S_>, the max-LM condition
/// and LT(r) not in L(G).
CertificateStatus verifyStandardRepresentation(const Polynomial& f, std::span<const Polynomial> G,
                                               const StandardRepresentation& rep);

}  // namespace sbasis
