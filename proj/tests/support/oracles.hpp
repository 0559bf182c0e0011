#pragma once

// Reference implementations used only by the tests. None of them calls the
// library's algorithmic code: lattices are decided by a Hermite-style
// echelon form, the field-case reference is a textbook Buchberger on its own
// term representation, and the normal-form contract is re-checked term by
// term.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <random>
#include <vector>

#include "sbasis/normalform.hpp"
#include "sbasis/poly.hpp"

namespace oracle {

using Int = mpz_class;
using IntVec = std::vector<Int>;

/// Row echelon basis of the Z-lattice spanned by `rows` (zero rows dropped,
/// pivots positive).
std::vector<IntVec> latticeEchelon(std::vector<IntVec> rows);
/// v in the lattice whose echelon basis is `echelon`.
bool inLattice(const std::vector<IntVec>& echelon, IntVec v);
bool sameLattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b);

/// Brute-force ideal membership in Z/m (m >= 2) or Z (m == 0, via gcd).
bool inIdealInt(const Int& a, const std::vector<Int>& gens, const Int& m);

/// Every syzygy b of `a` (sum a_i b_i = 0 in Z, or mod m when m >= 2) lies in
/// the span of `gens`. Over Z the syzygies are enumerated with all but one
/// coordinate in [-bound, bound]; over Z/m every vector of (Z/m)^s is tried.
/// Also checks that each generator is a syzygy. Empty string on success.
std::string checkSyzygyGenerators(const std::vector<Int>& a, const Int& m, const std::vector<IntVec>& gens,
                                  int bound);

/// Same for <gens> : <c> with candidate generators `quot`; over Z every b in
/// [-bound, bound] is tried.
std::string checkQuotientIdeal(const std::vector<Int>& gens, const Int& c, const Int& m,
                               const std::vector<Int>& quot, int bound);

/// A homogeneous vector of terms against leading terms c_i x^a_i: its degree
/// x^a (x^a_i * monomial of coordinate i) and its coefficient vector. nullopt
/// for the zero vector or when the coordinates are not aligned terms.
struct GradedVector {
  sbasis::ExponentVector degree;
  IntVec coeffs;
};
std::optional<GradedVector> graded(const std::vector<sbasis::Polynomial>& v, const std::vector<sbasis::Term>& terms);

/// v lies in the R[x]-module generated by homogeneous `gens`: its degree-a
/// part is the Z-span of the generators whose degree divides a (plus m*e_i).
bool moduleContains(const std::vector<GradedVector>& gens, const GradedVector& v, const Int& m);

/// Term membership in L(G) decided from the coefficient ring directly.
bool termInLeadingIdeal(const sbasis::Term& t, const std::vector<sbasis::Polynomial>& G);

/// Checks the three normal-form conditions for (f, G, rep); returns an empty
/// string on success, otherwise a description of the first violation.
std::string checkNormalForm(const sbasis::Polynomial& f, const std::vector<sbasis::Polynomial>& G,
                            const sbasis::StandardRepresentation& rep);

// ---- field-case reference -------------------------------------------------

enum class RefOrder { Lex, DegRevLex };

/// Polynomial over Q as exponent -> coefficient with its own ordering.
struct RefPoly {
  std::vector<std::pair<std::vector<int>, mpq_class>> terms;  // descending
};

RefPoly toRef(const sbasis::Polynomial& f, RefOrder order);
/// Reduced, monic Groebner basis by plain Buchberger (all pairs, no criteria).
std::vector<RefPoly> referenceGroebner(const std::vector<RefPoly>& F, RefOrder order);
/// Reduced monic basis obtained by interreducing a Groebner basis.
std::vector<RefPoly> interreduce(const std::vector<RefPoly>& G, RefOrder order);
bool sameBasis(std::vector<RefPoly> a, std::vector<RefPoly> b);
std::string refToString(const RefPoly& p);

// ---- generators -----------------------------------------------------------

using Rng = std::mt19937_64;

sbasis::ExponentVector randomExponent(Rng& rng, std::size_t n, int maxDeg);
/// Nonzero polynomial with up to maxTerms terms, total degree <= maxDeg,
/// coefficients in [-coeffBound, coeffBound].
sbasis::Polynomial randomPolynomial(Rng& rng, const sbasis::PolyRingPtr& ring, int maxTerms, int maxDeg,
                                    int coeffBound);
/// Element of S_>: 1 plus random terms smaller than 1.
sbasis::Polynomial randomUnit(Rng& rng, const sbasis::PolyRingPtr& ring, int maxTerms, int maxDeg);
/// u * sum a_i g_i with random u in S_> and random cofactors a_i.
sbasis::Polynomial randomIdealElement(Rng& rng, const std::vector<sbasis::Polynomial>& G, int maxDeg);

}  // namespace oracle
