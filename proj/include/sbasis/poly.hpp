#pragma once

// Sparse polynomials over a coefficient ring, kept sorted strictly
// descending under the monomial ordering of their PolyRing.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbasis/coeffring.hpp"
#include "sbasis/monorder.hpp"

namespace sbasis {

struct Term {
  Scalar coeff;
  ExponentVector exp;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Coefficient ring, variable names and active ordering shared by a family
/// of polynomials.
class PolyRing {
 public:
  PolyRing(Ring coeffs, std::vector<std::string> vars, MonomialOrdering order);

  const Ring& coeffs() const noexcept { return coeffs_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const MonomialOrdering& order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return vars_.size(); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.coeffs_ == b.coeffs_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  Ring coeffs_;
  std::vector<std::string> vars_;
  MonomialOrdering order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr makePolyRing(Ring coeffs, std::vector<std::string> vars, MonomialOrdering order);

/// Ring over (t, x_1..x_n) with the homogenizing variable first and the
/// ordering from liftToHomogenized.
PolyRingPtr homogenizedRing(const PolyRingPtr& base);

class Polynomial {
 public:
  /// The zero polynomial.
  explicit Polynomial(PolyRingPtr ring);

  /// Normalizes coefficients, merges like terms, drops zeros and sorts.
  static Polynomial fromTerms(PolyRingPtr ring, std::vector<Term> terms);
  static Polynomial constant(PolyRingPtr ring, const Scalar& c);
  static Polynomial monomial(PolyRingPtr ring, const Scalar& c, ExponentVector exp);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Leading data; all throw ZeroPolynomial on 0.
  const Term& leadingTerm() const;
  const ExponentVector& leadingMonomial() const;
  const Scalar& leadingCoeff() const;

  /// Maximal total degree of a term; throws ZeroPolynomial on 0.
  int degree() const;
  /// f - LT(f).
  Polynomial tail() const;

  /// c * x^exp * f.
  Polynomial mulTerm(const Scalar& c, std::span<const int> exp) const;
  Polynomial mulTerm(const Term& t) const { return mulTerm(t.coeff, t.exp); }
  Polynomial scaled(const Scalar& c) const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial operator-() const;

  /// Same terms; rings compared structurally.
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// Validates the sortedness / no-zero / canonical-coefficient invariants.
  bool invariantsHold() const;

 private:
  Polynomial(PolyRingPtr ring, std::vector<Term> sortedTerms, int /*trusted*/)
      : ring_(std::move(ring)), terms_(std::move(sortedTerms)) {}

  Polynomial combine(const Polynomial& g, bool subtract) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws MixedRing unless f and g live in the same polynomial ring.
void requireSameRing(const Polynomial& f, const Polynomial& g);
bool sameRing(const PolyRingPtr& a, const PolyRingPtr& b);

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial mulTerm(const Term& t, const Polynomial& f);
Polynomial mul(const Polynomial& f, const Polynomial& g);

struct LeadingData {
  Term lt;
  ExponentVector lm;
  Scalar lc;
  ExponentVector le;
};

LeadingData leadingData(const Polynomial& f);

/// deg(f) - deg(LM(f)); throws ZeroPolynomial.
int ecart(const Polynomial& f);

/// Multiplies every term by t^(deg f - deg term). Lives in homRing, which
/// must be homogenizedRing(f.ring()) up to structure.
Polynomial homogenize(const Polynomial& f, const PolyRingPtr& homRing);
Polynomial homogenize(const Polynomial& f);
/// Substitutes t = 1 and re-sorts under base's ordering.
Polynomial dehomogenize(const Polynomial& F, const PolyRingPtr& base);

/// LT(u) == 1 exactly, i.e. u lies in the multiplicative set S_>.
bool isUnitOfLocalization(const Polynomial& u);

/// q with q * a == b (coefficient and monomial), if a term-divides b.
std::optional<Term> termQuotient(const Ring& ring, const Term& b, const Term& a);
bool termDivides(const Ring& ring, const Term& a, const Term& b);

/// Accepts `3x2y-7yz5` (juxtaposed exponents) as well as `3*x^2*y - 7*y*z^5`,
/// parentheses, integer powers of parenthesized factors and division by
/// constants. Throws ParseError.
Polynomial parsePolynomial(std::string_view text, const PolyRingPtr& ring);

/// Terms in descending order, e.g. `-3*x+x*y`; zero prints as `0`.
std::string toString(const Polynomial& f);
std::string toString(const Term& t, const PolyRing& ring);
std::string formatMonomial(std::span<const int> exp, const PolyRing& ring);

}  // namespace sbasis
