#include "sbasis/stdbasis.hpp"

#include <algorithm>
#include <deque>

#include "sbasis/error.hpp"
#include "sbasis/syzygy.hpp"

namespace sbasis {
namespace {

void validateInput(std::span<const Polynomial> F) {
  if (F.empty()) throw Error(Errc::EmptyInput, "no generators");
  for (const auto& f : F) {
    requireSameRing(F.front(), f);
    if (f.isZero()) throw Error(Errc::ZeroPolynomial, "generators must be nonzero");
  }
}

// One summand c * x^shift * G[index] of a combination of basis elements.
struct Part {
  std::size_t index;
  Scalar coeff;
  ExponentVector shift;
};

// Growing basis with optional lifts over the original input.
class Builder {
 public:
  Builder(std::span<const Polynomial> F, const DriverOptions& options)
      : ring_(F.front().ring()), options_(options), inputSize_(F.size()) {
    G.assign(F.begin(), F.end());
    if (options_.trackLifts) {
      const Polynomial zero(ring_);
      for (std::size_t i = 0; i < F.size(); ++i) {
        std::vector<Polynomial> l(F.size(), zero);
        l[i] = Polynomial::constant(ring_, 1);
        lifts.push_back(std::move(l));
      }
    }
  }

  void tick() {
    if (++steps_ > options_.iterationLimit) {
      throw Error(Errc::IterationLimit, "standard basis computation exceeded the iteration limit");
    }
  }

  /// Reduces sum of parts against G; appends a nonzero remainder.
  bool reduceAndAdd(std::span<const Part> parts) {
    tick();
    Polynomial comb(ring_);
    for (const auto& p : parts) comb += G[p.index].mulTerm(p.coeff, p.shift);
    if (comb.isZero()) return false;
    NormalFormOptions nfo;
    nfo.iterationLimit = options_.iterationLimit;
    nfo.certificate = options_.trackLifts;
    StandardRepresentation rep = normalForm(comb, G, nfo);
    if (rep.remainder.isZero()) return false;
    if (options_.trackLifts) {
      const Polynomial zero(ring_);
      std::vector<Polynomial> l(inputSize_, zero);
      for (const auto& p : parts) {
        Polynomial m = rep.unit.mulTerm(p.coeff, p.shift);
        for (std::size_t j = 0; j < inputSize_; ++j) {
          if (!lifts[p.index][j].isZero()) l[j] += m * lifts[p.index][j];
        }
      }
      for (std::size_t i = 0; i < rep.coeffs.size(); ++i) {
        if (rep.coeffs[i].isZero()) continue;
        for (std::size_t j = 0; j < inputSize_; ++j) {
          if (!lifts[i][j].isZero()) l[j] -= rep.coeffs[i] * lifts[i][j];
        }
      }
      lifts.push_back(std::move(l));
    }
    G.push_back(std::move(rep.remainder));
    return true;
  }

  Basis finish() && {
    Basis b{ring_, std::move(G), std::move(lifts), true, false};
    return b;
  }

  std::vector<ExponentVector> leadingMonomials() const {
    std::vector<ExponentVector> out;
    out.reserve(G.size());
    for (const auto& g : G) out.push_back(g.leadingMonomial());
    return out;
  }

  std::vector<Polynomial> G;
  std::vector<std::vector<Polynomial>> lifts;

 private:
  PolyRingPtr ring_;
  DriverOptions options_;
  std::size_t inputSize_;
  std::size_t steps_ = 0;
};

std::vector<Part> partsOf(const SyzygyVector& v) {
  std::vector<Part> parts;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (v.coords[i].isZero()) continue;
    const Term& t = v.coords[i].leadingTerm();
    parts.push_back({i, t.coeff, t.exp});
  }
  return parts;
}

// Syzygies of LT(G[0..k]) coming from saturated subsets containing k whose
// k-th coordinate is nonzero.
std::vector<std::vector<Part>> syzygiesInvolving(const std::vector<Polynomial>& G, std::size_t k) {
  const Ring& R = G.front().ring()->coeffs();
  std::vector<ExponentVector> lms;
  for (std::size_t i = 0; i <= k; ++i) lms.push_back(G[i].leadingMonomial());
  std::vector<std::vector<Part>> out;
  for (const auto& J : saturatedSubsetsContaining(lms, k)) {
    std::vector<Scalar> cs;
    for (std::size_t j : J.indices) cs.push_back(G[j].leadingCoeff());
    for (const auto& b : syzGenerators(R, cs)) {
      if (b.back() == 0) continue;  // k is the largest index of J
      std::vector<Part> parts;
      for (std::size_t x = 0; x < J.indices.size(); ++x) {
        if (b[x] == 0) continue;
        const std::size_t j = J.indices[x];
        parts.push_back({j, b[x], monomialQuotient(J.lcm, lms[j])});
      }
      out.push_back(std::move(parts));
    }
  }
  return out;
}

}  // namespace

const char* routeName(Route route) noexcept {
  switch (route) {
    case Route::Generic: return "generic";
    case Route::Moeller: return "moeller";
    case Route::Homogenization: return "homog";
    case Route::PID: return "pid";
  }
  return "?";
}

Basis makeBasis(std::span<const Polynomial> gens) {
  if (gens.empty()) throw Error(Errc::EmptyInput, "no generators");
  Basis b{gens.front().ring(), {gens.begin(), gens.end()}, {}, false, false};
  return b;
}

std::vector<Term> leadingIdeal(const Basis& G) {
  std::vector<Term> out;
  out.reserve(G.gens.size());
  for (const auto& g : G.gens) out.push_back(g.leadingTerm());
  return out;
}

bool termInLeadingIdeal(const Term& t, const Basis& G) { return termInLeadingIdeal(t, std::span(G.gens)); }

bool sameLeadingIdeal(std::span<const Polynomial> A, std::span<const Polynomial> B) {
  for (const auto& a : A) {
    if (!a.isZero() && !termInLeadingIdeal(a.leadingTerm(), B)) return false;
  }
  for (const auto& b : B) {
    if (!b.isZero() && !termInLeadingIdeal(b.leadingTerm(), A)) return false;
  }
  return true;
}

bool satisfiesSyzygyCriterion(std::span<const Polynomial> G, const DriverOptions& options) {
  validateInput(G);
  std::vector<Term> lts;
  for (const auto& g : G) lts.push_back(g.leadingTerm());
  NormalFormOptions nfo;
  nfo.iterationLimit = options.iterationLimit;
  nfo.certificate = false;
  for (const auto& v : homogeneousSyzygyBasis(lts, G.front().ring())) {
    Polynomial comb(G.front().ring());
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!v.coords[i].isZero()) comb += v.coords[i] * G[i];
    }
    if (!normalForm(comb, G, nfo).remainder.isZero()) return false;
  }
  return true;
}

Basis standardBasisGeneric(std::span<const Polynomial> F, const DriverOptions& options) {
  validateInput(F);
  Builder b(F, options);
  std::deque<std::vector<Part>> queue;
  {
    std::vector<Term> lts;
    for (const auto& f : F) lts.push_back(f.leadingTerm());
    for (const auto& v : homogeneousSyzygyBasis(lts, F.front().ring())) queue.push_back(partsOf(v));
  }
  while (!queue.empty()) {
    std::vector<Part> s = std::move(queue.front());
    queue.pop_front();
    if (b.reduceAndAdd(s)) {
      for (auto& p : syzygiesInvolving(b.G, b.G.size() - 1)) queue.push_back(std::move(p));
    }
  }
  return std::move(b).finish();
}

Basis standardBasisMoeller(std::span<const Polynomial> F, const DriverOptions& options) {
  validateInput(F);
  Builder b(F, options);
  const Ring& R = F.front().ring()->coeffs();
  for (std::size_t sigma = 0; sigma < b.G.size(); ++sigma) {
    const std::vector<ExponentVector> lms = b.leadingMonomials();
    for (const auto& J : saturatedSubsetsContaining(std::span(lms).first(sigma + 1), sigma)) {
      std::vector<std::size_t> others;
      std::vector<Scalar> otherLcs;
      for (std::size_t j : J.indices) {
        if (j == sigma) continue;
        others.push_back(j);
        otherLcs.push_back(b.G[j].leadingCoeff());
      }
      const Scalar lcSigma = b.G[sigma].leadingCoeff();
      for (const auto& q : quotientIdealGens(R, otherLcs, lcSigma)) {
        if (q == 0) continue;
        // sum b_j LC(f_j) + q LC(f_sigma) = 0
        const Scalar target = R.neg(R.mul(q, lcSigma));
        CoeffVector bj = others.empty() ? CoeffVector{} : lift(R, target, otherLcs);
        if (others.empty() && target != 0) continue;
        std::vector<Part> parts;
        for (std::size_t x = 0; x < others.size(); ++x) {
          if (bj[x] == 0) continue;
          parts.push_back({others[x], bj[x], monomialQuotient(J.lcm, lms[others[x]])});
        }
        parts.push_back({sigma, q, monomialQuotient(J.lcm, lms[sigma])});
        b.reduceAndAdd(parts);
      }
    }
  }
  return std::move(b).finish();
}

// Drops, from the back, elements whose leading term lies in the leading ideal
// of the remaining ones. L(G) is unchanged, so G stays a standard basis.
static void pruneRedundant(Basis& B) {
  std::vector<bool> keep(B.gens.size(), true);
  for (std::size_t i = B.gens.size(); i-- > 0;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < B.gens.size(); ++j) {
      if (j != i && keep[j]) others.push_back(B.gens[j]);
    }
    if (termInLeadingIdeal(B.gens[i].leadingTerm(), std::span<const Polynomial>(others))) keep[i] = false;
  }
  Basis out{B.ring, {}, {}, B.isStandard, B.isStrong};
  for (std::size_t i = 0; i < B.gens.size(); ++i) {
    if (!keep[i]) continue;
    out.gens.push_back(std::move(B.gens[i]));
    if (B.hasLifts()) out.lifts.push_back(std::move(B.lifts[i]));
  }
  B = std::move(out);
}

Basis standardBasisViaHomogenization(std::span<const Polynomial> F, const DriverOptions& options) {
  validateInput(F);
  const PolyRingPtr& base = F.front().ring();
  const PolyRingPtr hom = homogenizedRing(base);
  std::vector<Polynomial> Fh;
  Fh.reserve(F.size());
  for (const auto& f : F) Fh.push_back(homogenize(f, hom));

  Route engine = options.homogenizationEngine.value_or(base->coeffs().isPID() ? Route::PID : Route::Moeller);
  if (engine == Route::Homogenization) engine = Route::Moeller;
  Basis H = standardBasis(Fh, engine, options);

  Basis out{base, {}, {}, true, false};
  for (std::size_t i = 0; i < H.gens.size(); ++i) {
    out.gens.push_back(dehomogenize(H.gens[i], base));
    if (H.hasLifts()) {
      std::vector<Polynomial> dl;
      for (const auto& p : H.lifts[i]) dl.push_back(dehomogenize(p, base));
      out.lifts.push_back(std::move(dl));
    }
  }
  // The homogenized basis is far from minimal.
  pruneRedundant(out);
  return out;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f, g);
  const Ring& R = f.ring()->coeffs();
  if (!R.isPID()) throw Error(Errc::RingNotPID, "spoly needs a principal ideal domain");
  if (f.isZero() || g.isZero()) throw Error(Errc::ZeroPolynomial, "spoly of the zero polynomial");
  const Term& a = f.leadingTerm();
  const Term& b = g.leadingTerm();
  const Scalar c = coefficientLcm(R, a.coeff, b.coeff);
  const ExponentVector gamma = monomialLcm(a.exp, b.exp);
  return f.mulTerm(*R.divide(c, a.coeff), monomialQuotient(gamma, a.exp)) -
         g.mulTerm(*R.divide(c, b.coeff), monomialQuotient(gamma, b.exp));
}

Basis standardBasisPID(std::span<const Polynomial> F, const DriverOptions& options) {
  validateInput(F);
  const Ring& R = F.front().ring()->coeffs();
  if (!R.isPID()) throw Error(Errc::RingNotPID, "the s-polynomial route needs a principal ideal domain");
  Builder b(F, options);
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < b.G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Term& a = b.G[i].leadingTerm();
    const Term& c = b.G[j].leadingTerm();
    const Scalar l = coefficientLcm(R, a.coeff, c.coeff);
    const ExponentVector gamma = monomialLcm(a.exp, c.exp);
    std::vector<Part> parts{{i, *R.divide(l, a.coeff), monomialQuotient(gamma, a.exp)},
                            {j, R.neg(*R.divide(l, c.coeff)), monomialQuotient(gamma, c.exp)}};
    if (b.reduceAndAdd(parts)) {
      const std::size_t k = b.G.size() - 1;
      for (std::size_t x = 0; x < k; ++x) pairs.emplace_back(x, k);
    }
  }
  Basis out = std::move(b).finish();
  pruneRedundant(out);
  return out;
}

Basis standardBasis(std::span<const Polynomial> F, Route route, const DriverOptions& options) {
  switch (route) {
    case Route::Generic: return standardBasisGeneric(F, options);
    case Route::Moeller: return standardBasisMoeller(F, options);
    case Route::Homogenization: return standardBasisViaHomogenization(F, options);
    case Route::PID: return standardBasisPID(F, options);
  }
  throw Error(Errc::InvalidArgument, "unknown route");
}

std::vector<std::size_t> cleanIndices(std::span<const Polynomial> G) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].isZero()) continue;
    const Ring& R = G[i].ring()->coeffs();
    const Term& t = G[i].leadingTerm();
    if (std::any_of(kept.begin(), kept.end(),
                    [&](std::size_t k) { return termDivides(R, G[k].leadingTerm(), t); })) {
      continue;
    }
    std::erase_if(kept, [&](std::size_t k) { return termDivides(R, t, G[k].leadingTerm()); });
    kept.push_back(i);
  }
  return kept;
}

std::vector<Polynomial> clean(std::span<const Polynomial> G) {
  std::vector<Polynomial> out;
  for (std::size_t i : cleanIndices(G)) out.push_back(G[i]);
  return out;
}

Basis strongStandardBasis(const Basis& G, const DriverOptions& options) {
  validateInput(G.gens);
  const PolyRingPtr& ring = G.gens.front().ring();
  const Ring& R = ring->coeffs();
  if (!R.isPID()) throw Error(Errc::RingNotPID, "strong standard bases need a principal ideal domain");
  if (!G.isStandard && !satisfiesSyzygyCriterion(G.gens, options)) {
    throw Error(Errc::NotAStandardBasis, "input is not a standard basis");
  }
  const bool lifts = G.hasLifts();
  std::vector<ExponentVector> lms;
  for (const auto& g : G.gens) lms.push_back(g.leadingMonomial());

  std::vector<Polynomial> candidates;
  std::vector<std::vector<Polynomial>> candidateLifts;
  const std::size_t m = lifts ? G.lifts.front().size() : 0;
  for (const auto& J : saturatedSubsets(lms)) {
    std::vector<Scalar> cs;
    for (std::size_t j : J.indices) cs.push_back(G.gens[j].leadingCoeff());
    GcdResult gcd = extendedGcdList(R, cs);
    Polynomial fJ(ring);
    std::vector<Polynomial> lJ(m, Polynomial(ring));
    for (std::size_t x = 0; x < J.indices.size(); ++x) {
      if (gcd.bezout[x] == 0) continue;
      const std::size_t j = J.indices[x];
      const ExponentVector shift = monomialQuotient(J.lcm, lms[j]);
      fJ += G.gens[j].mulTerm(gcd.bezout[x], shift);
      for (std::size_t k = 0; k < m; ++k) lJ[k] += G.lifts[j][k].mulTerm(gcd.bezout[x], shift);
    }
    if (fJ.isZero()) continue;
    candidates.push_back(std::move(fJ));
    if (lifts) candidateLifts.push_back(std::move(lJ));
  }
  Basis out{ring, {}, {}, true, true};
  for (std::size_t i : cleanIndices(candidates)) {
    out.gens.push_back(candidates[i]);
    if (lifts) out.lifts.push_back(candidateLifts[i]);
  }
  return out;
}

bool idealMembershipLocalized(const Polynomial& f, const Basis& G, std::size_t iterationLimit) {
  if (!G.isStandard && !satisfiesSyzygyCriterion(G.gens)) {
    throw Error(Errc::NotAStandardBasis, "membership needs a standard basis");
  }
  if (f.isZero()) return true;
  NormalFormOptions nfo;
  nfo.certificate = false;
  nfo.iterationLimit = iterationLimit;
  return normalForm(f, G.gens, nfo).remainder.isZero();
}

bool verifyLifts(const Basis& G, std::span<const Polynomial> input) {
  if (!G.hasLifts()) return false;
  for (std::size_t i = 0; i < G.gens.size(); ++i) {
    if (G.lifts[i].size() != input.size()) return false;
    Polynomial sum(G.ring);
    for (std::size_t j = 0; j < input.size(); ++j) {
      if (!G.lifts[i][j].isZero()) sum += G.lifts[i][j] * input[j];
    }
    if (!(sum == G.gens[i])) return false;
  }
  return true;
}

}  // namespace sbasis
