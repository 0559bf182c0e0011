#include "sbasis/normalform.hpp"

#include <algorithm>
#include <numeric>

#include "sbasis/error.hpp"

namespace sbasis {
namespace {

// A member of the reducer set T together with how it is expressed through
// the input: poly = p*f + sum q_i*g_i.
struct Reducer {
  Polynomial poly;
  int ecart;
  Polynomial p;
  std::vector<Polynomial> q;
};

std::optional<ReductionCandidate> pickFromPrefix(std::span<const Reducer* const> T, const Polynomial& h) {
  const Ring& R = h.ring()->coeffs();
  const Term& lt = h.leadingTerm();
  std::vector<std::size_t> divisors;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (divides(T[i]->poly.leadingMonomial(), lt.exp)) divisors.push_back(i);
  }
  if (divisors.empty()) return std::nullopt;
  std::stable_sort(divisors.begin(), divisors.end(),
                   [&](std::size_t a, std::size_t b) { return T[a]->ecart < T[b]->ecart; });

  std::vector<Scalar> lcs;
  lcs.reserve(divisors.size());
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    lcs.push_back(T[divisors[k]]->poly.leadingCoeff());
    if (!idealMembership(R, lt.coeff, lcs)) continue;
    CoeffVector c = lift(R, lt.coeff, lcs);
    ReductionCandidate cand{{}, Polynomial(h.ring())};
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      const Polynomial& g = T[divisors[j]]->poly;
      ExponentVector shift = monomialQuotient(lt.exp, g.leadingMonomial());
      cand.value += g.mulTerm(c[j], shift);
      cand.support.push_back({divisors[j], c[j], std::move(shift)});
    }
    return cand;
  }
  return std::nullopt;
}

using Pick = std::optional<ReductionCandidate> (*)(std::span<const Reducer* const>, const Polynomial&);

std::optional<ReductionCandidate> pickSingleDivisor(std::span<const Reducer* const> T, const Polynomial& h) {
  const Ring& R = h.ring()->coeffs();
  const Term& lt = h.leadingTerm();
  std::optional<std::size_t> best;
  Scalar bestQ;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (best && T[i]->ecart >= T[*best]->ecart) continue;
    auto q = termQuotient(R, lt, T[i]->poly.leadingTerm());
    if (q) {
      best = i;
      bestQ = q->coeff;
    }
  }
  if (!best) return std::nullopt;
  const Polynomial& g = T[*best]->poly;
  ExponentVector shift = monomialQuotient(lt.exp, g.leadingMonomial());
  ReductionCandidate cand{{}, g.mulTerm(bestQ, shift)};
  cand.support.push_back({*best, bestQ, std::move(shift)});
  return cand;
}

StandardRepresentation runNormalForm(const Polynomial& f, std::span<const Polynomial> G,
                                     const NormalFormOptions& options, NormalFormStats* stats, Pick pick) {
  const PolyRingPtr& ring = f.ring();
  const std::size_t s = G.size();
  for (const auto& g : G) {
    requireSameRing(f, g);
    if (g.isZero()) throw Error(Errc::ZeroPolynomial, "normal form: generator list contains 0");
  }
  if (options.tailReduce) {
    if (!ring->coeffs().isField() || classify(ring->order()) != OrderingClass::Global) {
      throw Error(Errc::RingNotEligible, "tail reduction needs field coefficients and a global ordering");
    }
  }
  const bool track = options.certificate;
  const Polynomial zero(ring);
  const Polynomial one = Polynomial::constant(ring, 1);

  std::vector<Reducer> store;
  store.reserve(s + 16);
  for (std::size_t i = 0; i < s; ++i) {
    Reducer r{G[i], ecart(G[i]), zero, {}};
    if (track) {
      r.q.assign(s, zero);
      r.q[i] = one;
    }
    store.push_back(std::move(r));
  }
  // T holds stable indices into store; store only grows at the back, but
  // reallocation would invalidate pointers, so rebuild the view on growth.
  std::vector<const Reducer*> T;
  auto rebuild = [&] {
    T.clear();
    for (const auto& r : store) T.push_back(&r);
  };
  rebuild();

  Polynomial h = f;
  Polynomial p = track ? one : zero;
  std::vector<Polynomial> q(track ? s : 0, zero);
  Polynomial remainder(ring);  // collects irreducible terms in tail-reduce mode

  NormalFormStats local;
  while (!h.isZero()) {
    if (local.iterations++ >= options.iterationLimit) {
      throw Error(Errc::IterationLimit, "normal form exceeded the iteration limit");
    }
    auto cand = pick(T, h);
    if (!cand) {
      if (!options.tailReduce) break;
      // move the irreducible leading term to the remainder and continue
      Polynomial lead = Polynomial::monomial(ring, h.leadingCoeff(), h.leadingMonomial());
      remainder += lead;
      h -= lead;
      // p*f + sum q*g = h + remainder keeps holding, nothing to update
      continue;
    }
    const int hEcart = ecart(h);
    // tail-reduce mode is global-only, where an enlarged T is never used
    if (!options.tailReduce && ecart(cand->value) > hEcart) {
      ++local.tGrowth;
      Reducer r{h, hEcart, p, q};
      store.push_back(std::move(r));
      rebuild();
    }
    if (track) {
      for (const auto& e : cand->support) {
        const Reducer& red = *T[e.index];
        if (!red.p.isZero()) p -= red.p.mulTerm(e.coeff, e.shift);
        for (std::size_t i = 0; i < s; ++i) {
          if (!red.q[i].isZero()) q[i] -= red.q[i].mulTerm(e.coeff, e.shift);
        }
      }
    }
    h -= cand->value;
  }
  if (stats) *stats = local;

  StandardRepresentation rep{track ? p : one, {}, remainder + h};
  rep.coeffs.reserve(s);
  for (std::size_t i = 0; i < s; ++i) rep.coeffs.push_back(track ? -q[i] : zero);
  return rep;
}

}  // namespace

std::optional<ReductionCandidate> chooseReducer(std::span<const Polynomial> T, const Polynomial& h) {
  if (h.isZero()) throw Error(Errc::ZeroPolynomial, "chooseReducer: h is zero");
  std::vector<Reducer> store;
  store.reserve(T.size());
  for (const auto& g : T) {
    requireSameRing(h, g);
    if (g.isZero()) throw Error(Errc::ZeroPolynomial, "chooseReducer: T contains 0");
    store.push_back(Reducer{g, ecart(g), Polynomial(g.ring()), {}});
  }
  std::vector<const Reducer*> view;
  for (const auto& r : store) view.push_back(&r);
  return pickFromPrefix(view, h);
}

StandardRepresentation normalForm(const Polynomial& f, std::span<const Polynomial> G,
                                  const NormalFormOptions& options, NormalFormStats* stats) {
  return runNormalForm(f, G, options, stats, &pickFromPrefix);
}

StandardRepresentation normalFormDivisorRule(const Polynomial& f, std::span<const Polynomial> G,
                                             const NormalFormOptions& options, NormalFormStats* stats) {
  if (!f.ring()->coeffs().hasSingleDivisorProperty()) {
    throw Error(Errc::RingNotEligible, "divisor-rule normal form needs a field or Z/p^n");
  }
  return runNormalForm(f, G, options, stats, &pickSingleDivisor);
}

bool termInLeadingIdeal(const Term& t, std::span<const Polynomial> G) {
  if (t.coeff == 0) return true;
  if (G.empty()) return false;
  const Ring& R = G.front().ring()->coeffs();
  std::vector<Scalar> lcs;
  for (const auto& g : G) {
    if (g.isZero()) continue;
    if (divides(g.leadingMonomial(), t.exp)) lcs.push_back(g.leadingCoeff());
  }
  return !lcs.empty() && idealMembership(R, t.coeff, lcs);
}

const char* describe(CertificateStatus status) noexcept {
  switch (status) {
    case CertificateStatus::Ok: return "ok";
    case CertificateStatus::ShapeMismatch: return "shape mismatch";
    case CertificateStatus::IdentityFails: return "u*f - sum xi*g - r is not zero";
    case CertificateStatus::UnitNotInLocalization: return "LT(u) is not 1";
    case CertificateStatus::LeadingMonomialNotMaximal: return "LM(u*f - r) differs from max LM(xi)*LM(g)";
    case CertificateStatus::RemainderReducible: return "LT(r) lies in L(G)";
  }
  return "?";
}

CertificateStatus verifyStandardRepresentation(const Polynomial& f, std::span<const Polynomial> G,
                                               const StandardRepresentation& rep) {
  if (rep.coeffs.size() != G.size()) return CertificateStatus::ShapeMismatch;
  const auto same = [&](const Polynomial& g) { return sameRing(f.ring(), g.ring()); };
  if (!same(rep.unit) || !same(rep.remainder) || !std::all_of(G.begin(), G.end(), same) ||
      !std::all_of(rep.coeffs.begin(), rep.coeffs.end(), same)) {
    return CertificateStatus::ShapeMismatch;
  }
  if (!isUnitOfLocalization(rep.unit)) return CertificateStatus::UnitNotInLocalization;

  Polynomial lhs = rep.unit * f - rep.remainder;
  Polynomial combo(f.ring());
  const auto& ord = f.ring()->order();
  std::optional<ExponentVector> maxLm;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (rep.coeffs[i].isZero()) continue;
    if (G[i].isZero()) return CertificateStatus::ShapeMismatch;
    combo += rep.coeffs[i] * G[i];
    ExponentVector lm = monomialMul(rep.coeffs[i].leadingMonomial(), G[i].leadingMonomial());
    if (!maxLm || ord.compare(lm, *maxLm) > 0) maxLm = std::move(lm);
  }
  if (!(lhs == combo)) return CertificateStatus::IdentityFails;
  if (!lhs.isZero()) {
    if (!maxLm || *maxLm != lhs.leadingMonomial()) return CertificateStatus::LeadingMonomialNotMaximal;
  }
  if (!rep.remainder.isZero() && termInLeadingIdeal(rep.remainder.leadingTerm(), G)) {
    return CertificateStatus::RemainderReducible;
  }
  return CertificateStatus::Ok;
}

}  // namespace sbasis
