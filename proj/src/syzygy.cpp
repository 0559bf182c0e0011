#include "sbasis/syzygy.hpp"

#include <algorithm>
#include <set>

#include "sbasis/error.hpp"

namespace sbasis {
namespace {

ExponentVector lcmOf(std::span<const std::size_t> J, std::span<const ExponentVector> monomials) {
  ExponentVector l = monomials[J.front()];
  for (std::size_t j : J.subspan(1)) l = monomialLcm(l, monomials[j]);
  return l;
}

bool canonicalLess(const SaturatedSubset& a, const SaturatedSubset& b) {
  if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
  return a.indices < b.indices;
}

// Distinct lcms of nonempty subsets of `pool` joined with `seed` (if any).
std::set<ExponentVector> lcmClosure(std::span<const ExponentVector> monomials, std::size_t poolEnd,
                                    const ExponentVector* seed, std::size_t limit) {
  std::set<ExponentVector> closure;
  if (seed) closure.insert(*seed);
  for (std::size_t j = 0; j < poolEnd; ++j) {
    std::vector<ExponentVector> fresh;
    if (!seed) fresh.push_back(monomials[j]);
    for (const auto& l : closure) fresh.push_back(monomialLcm(l, monomials[j]));
    for (auto& l : fresh) closure.insert(std::move(l));
    if (closure.size() > limit) {
      throw Error(Errc::TooManyGenerators, "too many saturated subsets to enumerate");
    }
  }
  return closure;
}

}  // namespace

std::vector<IndexSet> powerSet(std::size_t n) {
  if (n > 20) throw Error(Errc::TooManyGenerators, "powerSet is limited to n <= 20");
  if (n == 0) return {IndexSet{}};
  if (n == 1) return {IndexSet{}, IndexSet{0}};
  std::vector<IndexSet> S = powerSet(n - 1);
  const std::size_t r = S.size();
  S.push_back(IndexSet{n - 1});
  for (std::size_t i = 1; i < r; ++i) {
    IndexSet K = S[i];
    K.push_back(n - 1);
    S.push_back(std::move(K));
  }
  return S;
}

bool isSaturated(std::span<const std::size_t> J, std::span<const ExponentVector> monomials) {
  if (J.empty()) return false;
  ExponentVector l = lcmOf(J, monomials);
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    if (divides(monomials[j], l) && std::find(J.begin(), J.end(), j) == J.end()) return false;
  }
  return true;
}

SaturatedSubset saturate(std::span<const std::size_t> J, std::span<const ExponentVector> monomials) {
  if (J.empty()) throw Error(Errc::EmptyInput, "cannot saturate the empty set");
  for (std::size_t j : J) {
    if (j >= monomials.size()) throw Error(Errc::InvalidArgument, "index out of range");
  }
  SaturatedSubset out{{}, lcmOf(J, monomials)};
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    if (divides(monomials[j], out.lcm)) out.indices.push_back(j);
  }
  return out;
}

std::vector<SaturatedSubset> saturatedSubsets(std::span<const ExponentVector> monomials, std::size_t limit) {
  std::vector<SaturatedSubset> out;
  for (auto& l : lcmClosure(monomials, monomials.size(), nullptr, limit)) {
    SaturatedSubset s{{}, l};
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      if (divides(monomials[j], l)) s.indices.push_back(j);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

std::vector<SaturatedSubset> saturatedSubsetsContaining(std::span<const ExponentVector> monomials,
                                                        std::size_t sigma, std::size_t limit) {
  if (sigma >= monomials.size()) throw Error(Errc::InvalidArgument, "index out of range");
  std::vector<SaturatedSubset> out;
  for (auto& l : lcmClosure(monomials, sigma, &monomials[sigma], limit)) {
    SaturatedSubset s{{}, l};
    for (std::size_t j = 0; j <= sigma; ++j) {
      if (divides(monomials[j], l)) s.indices.push_back(j);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), canonicalLess);
  return out;
}

std::vector<SyzygyVector> homogeneousSyzygyBasis(std::span<const Term> terms, const PolyRingPtr& ring) {
  for (const auto& t : terms) {
    if (t.coeff == 0) throw Error(Errc::ZeroPolynomial, "syzygies of a zero term");
  }
  std::vector<ExponentVector> monomials;
  monomials.reserve(terms.size());
  for (const auto& t : terms) monomials.push_back(t.exp);

  const Ring& R = ring->coeffs();
  std::vector<SyzygyVector> out;
  for (const auto& J : saturatedSubsets(monomials)) {
    std::vector<Scalar> cs;
    for (std::size_t j : J.indices) cs.push_back(terms[j].coeff);
    for (const auto& b : syzGenerators(R, cs)) {
      SyzygyVector v{std::vector<Polynomial>(terms.size(), Polynomial(ring)), J.lcm};
      bool nonzero = false;
      for (std::size_t k = 0; k < J.indices.size(); ++k) {
        if (b[k] == 0) continue;
        const std::size_t j = J.indices[k];
        v.coords[j] = Polynomial::monomial(ring, b[k], monomialQuotient(J.lcm, monomials[j]));
        nonzero = true;
      }
      if (nonzero) out.push_back(std::move(v));
    }
  }
  return out;
}

std::optional<ExponentVector> isHomogeneousSyzygy(std::span<const Polynomial> v, std::span<const Term> terms) {
  if (v.size() != terms.size() || v.empty()) return std::nullopt;
  const PolyRingPtr& ring = v.front().ring();
  const Ring& R = ring->coeffs();
  std::optional<ExponentVector> degree;
  Scalar sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].isZero()) continue;
    if (v[i].size() != 1) return std::nullopt;
    const Term& t = v[i].leadingTerm();
    ExponentVector d = monomialMul(t.exp, terms[i].exp);
    if (degree && *degree != d) return std::nullopt;
    degree = std::move(d);
    sum = R.add(sum, R.mul(t.coeff, terms[i].coeff));
  }
  if (!degree || sum != 0) return std::nullopt;
  return degree;
}

}  // namespace sbasis
