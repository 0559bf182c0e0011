#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sbasis/error.hpp"
#include "sbasis/syzygy.hpp"

using namespace sbasis;
using fx::P;

namespace {

std::vector<ExponentVector> ex59Monomials() { return {{1, 2, 0}, {1, 1, 1}, {0, 2, 2}}; }

// Predicate check straight from the definition.
bool saturatedByDefinition(const IndexSet& J, const std::vector<ExponentVector>& mons) {
  ExponentVector l(mons.front().size(), 0);
  for (auto j : J) l = monomialLcm(l, mons[j]);
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (divides(mons[i], l) && std::find(J.begin(), J.end(), i) == J.end()) return false;
  return true;
}

std::vector<oracle::GradedVector> gradedAll(const std::vector<SyzygyVector>& vs, const std::vector<Term>& terms) {
  std::vector<oracle::GradedVector> out;
  for (const auto& v : vs) {
    auto g = oracle::graded(v.coords, terms);
    REQUIRE(g);
    CHECK(g->degree == v.degree);
    out.push_back(*g);
  }
  return out;
}

}  // namespace

TEST_SUITE("syzygy") {

TEST_CASE("powerSet examples") {
  CHECK(powerSet(0) == std::vector<IndexSet>{{}});
  CHECK(powerSet(2) == std::vector<IndexSet>{{}, {0}, {1}, {0, 1}});
  for (std::size_t n = 0; n <= 10; ++n) CHECK(powerSet(n).size() == (std::size_t{1} << n));
  CHECK_THROWS_AS(powerSet(21), Error);
}

TEST_CASE("saturate examples") {
  auto mons = ex59Monomials();
  CHECK(saturate(IndexSet{0, 2}, mons).indices == IndexSet{0, 1, 2});
  CHECK(saturate(IndexSet{0, 2}, mons).lcm == ExponentVector{1, 2, 2});
  CHECK(saturate(IndexSet{1}, mons).indices == IndexSet{1});
  CHECK(saturate(IndexSet{0, 1}, mons).indices == IndexSet{0, 1});
  CHECK_FALSE(isSaturated(IndexSet{0, 2}, mons));
  CHECK(isSaturated(IndexSet{0, 1}, mons));
}

TEST_CASE("saturatedSubsets examples") {
  auto mons = ex59Monomials();
  std::vector<IndexSet> got;
  for (const auto& s : saturatedSubsets(mons)) got.push_back(s.indices);
  CHECK(got == std::vector<IndexSet>{{0}, {1}, {2}, {0, 1}, {0, 1, 2}});
  std::vector<ExponentVector> one{{2, 1}};
  CHECK(saturatedSubsets(one).size() == 1);
  std::vector<ExponentVector> dup{{1, 0}, {1, 0}};
  auto d = saturatedSubsets(dup);
  REQUIRE(d.size() == 1);
  CHECK(d[0].indices == IndexSet{0, 1});
}

TEST_CASE("saturatedSubsetsContaining") {
  auto mons = ex59Monomials();
  std::vector<IndexSet> got;
  for (const auto& s : saturatedSubsetsContaining(mons, 2)) got.push_back(s.indices);
  CHECK(got == std::vector<IndexSet>{{2}, {0, 1, 2}});
  got.clear();
  for (const auto& s : saturatedSubsetsContaining(mons, 1)) got.push_back(s.indices);
  CHECK(got == std::vector<IndexSet>{{1}, {0, 1}});
}

TEST_CASE("saturatedSubsets agrees with filtering the power set") {
  oracle::Rng rng(0x5a7);
  std::uniform_int_distribution<int> size(1, 6), nv(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = nv(rng);
    std::vector<ExponentVector> mons;
    for (int i = size(rng); i > 0; --i) mons.push_back(oracle::randomExponent(rng, n, 3));
    std::vector<IndexSet> expected;
    for (const auto& J : powerSet(mons.size()))
      if (!J.empty() && saturatedByDefinition(J, mons)) expected.push_back(J);
    std::sort(expected.begin(), expected.end(), [](const IndexSet& a, const IndexSet& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<IndexSet> got;
    for (const auto& s : saturatedSubsets(mons)) got.push_back(s.indices);
    CHECK(got == expected);
    for (std::size_t sigma = 0; sigma < mons.size(); ++sigma) {
      std::vector<ExponentVector> prefix(mons.begin(), mons.begin() + sigma + 1);
      std::vector<IndexSet> want;
      for (const auto& J : powerSet(sigma + 1))
        if (!J.empty() && J.back() == sigma && saturatedByDefinition(J, prefix)) want.push_back(J);
      std::sort(want.begin(), want.end(), [](const IndexSet& a, const IndexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      std::vector<IndexSet> have;
      for (const auto& s : saturatedSubsetsContaining(mons, sigma)) have.push_back(s.indices);
      CHECK(have == want);
    }
  }
}

TEST_CASE("homogeneousSyzygyBasis examples") {
  auto R = fx::ring("integer", {"x", "y", "z"}, "ds");
  std::vector<Term> terms{{3, {1, 2, 0}}, {7, {1, 1, 1}}, {2, {0, 2, 2}}};
  auto basis = gradedAll(homogeneousSyzygyBasis(terms, R), terms);
  std::vector<oracle::GradedVector> printed;
  for (auto v : {fx::Ps(R, {"-7z", "3y", "0"}), fx::Ps(R, {"-4z2", "2yz", "-x"}), fx::Ps(R, {"-7z2", "3yz", "0"})}) {
    auto g = oracle::graded(v, terms);
    REQUIRE(g);
    printed.push_back(*g);
  }
  for (const auto& v : printed) CHECK(oracle::moduleContains(basis, v, 0));
  for (const auto& v : basis) CHECK(oracle::moduleContains(printed, v, 0));

  std::vector<Term> single{{5, {1, 0, 0}}};
  CHECK(homogeneousSyzygyBasis(single, R).empty());

  auto Q = fx::ring("rationals", {"x", "y"}, "dp");
  std::vector<Term> qt{{1, {2, 0}}, {1, {1, 1}}};
  auto qb = homogeneousSyzygyBasis(qt, Q);
  REQUIRE_FALSE(qb.empty());
  for (const auto& v : qb) {
    auto dot = v.coords[0] * P(Q, "x2") + v.coords[1] * P(Q, "xy");
    CHECK(dot.isZero());
    // over Q every nonzero coefficient vector is a unit multiple; compare degrees
    CHECK(v.degree == ExponentVector{2, 1});
  }
}

TEST_CASE("isHomogeneousSyzygy examples") {
  auto R = fx::ring("integer", {"x", "y", "z"}, "ds");
  std::vector<Term> terms{{3, {1, 2, 0}}, {7, {1, 1, 1}}, {2, {0, 2, 2}}};
  auto d = isHomogeneousSyzygy(fx::Ps(R, {"-7z", "3y", "0"}), terms);
  REQUIRE(d);
  CHECK(*d == ExponentVector{1, 2, 1});
  CHECK_FALSE(isHomogeneousSyzygy(fx::Ps(R, {"1", "0", "0"}), terms));
  CHECK_FALSE(isHomogeneousSyzygy(fx::Ps(R, {"-7z+z2", "3y", "0"}), terms));
  CHECK_FALSE(isHomogeneousSyzygy(fx::Ps(R, {"0", "0", "0"}), terms));
}

TEST_CASE("syzygy bases generate every bounded homogeneous syzygy") {
  oracle::Rng rng(0x5e7);
  std::uniform_int_distribution<int> size(1, 3), nv(1, 3), coeff(-10, 10), pickRing(0, 3);
  const long moduli[] = {0, 4, 8, 12};
  const std::vector<std::string> names{"x", "y", "z"};
  for (int trial = 0; trial < 40; ++trial) {
    const long m = moduli[pickRing(rng)];
    std::vector<std::string> vars(names.begin(), names.begin() + nv(rng));
    auto R = fx::ring(m ? "mod " + std::to_string(m) : "integer", vars, "ds");
    std::vector<Term> terms;
    for (int i = size(rng); i > 0; --i) {
      Scalar c = 0;
      while (c == 0) c = R->coeffs().normalize(coeff(rng));
      terms.push_back({c, oracle::randomExponent(rng, vars.size(), 2)});
    }
    auto basisVecs = homogeneousSyzygyBasis(terms, R);
    for (const auto& v : basisVecs) CHECK(isHomogeneousSyzygy(v.coords, terms));
    auto basis = gradedAll(basisVecs, terms);

    // every degree a with entries <= 4
    const std::size_t n = vars.size();
    ExponentVector a(n, 0);
    for (;;) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < terms.size(); ++i)
        if (divides(terms[i].exp, a)) idx.push_back(i);
      if (!idx.empty()) {
        std::vector<oracle::Int> sub;
        for (auto i : idx) sub.push_back(terms[i].coeff.get_num());
        std::vector<oracle::IntVec> gens;
        for (const auto& g : basis)
          if (divides(g.degree, a)) {
            oracle::IntVec row;
            for (auto i : idx) row.push_back(g.coeffs[i]);
            gens.push_back(row);
          }
        auto why = oracle::checkSyzygyGenerators(sub, m, gens, m ? 0 : 10);
        CHECK_MESSAGE(why.empty(), why);
      }
      std::size_t k = 0;
      while (k < n && a[k] == 4) a[k++] = 0;
      if (k == n) break;
      ++a[k];
    }
  }
}

}  // TEST_SUITE
