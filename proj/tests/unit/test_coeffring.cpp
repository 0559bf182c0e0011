#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sbasis/coeffring.hpp"
#include "sbasis/error.hpp"

using namespace sbasis;
using fx::S;

namespace {

std::vector<oracle::IntVec> asLattice(const std::vector<CoeffVector>& vs) {
  std::vector<oracle::IntVec> out;
  for (const auto& v : vs) {
    oracle::IntVec row;
    for (const auto& x : v) row.push_back(x.get_num());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<oracle::Int> ints(const CoeffVector& v) {
  std::vector<oracle::Int> out;
  for (const auto& x : v) out.push_back(x.get_num());
  return out;
}

Scalar dot(const Ring& R, const CoeffVector& a, const CoeffVector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = R.add(s, R.mul(a[i], b[i]));
  return s;
}

}  // namespace

TEST_SUITE("coeffring") {

TEST_CASE("ring arithmetic and canonical forms") {
  auto Z8 = Ring::integersMod(8);
  CHECK(Z8.normalize(-3) == 5);
  CHECK(Z8.mul(4, 6) == 0);
  CHECK(Z8.isUnit(3));
  CHECK_FALSE(Z8.isUnit(2));
  CHECK(Z8.hasSingleDivisorProperty());
  CHECK_FALSE(Ring::integersMod(12).hasSingleDivisorProperty());
  CHECK(Ring::integersMod(7).isPID());
  CHECK_FALSE(Ring::integersMod(8).isPID());
  CHECK(Z8.normalize(Scalar(1, 3)) == 3);  // 3 * 3 = 9 = 1 mod 8
  CHECK_THROWS_AS(Ring::integers().normalize(Scalar(1, 2)), Error);
  CHECK_THROWS_AS(Ring::integersMod(1), Error);
  CHECK(parseRing("Z/8") == Z8);
  CHECK(parseRing("QQ") == Ring::rationals());
  CHECK(parseRing(Z8.describe()) == Z8);
}

TEST_CASE("syzGenerators examples") {
  auto Z = Ring::integers();
  {
    auto a = S({3, 7});
    auto gens = syzGenerators(Z, a);
    CHECK(oracle::sameLattice(asLattice(gens), {{7, -3}}));
  }
  {
    auto a = S({5});
    for (const auto& g : syzGenerators(Z, a)) CHECK(g[0] == 0);
  }
  {
    auto Z4 = Ring::integersMod(4);
    auto a = S({2});
    auto gens = syzGenerators(Z4, a);
    CHECK(oracle::checkSyzygyGenerators(ints(a), 4, asLattice(gens), 0).empty());
    // the generated submodule of Z/4 is {0, 2}
    auto lattice = asLattice(gens);
    lattice.push_back({4});
    CHECK(oracle::sameLattice(lattice, {{2}}));
  }
  {
    auto a = S({3, 7, 2});
    auto gens = syzGenerators(Z, a);
    CHECK(oracle::sameLattice(asLattice(gens), {{-4, 2, -1}, {-7, 3, 0}}));
  }
}

TEST_CASE("idealMembership examples") {
  auto Z = Ring::integers();
  CHECK(idealMembership(Z, 1, S({-3, 1})));
  CHECK_FALSE(idealMembership(Z, 4, S({3, 6})));
  CHECK(idealMembership(Ring::rationals(), 0, CoeffVector{}));
  CHECK(idealMembership(Ring::integersMod(12), 4, S({8})));
  CHECK_FALSE(idealMembership(Ring::integersMod(12), 2, S({8})));
}

TEST_CASE("lift examples") {
  auto Z = Ring::integers();
  CHECK(lift(Z, 12, S({3})) == S({4}));
  CHECK(lift(Z, 1, S({-3, 1})) == S({0, 1}));
  auto gens = S({3, 7, 2});
  auto b = lift(Z, 3, gens);
  CHECK(dot(Z, b, gens) == 3);
  CHECK_THROWS_AS(lift(Z, 4, S({3, 6})), Error);
}

TEST_CASE("extendedGcdList examples") {
  auto Z = Ring::integers();
  for (auto elems : {S({3, 7}), S({6, 10, 15}), S({5}), S({0, -4, 6})}) {
    auto r = extendedGcdList(Z, elems);
    CHECK(dot(Z, r.bezout, elems) == r.gcd);
    mpz_class g = 0;
    for (const auto& x : elems) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    CHECK(r.gcd == g);
  }
  CHECK(extendedGcdList(Z, S({5})).bezout == S({1}));
  CHECK(extendedGcdList(Ring::rationals(), S({4, 0})).gcd == 1);
  CHECK_THROWS_AS(extendedGcdList(Z, S({0, 0})), Error);
}

TEST_CASE("quotientIdealGens examples") {
  auto Z = Ring::integers();
  CHECK(oracle::checkQuotientIdeal({3}, 2, 0, ints(quotientIdealGens(Z, S({3}), 2)), 30).empty());
  CHECK(oracle::checkQuotientIdeal({6}, 4, 0, ints(quotientIdealGens(Z, S({6}), 4)), 30).empty());
  auto q = quotientIdealGens(Z, S({6}), 4);
  REQUIRE(q.size() == 1);
  CHECK(abs(q[0]) == 3);
  for (auto R : {Z, Ring::integersMod(12), Ring::rationals()}) {
    auto one = quotientIdealGens(R, S({1}), 5);
    CHECK(idealMembership(R, 1, one));
  }
}

TEST_CASE("coefficientLcm") {
  auto Z = Ring::integers();
  CHECK(coefficientLcm(Z, -3, 1) == 3);
  CHECK(coefficientLcm(Z, 15, 3) == 15);
  CHECK(coefficientLcm(Z, 4, 6) == 12);
  CHECK(coefficientLcm(Ring::rationals(), 4, 6) == 1);
}

TEST_CASE("random syzygy, lift and quotient properties") {
  oracle::Rng rng(0x5eed01);
  std::uniform_int_distribution<int> entry(-20, 20), len(1, 3), pick(0, 3);
  const long moduli[] = {0, 4, 8, 12};
  for (int trial = 0; trial < 60; ++trial) {
    const long m = moduli[pick(rng)];
    Ring R = m ? Ring::integersMod(m) : Ring::integers();
    CoeffVector a;
    for (int i = len(rng); i > 0; --i) a.push_back(R.normalize(entry(rng)));
    auto gens = syzGenerators(R, a);
    for (const auto& g : gens) CHECK(dot(R, g, a) == 0);
    CHECK_MESSAGE(oracle::checkSyzygyGenerators(ints(a), m, asLattice(gens), m ? 0 : 15).empty(), trial);

    Scalar target = R.normalize(entry(rng));
    if (idealMembership(R, target, a)) CHECK(dot(R, lift(R, target, a), a) == R.normalize(target));
    CHECK(idealMembership(R, target, a) == oracle::inIdealInt(target.get_num(), ints(a), m));

    Scalar c = R.normalize(entry(rng));
    CHECK(oracle::checkQuotientIdeal(ints(a), c.get_num(), m, ints(quotientIdealGens(R, a, c)), 40).empty());
  }
}

}  // TEST_SUITE
