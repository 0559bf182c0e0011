#include "sbasis/coeffring.hpp"

#include <algorithm>
#include <cctype>

#include "sbasis/error.hpp"

namespace sbasis {
namespace {

using IntVector = std::vector<mpz_class>;

mpz_class numer(const Scalar& a) { return a.get_num(); }

mpz_class modPositive(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

mpz_class gcdOf(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

struct Bezout2 {
  mpz_class s, t, g;  // a*s + n*t == g
};

// Euclid in the shape of the SINGULAR helper specialGCD2: the remainder is
// taken nonnegative and the cofactors are unwound from the quotient stack.
Bezout2 bezoutPair(const mpz_class& a0, const mpz_class& n0) {
  std::vector<mpz_class> quotients;
  mpz_class a = a0, n = n0;
  Bezout2 r;
  for (;;) {
    if (n == 0) {
      r = {1, 0, a};
      break;
    }
    mpz_class x = modPositive(a, abs(n));
    if (x == 0) {
      r = {0, 1, n};
      break;
    }
    quotients.push_back((a - x) / n);
    a = std::move(n);
    n = std::move(x);
  }
  for (auto q = quotients.rbegin(); q != quotients.rend(); ++q) {
    mpz_class s = r.t;
    r.t = r.s - *q * r.t;
    r.s = std::move(s);
  }
  return r;
}

// Bezout data for a list, accumulated left to right like specialGCD.
// The gcd is returned nonnegative.
std::pair<mpz_class, IntVector> bezoutList(const IntVector& xs) {
  IntVector coeffs(xs.size(), 0);
  if (xs.empty()) return {0, coeffs};
  mpz_class g = xs[0];
  coeffs[0] = 1;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Bezout2 b = bezoutPair(g, xs[i]);
    for (std::size_t j = 0; j < i; ++j) coeffs[j] *= b.s;
    coeffs[i] = b.t;
    g = b.g;
  }
  if (g < 0) {
    g = -g;
    for (auto& c : coeffs) c = -c;
  }
  return {g, coeffs};
}

// Shrinks cs[i] (i < last) into a symmetric residue range by trading
// multiples of the pair syzygy with the last generator; sum cs*xs is kept.
void sizeReduce(const IntVector& xs, IntVector& cs) {
  const std::size_t last = xs.size() - 1;
  if (xs[last] == 0) return;
  for (std::size_t i = 0; i < last; ++i) {
    if (xs[i] == 0) {
      cs[i] = 0;
      continue;
    }
    const mpz_class d = gcdOf(xs[i], xs[last]);
    const mpz_class step = abs(mpz_class(xs[last] / d));
    mpz_class r = modPositive(cs[i], step);
    if (2 * r > step) r -= step;
    const mpz_class t = (cs[i] - r) / step;
    // cs[i]*xs[i] + cs[last]*xs[last] unchanged: xs[i]*step == +-xs[last]*(xs[i]/d)
    cs[last] += t * step * xs[i] / xs[last];
    cs[i] = r;
  }
}

mpz_class gcdList(const IntVector& xs) {
  mpz_class g = 0;
  for (const auto& x : xs) g = gcdOf(g, x);
  return g;
}

// Basis of the integer lattice { b : sum xs[i]*b[i] == 0 }, read off from a
// unimodular column transform taking xs to (g, 0, ..., 0).
std::vector<IntVector> integerKernel(const IntVector& xs) {
  const std::size_t m = xs.size();
  std::vector<IntVector> cols(m, IntVector(m, 0));
  for (std::size_t i = 0; i < m; ++i) cols[i][i] = 1;
  IntVector a = xs;
  for (std::size_t j = 1; j < m; ++j) {
    if (a[j] == 0) continue;
    if (a[0] == 0) {
      std::swap(a[0], a[j]);
      std::swap(cols[0], cols[j]);
      continue;
    }
    Bezout2 b = bezoutPair(a[0], a[j]);
    mpz_class p = a[j] / b.g;
    mpz_class q = a[0] / b.g;
    IntVector c0(m), cj(m);
    for (std::size_t k = 0; k < m; ++k) {
      c0[k] = b.s * cols[0][k] + b.t * cols[j][k];
      cj[k] = -p * cols[0][k] + q * cols[j][k];
    }
    cols[0] = std::move(c0);
    cols[j] = std::move(cj);
    a[0] = b.g;
    a[j] = 0;
  }
  if (a[0] == 0) return cols;
  return {cols.begin() + 1, cols.end()};
}

mpz_class modInverse(const mpz_class& a, const mpz_class& m) {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(Errc::InvalidArgument, "element is not invertible");
  }
  return inv;
}

bool isPrime(const mpz_class& m) { return mpz_probab_prime_p(m.get_mpz_t(), 40) > 0; }

bool isPrimePower(const mpz_class& m) {
  mpz_class p = 2;
  mpz_class rest = m;
  // smallest prime factor, then check rest is a power of it
  while (p * p <= rest) {
    if (rest % p == 0) break;
    ++p;
  }
  if (p * p > rest) return isPrime(rest);
  while (rest % p == 0) rest /= p;
  return rest == 1;
}

IntVector liftsOf(const Ring& ring, std::span<const Scalar> xs) {
  IntVector out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    if (!ring.contains(x)) {
      throw Error(Errc::MixedRing, "element " + formatScalar(x) + " is not in " + ring.describe());
    }
    out.push_back(numer(x));
  }
  return out;
}

void checkMembers(const Ring& ring, std::span<const Scalar> xs) {
  for (const auto& x : xs) {
    if (!ring.contains(x)) {
      throw Error(Errc::MixedRing, "element " + formatScalar(x) + " is not in " + ring.describe());
    }
  }
}

}  // namespace

Ring Ring::integers() { return Ring(RingKind::Integers, 0); }
Ring Ring::rationals() { return Ring(RingKind::Rationals, 0); }

Ring Ring::integersMod(const mpz_class& modulus) {
  if (modulus < 2) throw Error(Errc::InvalidArgument, "modulus must be at least 2");
  return Ring(RingKind::IntegersMod, modulus);
}

bool Ring::isField() const {
  return kind_ == RingKind::Rationals || (kind_ == RingKind::IntegersMod && isPrime(modulus_));
}

bool Ring::isDomain() const { return kind_ == RingKind::Integers || isField(); }

bool Ring::isPID() const { return isDomain(); }

bool Ring::hasSingleDivisorProperty() const {
  return kind_ == RingKind::Rationals || (kind_ == RingKind::IntegersMod && isPrimePower(modulus_));
}

bool Ring::contains(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Rationals: return true;
    case RingKind::Integers: return a.get_den() == 1;
    case RingKind::IntegersMod: return a.get_den() == 1 && a >= 0 && a.get_num() < modulus_;
  }
  return false;
}

Scalar Ring::normalize(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Rationals: return a;
    case RingKind::Integers:
      if (a.get_den() != 1) {
        throw Error(Errc::MixedRing, "coefficient " + formatScalar(a) + " is not an integer");
      }
      return a;
    case RingKind::IntegersMod: {
      mpz_class num = modPositive(a.get_num(), modulus_);
      if (a.get_den() == 1) return Scalar(num);
      if (gcdOf(a.get_den(), modulus_) != 1) {
        throw Error(Errc::MixedRing,
                    "coefficient " + formatScalar(a) + " has a denominator not invertible mod " +
                        modulus_.get_str());
      }
      return Scalar(modPositive(num * modInverse(a.get_den(), modulus_), modulus_));
    }
  }
  return a;
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  if (kind_ != RingKind::IntegersMod) return a + b;
  mpz_class s = numer(a) + numer(b);
  if (s >= modulus_) s -= modulus_;
  return Scalar(s);
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ != RingKind::IntegersMod) return a - b;
  mpz_class s = numer(a) - numer(b);
  if (s < 0) s += modulus_;
  return Scalar(s);
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ != RingKind::IntegersMod) return a * b;
  return Scalar(mpz_class(numer(a) * numer(b) % modulus_));
}

Scalar Ring::neg(const Scalar& a) const {
  if (kind_ != RingKind::IntegersMod) return -a;
  return a == 0 ? a : Scalar(modulus_ - numer(a));
}

bool Ring::isUnit(const Scalar& a) const {
  switch (kind_) {
    case RingKind::Rationals: return a != 0;
    case RingKind::Integers: return a == 1 || a == -1;
    case RingKind::IntegersMod: return gcdOf(numer(a), modulus_) == 1;
  }
  return false;
}

std::optional<Scalar> Ring::divide(const Scalar& a, const Scalar& b) const {
  if (b == 0) {
    if (a == 0) return Scalar(0);
    return std::nullopt;
  }
  switch (kind_) {
    case RingKind::Rationals: return Scalar(a / b);
    case RingKind::Integers: {
      if (numer(a) % numer(b) != 0) return std::nullopt;
      return Scalar(mpz_class(numer(a) / numer(b)));
    }
    case RingKind::IntegersMod: {
      mpz_class g = gcdOf(numer(b), modulus_);
      if (numer(a) % g != 0) return std::nullopt;
      mpz_class m = modulus_ / g;
      if (m == 1) return Scalar(0);
      mpz_class q = (numer(a) / g) * modInverse(mpz_class(numer(b) / g), m);
      return Scalar(modPositive(q, m));
    }
  }
  return std::nullopt;
}

std::string Ring::describe() const {
  switch (kind_) {
    case RingKind::Integers: return "integer";
    case RingKind::Rationals: return "rationals";
    case RingKind::IntegersMod: return "mod " + modulus_.get_str();
  }
  return "?";
}

Ring parseRing(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t == "integer" || t == "integers" || t == "ZZ" || t == "Z") return Ring::integers();
  if (t == "rationals" || t == "rational" || t == "QQ" || t == "Q" || t == "0") {
    return Ring::rationals();
  }
  std::string digits;
  if (t.rfind("mod", 0) == 0) {
    digits = t.substr(3);
  } else if (t.rfind("Z/", 0) == 0) {
    digits = t.substr(2);
  }
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return Ring::integersMod(mpz_class(digits));
  }
  throw ParseError(0, "unknown coefficient ring '" + std::string(text) + "'");
}

std::vector<CoeffVector> syzGenerators(const Ring& ring, std::span<const Scalar> elems) {
  if (elems.empty()) throw Error(Errc::EmptyInput, "syzGenerators needs at least one element");
  checkMembers(ring, elems);
  const std::size_t m = elems.size();
  std::vector<CoeffVector> out;

  switch (ring.kind()) {
    case RingKind::Rationals: {
      auto pivot = std::find_if(elems.begin(), elems.end(), [](const Scalar& a) { return a != 0; });
      if (pivot == elems.end()) {
        for (std::size_t i = 0; i < m; ++i) {
          CoeffVector v(m, 0);
          v[i] = 1;
          out.push_back(std::move(v));
        }
        return out;
      }
      const std::size_t p = static_cast<std::size_t>(pivot - elems.begin());
      for (std::size_t j = 0; j < m; ++j) {
        if (j == p) continue;
        CoeffVector v(m, 0);
        v[j] = 1;
        v[p] = -elems[j] / elems[p];
        out.push_back(std::move(v));
      }
      return out;
    }
    case RingKind::Integers: {
      for (auto& col : integerKernel(liftsOf(ring, elems))) {
        CoeffVector v;
        v.reserve(m);
        for (auto& c : col) v.emplace_back(c);
        out.push_back(std::move(v));
      }
      return out;
    }
    case RingKind::IntegersMod: {
      const mpz_class& mod = ring.modulus();
      IntVector xs = liftsOf(ring, elems);
      xs.push_back(mod);
      auto add = [&](CoeffVector v) {
        if (std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c == 0; })) return;
        if (std::find(out.begin(), out.end(), v) != out.end()) return;
        out.push_back(std::move(v));
      };
      for (auto& col : integerKernel(xs)) {
        CoeffVector v;
        v.reserve(m);
        for (std::size_t i = 0; i < m; ++i) v.emplace_back(modPositive(col[i], mod));
        add(std::move(v));
      }
      for (std::size_t i = 0; i < m; ++i) {
        CoeffVector v(m, 0);
        v[i] = modPositive(mpz_class(mod / gcdOf(xs[i], mod)), mod);
        add(std::move(v));
      }
      return out;
    }
  }
  return out;
}

Scalar idealGenerator(const Ring& ring, std::span<const Scalar> gens) {
  checkMembers(ring, gens);
  switch (ring.kind()) {
    case RingKind::Rationals:
      return std::any_of(gens.begin(), gens.end(), [](const Scalar& a) { return a != 0; }) ? 1 : 0;
    case RingKind::Integers: return Scalar(gcdList(liftsOf(ring, gens)));
    case RingKind::IntegersMod: {
      IntVector xs = liftsOf(ring, gens);
      xs.push_back(ring.modulus());
      return Scalar(modPositive(gcdList(xs), ring.modulus()));
    }
  }
  return 0;
}

bool idealMembership(const Ring& ring, const Scalar& a, std::span<const Scalar> gens) {
  checkMembers(ring, std::span<const Scalar>(&a, 1));
  checkMembers(ring, gens);
  if (a == 0) return true;
  switch (ring.kind()) {
    case RingKind::Rationals: return idealGenerator(ring, gens) != 0;
    case RingKind::Integers: {
      mpz_class g = gcdList(liftsOf(ring, gens));
      return g != 0 && numer(a) % g == 0;
    }
    case RingKind::IntegersMod: {
      IntVector xs = liftsOf(ring, gens);
      xs.push_back(ring.modulus());
      return numer(a) % gcdList(xs) == 0;
    }
  }
  return false;
}

CoeffVector lift(const Ring& ring, const Scalar& a, std::span<const Scalar> gens) {
  checkMembers(ring, std::span<const Scalar>(&a, 1));
  checkMembers(ring, gens);
  CoeffVector out(gens.size(), 0);
  if (a == 0) return out;
  const auto notInIdeal = [&] {
    return Error(Errc::NotInIdeal, formatScalar(a) + " is not in the ideal of the given generators");
  };

  switch (ring.kind()) {
    case RingKind::Rationals: {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] != 0) {
          out[i] = a / gens[i];
          return out;
        }
      }
      throw notInIdeal();
    }
    case RingKind::Integers: {
      IntVector xs = liftsOf(ring, gens);
      mpz_class g = 0;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        g = gcdOf(g, xs[k]);
        if (g != 0 && numer(a) % g == 0) {
          IntVector prefix(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k + 1));
          auto [gg, coeffs] = bezoutList(prefix);
          mpz_class scale = numer(a) / gg;
          for (auto& c : coeffs) c *= scale;
          sizeReduce(prefix, coeffs);
          for (std::size_t i = 0; i <= k; ++i) out[i] = Scalar(coeffs[i]);
          return out;
        }
      }
      throw notInIdeal();
    }
    case RingKind::IntegersMod: {
      const mpz_class& mod = ring.modulus();
      IntVector xs = liftsOf(ring, gens);
      mpz_class g = mod;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        g = gcdOf(g, xs[k]);
        if (numer(a) % g == 0) {
          IntVector prefix(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(k + 1));
          prefix.push_back(mod);
          auto [gg, coeffs] = bezoutList(prefix);
          mpz_class scale = numer(a) / gg;
          for (std::size_t i = 0; i <= k; ++i) out[i] = Scalar(modPositive(coeffs[i] * scale, mod));
          return out;
        }
      }
      throw notInIdeal();
    }
  }
  throw notInIdeal();
}

GcdResult extendedGcdList(const Ring& ring, std::span<const Scalar> elems) {
  if (elems.empty()) throw Error(Errc::EmptyInput, "extendedGcdList needs at least one element");
  checkMembers(ring, elems);
  if (std::all_of(elems.begin(), elems.end(), [](const Scalar& a) { return a == 0; })) {
    throw Error(Errc::EmptyInput, "extendedGcdList of all-zero input");
  }
  GcdResult res;
  res.bezout.assign(elems.size(), 0);
  switch (ring.kind()) {
    case RingKind::Rationals: {
      res.gcd = 1;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] != 0) {
          res.bezout[i] = 1 / elems[i];
          break;
        }
      }
      return res;
    }
    case RingKind::Integers: {
      auto [g, coeffs] = bezoutList(liftsOf(ring, elems));
      res.gcd = g;
      for (std::size_t i = 0; i < coeffs.size(); ++i) res.bezout[i] = coeffs[i];
      return res;
    }
    case RingKind::IntegersMod: {
      const mpz_class& mod = ring.modulus();
      if (ring.isField()) {
        res.gcd = 1;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          if (elems[i] != 0) {
            res.bezout[i] = Scalar(modInverse(numer(elems[i]), mod));
            break;
          }
        }
        return res;
      }
      IntVector xs = liftsOf(ring, elems);
      xs.push_back(mod);
      auto [g, coeffs] = bezoutList(xs);
      res.gcd = Scalar(modPositive(g, mod));
      for (std::size_t i = 0; i < elems.size(); ++i) res.bezout[i] = Scalar(modPositive(coeffs[i], mod));
      return res;
    }
  }
  return res;
}

CoeffVector quotientIdealGens(const Ring& ring, std::span<const Scalar> gens, const Scalar& c) {
  checkMembers(ring, gens);
  checkMembers(ring, std::span<const Scalar>(&c, 1));
  switch (ring.kind()) {
    case RingKind::Rationals: {
      if (idealGenerator(ring, gens) != 0 || c == 0) return {Scalar(1)};
      return {};
    }
    case RingKind::Integers: {
      mpz_class g = gcdList(liftsOf(ring, gens));
      if (g == 0) {
        if (c == 0) return {Scalar(1)};
        return {};
      }
      return {Scalar(mpz_class(g / gcdOf(g, numer(c))))};
    }
    case RingKind::IntegersMod: {
      const mpz_class& mod = ring.modulus();
      IntVector xs = liftsOf(ring, gens);
      xs.push_back(mod);
      mpz_class g = gcdList(xs);
      mpz_class b = modPositive(mpz_class(g / gcdOf(g, numer(c))), mod);
      if (b == 0) return {};
      return {Scalar(b)};
    }
  }
  return {};
}

Scalar coefficientLcm(const Ring& ring, const Scalar& a, const Scalar& b) {
  if (!ring.isPID()) throw Error(Errc::RingNotPID, "lcm of coefficients needs a PID");
  if (ring.isField()) return ring.one();
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), numer(a).get_mpz_t(), numer(b).get_mpz_t());
  return Scalar(l);
}

std::string formatScalar(const Scalar& a) { return a.get_str(); }

}  // namespace sbasis
