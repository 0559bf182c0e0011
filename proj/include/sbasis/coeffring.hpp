#pragma once

// Coefficient rings Z, Z/m and Q with the linear-equation services needed by
// the standard basis machinery: syzygies of a coefficient vector, ideal
// membership, lifting into an ideal, and Bezout data.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sbasis {

/// Exact scalar used by every ring. Integers and residues are kept with
/// denominator 1; residues live in [0, m-1].
using Scalar = mpq_class;
using CoeffVector = std::vector<Scalar>;

enum class RingKind { Integers, IntegersMod, Rationals };

class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  /// Throws InvalidArgument when modulus < 2.
  static Ring integersMod(const mpz_class& modulus);

  RingKind kind() const noexcept { return kind_; }
  /// Zero unless kind() == IntegersMod.
  const mpz_class& modulus() const noexcept { return modulus_; }

  bool isField() const;
  bool isDomain() const;
  /// Z, Q and Z/p.
  bool isPID() const;
  /// a_1 x_1 + ... + a_s x_s = c solvable iff some a_j alone divides c.
  /// True for fields and Z/p^n.
  bool hasSingleDivisorProperty() const;

  bool contains(const Scalar& a) const;
  /// Maps a into canonical form. Residue rings accept any integer; Z rejects
  /// non-integers; residue rings accept a rational only if its denominator
  /// is invertible. Throws MixedRing otherwise.
  Scalar normalize(const Scalar& a) const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  bool isUnit(const Scalar& a) const;
  /// Some q with q*b == a, if one exists.
  std::optional<Scalar> divide(const Scalar& a, const Scalar& b) const;

  /// "integer", "rationals" or "mod <m>" (the job-file spelling).
  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(RingKind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  RingKind kind_;
  mpz_class modulus_;
};

/// Parses the job-file spelling accepted by Ring::describe (also "ZZ", "QQ",
/// "Z/8"). Throws ParseError.
Ring parseRing(std::string_view text);

/// Generators of the R-module of relations b with sum elems[i]*b[i] == 0.
std::vector<CoeffVector> syzGenerators(const Ring& ring, std::span<const Scalar> elems);

bool idealMembership(const Ring& ring, const Scalar& a, std::span<const Scalar> gens);

/// Deterministic b with sum b[i]*gens[i] == a: the shortest prefix of gens
/// whose ideal contains a carries the Bezout data, later entries get 0.
/// Throws NotInIdeal.
CoeffVector lift(const Ring& ring, const Scalar& a, std::span<const Scalar> gens);

struct GcdResult {
  Scalar gcd;
  CoeffVector bezout;
};

/// gcd with sum bezout[i]*elems[i] == gcd. Over Z the gcd is nonnegative;
/// over Z/m it is the canonical residue of the integer generator; over a
/// field it is 1. Throws EmptyInput when every element is zero.
GcdResult extendedGcdList(const Ring& ring, std::span<const Scalar> elems);

/// Principal generator of the ideal <gens> (0 for the zero ideal).
Scalar idealGenerator(const Ring& ring, std::span<const Scalar> gens);

/// Generators of <gens> : <c> = { b : b*c in <gens> }. An empty result
/// denotes the zero ideal.
CoeffVector quotientIdealGens(const Ring& ring, std::span<const Scalar> gens, const Scalar& c);

/// lcm of two nonzero scalars up to a unit (|lcm| over Z, 1 over a field).
/// Only meaningful on PIDs.
Scalar coefficientLcm(const Ring& ring, const Scalar& a, const Scalar& b);

std::string formatScalar(const Scalar& a);

}  // namespace sbasis
