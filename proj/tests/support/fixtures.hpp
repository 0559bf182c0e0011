#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbasis/poly.hpp"

namespace fx {

inline sbasis::PolyRingPtr ring(std::string_view coeffs, std::vector<std::string> vars, std::string_view order,
                                 sbasis::DsVariant variant = sbasis::DsVariant::RevLex) {
  const std::size_t n = vars.size();
  return sbasis::makePolyRing(sbasis::parseRing(coeffs), std::move(vars), sbasis::parseOrdering(order, n, variant));
}

inline sbasis::Polynomial P(const sbasis::PolyRingPtr& r, std::string_view text) {
  return sbasis::parsePolynomial(text, r);
}

inline std::vector<sbasis::Polynomial> Ps(const sbasis::PolyRingPtr& r, std::initializer_list<std::string_view> texts) {
  std::vector<sbasis::Polynomial> out;
  for (auto t : texts) out.push_back(P(r, t));
  return out;
}

inline std::vector<sbasis::Scalar> S(std::initializer_list<long> xs) {
  std::vector<sbasis::Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

/// f == c * g for some unit c of the coefficient ring.
inline bool equalUpToUnit(const sbasis::Polynomial& f, const sbasis::Polynomial& g) {
  if (f.isZero() || g.isZero()) return f.isZero() && g.isZero();
  const auto& R = f.ring()->coeffs();
  auto c = R.divide(f.leadingCoeff(), g.leadingCoeff());
  return c && R.isUnit(*c) && f == g.scaled(*c);
}

// Example inputs shared by several suites.
inline std::vector<std::string> ex46G() { return {"-3x+xy", "y2-2x2y", "6x2-x3y2"}; }
inline std::vector<std::string> ex62F() { return {"-3y+xy", "y2-2x"}; }
inline std::vector<std::string> ex63F() {
  return {"15x2+28y2z6", "3x2y+7yz5", "4xy2-5xz10", "-28y3+35yz11"};
}
inline std::vector<std::string> ex63G() {
  return {"15x2+28y2z6", "3x2y+7yz5", "4xy2-5xz10", "-28y3+35yz11", "35yz5-28y3z6", "28y2z5+15x2z10", "35xz15"};
}
inline std::vector<std::string> ex81Input() {
  return {"15x2", "3x2y+7yz5", "4xy2-5xz10", "28y3", "28y2z5", "35yz5", "35xz15"};
}
inline std::vector<std::string> ex81Printed() {
  return {"15x2", "3x2y+7yz5", "4xy2-5xz10", "x2y2-7y2z5-5x2z10", "28y3",
          "35yz5", "x2yz5+84yz10", "7y2z5", "35xz15", "5x2z15"};
}

inline std::vector<sbasis::Polynomial> parseAll(const sbasis::PolyRingPtr& r, const std::vector<std::string>& texts) {
  std::vector<sbasis::Polynomial> out;
  for (const auto& t : texts) out.push_back(P(r, t));
  return out;
}

}  // namespace fx
