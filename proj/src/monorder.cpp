#include "sbasis/monorder.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sbasis/error.hpp"

namespace sbasis {
namespace {

bool invertible(const MonomialOrdering::Matrix& m) {
  // Bareiss fraction-free elimination
  const std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

MonomialOrdering::Matrix identity(std::size_t n, std::int64_t diag) {
  MonomialOrdering::Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = diag;
  return m;
}

void requireLength(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "exponent vectors of different length");
  }
}

}  // namespace

MonomialOrdering::MonomialOrdering(Matrix matrix, std::string name)
    : matrix_(std::move(matrix)), name_(std::move(name)) {
  const std::size_t n = matrix_.size();
  if (n == 0) throw Error(Errc::DimensionMismatch, "ordering matrix must be nonempty");
  for (const auto& row : matrix_) {
    if (row.size() != n) throw Error(Errc::DimensionMismatch, "ordering matrix must be square");
  }
  if (!invertible(matrix_)) throw Error(Errc::SingularMatrix, "ordering matrix is not invertible");
}

MonomialOrdering MonomialOrdering::lp(std::size_t n) { return MonomialOrdering(identity(n, 1), "lp"); }
MonomialOrdering MonomialOrdering::ls(std::size_t n) { return MonomialOrdering(identity(n, -1), "ls"); }

MonomialOrdering MonomialOrdering::dp(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  m[0].assign(n, 1);
  for (std::size_t i = 1; i < n; ++i) m[i][n - i] = -1;
  return MonomialOrdering(std::move(m), "dp");
}

MonomialOrdering MonomialOrdering::ds(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  m[0].assign(n, -1);
  for (std::size_t i = 1; i < n; ++i) m[i][n - i] = -1;
  return MonomialOrdering(std::move(m), "ds");
}

MonomialOrdering MonomialOrdering::Ds(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  m[0].assign(n, -1);
  for (std::size_t i = 1; i < n; ++i) m[i][i - 1] = 1;
  return MonomialOrdering(std::move(m), "Ds");
}

std::strong_ordering MonomialOrdering::compare(std::span<const int> a, std::span<const int> b) const {
  const std::size_t n = matrix_.size();
  for (const auto& row : matrix_) {
    std::int64_t d = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] != b[j]) d += row[j] * (static_cast<std::int64_t>(a[j]) - b[j]);
    }
    if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(std::span<const int> a, std::span<const int> b, const MonomialOrdering& ord) {
  requireLength(a, b);
  if (a.size() != ord.nvars()) {
    throw Error(Errc::DimensionMismatch, "exponent vector length differs from ordering dimension");
  }
  return ord.compare(a, b);
}

OrderingClass classify(const MonomialOrdering& ord) {
  const auto& m = ord.matrix();
  bool allPositive = true;
  bool allNegative = true;
  for (std::size_t col = 0; col < m.size(); ++col) {
    std::int64_t first = 0;
    for (const auto& row : m) {
      if (row[col] != 0) {
        first = row[col];
        break;
      }
    }
    if (first > 0) allNegative = false;
    if (first < 0) allPositive = false;
  }
  if (allPositive) return OrderingClass::Global;
  if (allNegative) return OrderingClass::Local;
  return OrderingClass::Mixed;
}

ExponentVector monomialLcm(std::span<const int> a, std::span<const int> b) {
  requireLength(a, b);
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

bool divides(std::span<const int> a, std::span<const int> b) {
  requireLength(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentVector monomialMul(std::span<const int> a, std::span<const int> b) {
  requireLength(a, b);
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

ExponentVector monomialQuotient(std::span<const int> b, std::span<const int> a) {
  requireLength(a, b);
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[i] - a[i];
  return c;
}

int totalDegree(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

MonomialOrdering liftToHomogenized(const MonomialOrdering& ord) {
  const std::size_t n = ord.nvars();
  MonomialOrdering::Matrix m(n + 1, std::vector<std::int64_t>(n + 1, 0));
  m[0].assign(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i + 1][j + 1] = ord.matrix()[i][j];
  }
  return MonomialOrdering(std::move(m));
}

MonomialOrdering parseOrdering(std::string_view text, std::size_t nvars, DsVariant dsVariant) {
  std::size_t b = 0;
  while (b < text.size() && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  std::size_t e = text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view t = text.substr(b, e - b);
  if (nvars == 0) throw Error(Errc::DimensionMismatch, "ordering needs at least one variable");
  if (t == "lp") return MonomialOrdering::lp(nvars);
  if (t == "ls") return MonomialOrdering::ls(nvars);
  if (t == "dp") return MonomialOrdering::dp(nvars);
  if (t == "Ds") return MonomialOrdering::Ds(nvars);
  if (t == "ds") {
    return dsVariant == DsVariant::RevLex ? MonomialOrdering::ds(nvars) : MonomialOrdering::Ds(nvars);
  }
  if (t.size() < 3 || t[0] != 'M' || t[1] != '(' || t.back() != ')') {
    throw ParseError(b, "unknown ordering '" + std::string(t) + "'");
  }
  MonomialOrdering::Matrix m;
  std::vector<std::int64_t> row;
  std::string body(t.substr(2, t.size() - 3));
  std::size_t i = 0;
  while (i <= body.size()) {
    if (i == body.size() || body[i] == ';') {
      m.push_back(std::move(row));
      row.clear();
      ++i;
      continue;
    }
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '-' || c == '+') ++i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
    if (i == start || (i == start + 1 && (c == '-' || c == '+'))) {
      throw ParseError(b + 2 + start, "expected integer in ordering matrix");
    }
    row.push_back(std::stoll(body.substr(start, i - start)));
  }
  if (m.size() != nvars) {
    throw Error(Errc::DimensionMismatch, "ordering matrix has " + std::to_string(m.size()) +
                                             " rows but there are " + std::to_string(nvars) + " variables");
  }
  return MonomialOrdering(std::move(m));
}

std::string formatOrderingMatrix(const MonomialOrdering& ord) {
  std::ostringstream os;
  os << "M(";
  for (std::size_t i = 0; i < ord.matrix().size(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < ord.matrix()[i].size(); ++j) {
      if (j) os << ' ';
      os << ord.matrix()[i][j];
    }
  }
  os << ')';
  return os.str();
}

std::string formatOrdering(const MonomialOrdering& ord) {
  const std::size_t n = ord.nvars();
  for (const auto& preset : {MonomialOrdering::lp(n), MonomialOrdering::ls(n), MonomialOrdering::dp(n),
                             MonomialOrdering::ds(n), MonomialOrdering::Ds(n)}) {
    if (preset == ord) return preset.name();
  }
  return formatOrderingMatrix(ord);
}

}  // namespace sbasis
