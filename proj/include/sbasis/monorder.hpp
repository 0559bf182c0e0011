#pragma once

// Exponent vectors and integer-matrix monomial orderings.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbasis {

using ExponentVector = std::vector<int>;

enum class OrderingClass { Global, Local, Mixed };

/// Tie-break used by the `ds` preset.
enum class DsVariant { RevLex, Lex };

/// x^a > x^b iff the first nonzero entry of M*(a-b) is positive.
class MonomialOrdering {
 public:
  using Matrix = std::vector<std::vector<std::int64_t>>;

  /// Throws DimensionMismatch for a non-square matrix and SingularMatrix when
  /// it is not invertible over Q.
  explicit MonomialOrdering(Matrix matrix, std::string name = {});

  static MonomialOrdering lp(std::size_t n);
  static MonomialOrdering ls(std::size_t n);
  static MonomialOrdering dp(std::size_t n);
  /// Negative degree, reverse lexicographic tie-break.
  static MonomialOrdering ds(std::size_t n);
  /// Negative degree, lexicographic tie-break.
  static MonomialOrdering Ds(std::size_t n);

  std::size_t nvars() const noexcept { return matrix_.size(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  /// Preset tag, empty for a user matrix.
  const std::string& name() const noexcept { return name_; }

  std::strong_ordering compare(std::span<const int> a, std::span<const int> b) const;

  friend bool operator==(const MonomialOrdering& a, const MonomialOrdering& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  Matrix matrix_;
  std::string name_;
};

/// Throws DimensionMismatch when lengths disagree with the ordering.
std::strong_ordering compare(std::span<const int> a, std::span<const int> b,
                             const MonomialOrdering& ord);

OrderingClass classify(const MonomialOrdering& ord);

ExponentVector monomialLcm(std::span<const int> a, std::span<const int> b);
bool divides(std::span<const int> a, std::span<const int> b);
ExponentVector monomialMul(std::span<const int> a, std::span<const int> b);
/// b - a; caller guarantees divides(a, b).
ExponentVector monomialQuotient(std::span<const int> b, std::span<const int> a);
int totalDegree(std::span<const int> a);

/// Ordering on (t, x_1..x_n): first row all ones, then (0 | M). Always global.
MonomialOrdering liftToHomogenized(const MonomialOrdering& ord);

/// `ls | ds | Ds | lp | dp | M(r11 r12 ...; r21 ...)`.
MonomialOrdering parseOrdering(std::string_view text, std::size_t nvars,
                               DsVariant dsVariant = DsVariant::RevLex);

/// Preset name when the matrix is a preset, otherwise the M(...) form.
std::string formatOrdering(const MonomialOrdering& ord);
/// Always the explicit M(...) form.
std::string formatOrderingMatrix(const MonomialOrdering& ord);

}  // namespace sbasis
