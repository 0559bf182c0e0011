#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbasis {

enum class Errc {
  MixedRing,
  EmptyInput,
  InvalidArgument,
  NotInIdeal,
  ZeroPolynomial,
  DimensionMismatch,
  SingularMatrix,
  RingNotEligible,
  RingNotPID,
  IterationLimit,
  NotAStandardBasis,
  TooManyGenerators,
  Parse,
};

const char* errcName(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax error in polynomial, ordering or job text. `position()` is a
/// zero-based offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& msg)
      : Error(Errc::Parse, msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sbasis
