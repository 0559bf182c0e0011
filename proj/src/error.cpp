#include "sbasis/error.hpp"

namespace sbasis {

const char* errcName(Errc code) noexcept {
  switch (code) {
    case Errc::MixedRing: return "MixedRing";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotInIdeal: return "NotInIdeal";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::RingNotEligible: return "RingNotEligible";
    case Errc::RingNotPID: return "RingNotPID";
    case Errc::IterationLimit: return "IterationLimit";
    case Errc::NotAStandardBasis: return "NotAStandardBasis";
    case Errc::TooManyGenerators: return "TooManyGenerators";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace sbasis
