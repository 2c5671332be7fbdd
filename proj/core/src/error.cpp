#include "nilcomm/error.hpp"

namespace nilcomm {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::FormMismatch: return "FormMismatch";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::AlternationError: return "AlternationError";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::EmptyDiagram: return "EmptyDiagram";
    case Errc::EvenRowPresent: return "EvenRowPresent";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotComparable: return "NotComparable";
    case Errc::WrongType: return "WrongType";
    case Errc::UnrealizableDiagram: return "UnrealizableDiagram";
    case Errc::NoAdjacentLengths: return "NoAdjacentLengths";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotAlmostDistinguished: return "NotAlmostDistinguished";
    case Errc::ClaimViolated: return "ClaimViolated";
    case Errc::UnknownCase: return "UnknownCase";
    case Errc::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, int position)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code),
      position_(position) {}

}  // namespace nilcomm
