#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilcomm {

enum class Errc {
  SizeMismatch,
  SignatureMismatch,
  ParityViolation,
  FormMismatch,
  InvalidParams,
  SyntaxError,
  AlternationError,
  BoundExceeded,
  EmptyDiagram,
  EvenRowPresent,
  ShapeMismatch,
  NotComparable,
  WrongType,
  UnrealizableDiagram,
  NoAdjacentLengths,
  NotNilpotent,
  NotAlmostDistinguished,
  ClaimViolated,
  UnknownCase,
  InvariantViolated,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int position = -1);

  Errc code() const noexcept { return code_; }
  // Character offset for SyntaxError/AlternationError, -1 otherwise.
  int position() const noexcept { return position_; }

 private:
  Errc code_;
  int position_;
};

}  // namespace nilcomm
