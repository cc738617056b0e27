#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffdio {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  SpecMismatch,
  CapExceeded,
  ZeroPolynomial,
  NoEmbedding,
  CharacteristicClash,
  EqualInputs,
  ZeroElement,
  SingularModel,
  CycleCapExceeded,
  BackendUnavailable,
  NotASolution,
  InvalidArgument,
  ParseError,
  InternalContradiction,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ffdio
