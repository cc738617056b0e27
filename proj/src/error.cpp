#include "ffdio/error.hpp"

namespace ffdio {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::CharacteristicClash: return "CharacteristicClash";
    case ErrorKind::EqualInputs: return "EqualInputs";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::SingularModel: return "SingularModel";
    case ErrorKind::CycleCapExceeded: return "CycleCapExceeded";
    case ErrorKind::BackendUnavailable: return "BackendUnavailable";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

}  // namespace ffdio
