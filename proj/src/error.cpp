#include "afinv/error.hpp"

namespace afinv {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NeverStrictlyPositive: return "NeverStrictlyPositive";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NotIrrational: return "NotIrrational";
    case ErrorKind::SingularLambda: return "SingularLambda";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::OutOfBudget: return "OutOfBudget";
    case ErrorKind::AlphaRequired: return "AlphaRequired";
  }
  return "Unknown";
}

}  // namespace afinv
