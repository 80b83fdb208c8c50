#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace afinv {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  NotUnimodular,
  NegativeEntry,
  NeverStrictlyPositive,
  BadConstantTerm,
  NotIrrational,
  SingularLambda,
  SingularCurve,
  PointNotOnCurve,
  BadReduction,
  UnsupportedCharacteristic,
  NotPrime,
  OutOfBudget,
  AlphaRequired,
};

/// Stable identifier used in JSON envelopes and CLI diagnostics.
std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Text parse failure; `position` is the 0-based byte offset of the offending
/// character in the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::Parse,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace afinv
