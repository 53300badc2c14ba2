#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orelim {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  ContextMismatch,
  ZeroElement,
  NotAnExtension,
  RingMismatch,
  DivisionByZero,
  BothZero,
  ZeroPolynomial,
  IndexOutOfRange,
  EqualRows,
  BothConstant,
  BadEvaluation,
  PlanFailure,
  SingularMooreSystem,
  ParseError,
};

/// Stable machine-readable name, e.g. "ReducibleModulus".
std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorCode::ParseError, what), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace orelim
