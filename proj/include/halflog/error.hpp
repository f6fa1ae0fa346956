#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halflog {

enum class ErrorCode {
  NonPrimeModulus,
  MixedPrime,
  DivisionByZero,
  PrecisionExhausted,
  MixedExtension,
  NotSupersingular,
  NonIntegralCoefficient,
  IdentityViolation,
  InexactDivision,
  NotConverged,
  BadReduction,
  HasseViolation,
  InvalidArgument,
  ParseError,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace halflog
