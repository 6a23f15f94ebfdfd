#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class ErrorCode {
  InvalidArgument,
  NonInvertible,
  NonCoprime,
  SearchExhausted,
  NotPrime,
  NotOrdered,
  EvenPrime,
  IndexOutOfRange,
  OutOfRange,
  DegreeCapExceeded,
  Overflow,
  TrivialResult,
  TooManyPrimeFactors,
  PreconditionViolated,
  Mismatch,
  BoundViolated,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is the stable, machine
/// readable part; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

/// Internal consistency guard; a trip means a bug in this library, not bad input.
inline void ensure(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::InternalInconsistency, what);
}

}  // namespace cyclo
