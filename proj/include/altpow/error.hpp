#pragma once

#include <stdexcept>
#include <string>

namespace altpow {

enum class ErrorCode {
  InvalidArgument,
  OrderBoundExceeded,
  TooManySylows,
  NotCocycle,
  NotCommuting,
  NotClassFunction,
  ConstraintMismatch,
  NotUnit,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace altpow
