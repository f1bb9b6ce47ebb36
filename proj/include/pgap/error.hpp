#pragma once

#include <stdexcept>
#include <string>

namespace pgap {

/// Failure categories. The numeric values are the C API status codes.
enum class ErrorCode : int {
  invalid_argument = 1,
  invariant_failure = 2,
  io = 3,
  budget_exceeded = 4,
  insufficient_precision = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::invalid_argument, what);
}

}  // namespace pgap
