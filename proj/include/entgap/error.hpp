#pragma once

#include <stdexcept>
#include <string>

namespace entgap {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotConverged,
  Io,
  NoSolution,
};

/// Exception thrown by every module of the library. The code maps one-to-one
/// onto the status codes of the C interface.
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

inline void require(bool condition, const std::string& what,
                    ErrorCode code = ErrorCode::InvalidArgument) {
  if (!condition) throw Error(code, what);
}

}  // namespace entgap
