#pragma once

#include <stdexcept>
#include <string>

namespace reflekt {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  Parameter = 1,
  Size,
  Domain,
  Consistency,
  NotAHomomorphism,
  NotAnAutomorphism,
  Unsupported,
  Io,
  Usage,
};

const char* error_code_name(ErrorCode code) noexcept;

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

}  // namespace reflekt
