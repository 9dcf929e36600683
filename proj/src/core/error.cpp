#include "reflekt/error.hpp"

namespace reflekt {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parameter: return "parameter";
    case ErrorCode::Size: return "size";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Consistency: return "consistency";
    case ErrorCode::NotAHomomorphism: return "not-a-homomorphism";
    case ErrorCode::NotAnAutomorphism: return "not-an-automorphism";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Io: return "io";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace reflekt
