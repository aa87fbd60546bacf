#include "medialink/error.hpp"

namespace medialink {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "usage error";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

}  // namespace medialink
