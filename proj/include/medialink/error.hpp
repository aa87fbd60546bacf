#pragma once

#include <stdexcept>
#include <string>

namespace medialink {

enum class ErrorKind {
  Usage,       // bad arguments: unknown ids, mismatched sizes, out-of-range k
  Parse,       // malformed JSON / PD / polynomial text
  Validation,  // diagram violates a structural invariant
  Domain,      // mathematically undefined (division by zero, non-unit point)
  CapExceeded, // a configured enumeration cap was hit
  Internal     // an invariant that validation should have guaranteed failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace medialink
