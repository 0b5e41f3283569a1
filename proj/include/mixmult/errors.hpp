#pragma once

#include <stdexcept>
#include <string>

namespace mixmult {

/// Failure categories surfaced by the library. The CLI maps these to exit
/// codes: Guard/Resource/Internal -> 1, Validation/Parse/Precondition -> 2.
enum class ErrorKind {
  Validation,    // malformed input data
  Parse,         // model text syntax error
  Precondition,  // operation called outside its stated preconditions
  Degenerate,    // zero module / eventually-zero quotient
  Guard,         // stabilization or search limit exceeded
  Resource,      // enumeration size limit exceeded
  Internal,      // consistency check failed; indicates a bug
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mixmult
