#pragma once

#include <stdexcept>
#include <string>

namespace wex {

/// Failure categories. Each maps onto one process exit code in the CLI.
enum class ErrorKind {
  Parse,          // malformed document or literal
  Validation,     // well-formed input violating a documented invariant
  Domain,         // operation precondition violated (bad arguments)
  CapExceeded,    // group enumeration exceeded its element cap
  Internal,       // self-check failed (orthogonality, bookkeeping, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Short machine-readable name, e.g. "DivisionByZero".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error domain_error(std::string code, const std::string& msg) {
  return Error(ErrorKind::Domain, std::move(code), msg);
}

inline Error internal_error(std::string code, const std::string& msg) {
  return Error(ErrorKind::Internal, std::move(code), msg);
}

/// Exit codes of the command-line tool.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 1;
    case ErrorKind::Validation: return 2;
    case ErrorKind::Domain: return 2;
    case ErrorKind::CapExceeded: return 3;
    case ErrorKind::Internal: return 4;
  }
  return 4;
}

}  // namespace wex
