#pragma once

#include <stdexcept>
#include <string>

namespace relb {

enum class ErrorKind { parse, validation, resource_cap, precondition };

// CLI exit code: parse and validation errors share 2.
inline int exit_code_of(ErrorKind k) noexcept {
  switch (k) {
  case ErrorKind::parse:
  case ErrorKind::validation:
    return 2;
  case ErrorKind::resource_cap:
    return 3;
  case ErrorKind::precondition:
    return 4;
  }
  return 2;
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return exit_code_of(kind_); }

private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

// Group axioms, homomorphism laws, closure of a subset, ...
struct ValidationError : Error {
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what)
      : Error(ErrorKind::resource_cap, what) {}
};

// Mathematical precondition failed (subgroup not normal, not a B_K-group, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

} // namespace relb
