#pragma once

#include <stdexcept>
#include <string>

namespace ringcodes {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings (modulus, variable count or tower width differ).
class ContextError : public Error {
 public:
  using Error::Error;
};

class NotAUnitError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters (m, s, k, u, d ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A vector that was required to be a codeword is not in the code.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// An input violating an operation's precondition (e.g. a non-idempotent
/// where an idempotent is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal algebraic identity that must hold by construction failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input. `path()` points at the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace ringcodes
