#pragma once

#include <stdexcept>
#include <string>

namespace kwise {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (parameter out of range,
/// mismatched sizes, point not on a grid).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A closed form was requested at a parity it is not defined for
/// (e.g. a half-integer weight).
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact division by zero.
class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// An internal consistency check failed: simplex breakdown, an interpolant
/// of unexpected degree, a certificate that does not recheck. Never a
/// user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace kwise
