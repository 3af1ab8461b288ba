#pragma once

#include <stdexcept>
#include <string>

namespace hodgesplit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live in different field contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// No n-th root exists in the current finite field; the caller has to extend it.
class NoRootError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A truncated series does not carry enough digits for the requested operation.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A window computation changed when the window was enlarged.
class StabilizationError : public Error {
 public:
  using Error::Error;
};

class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace hodgesplit
