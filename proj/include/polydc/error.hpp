#ifndef POLYDC_ERROR_HPP
#define POLYDC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polydc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments from a caller: negative orders, unknown names, malformed text.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An identity or operation was invoked outside its stated domain
/// (parity, coprimality, degree bounds).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidComposition : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Two construction routes that must agree did not. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polydc

#endif  // POLYDC_ERROR_HPP
