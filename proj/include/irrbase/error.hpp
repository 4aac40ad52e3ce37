#pragma once

#include <stdexcept>
#include <string>

namespace irrbase {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different fields or domains.
class SpecMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A constructed object violates an invariant that must hold by
/// construction; always signals an arithmetic bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (JSON spec, CLI argument).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace irrbase
