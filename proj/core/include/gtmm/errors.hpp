#pragma once

#include <stdexcept>
#include <string>

namespace gtmm {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Elements of two different group instances were combined.
class InstanceMismatchError : public Error {
 public:
  using Error::Error;
};

/// A group order or element code does not fit the 64-bit word size.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Full enumeration was requested for a group above the enumeration cap.
class EnumerationCapError : public Error {
 public:
  using Error::Error;
};

/// The pseudo-exponent equation has no root for the given capacity.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A realization was requested on a triple or family that has not passed
/// its property check.
class UnverifiedError : public Error {
 public:
  using Error::Error;
};

/// Malformed group DSL string or input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gtmm
