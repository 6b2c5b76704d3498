#pragma once

#include <stdexcept>
#include <string>

namespace spq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (zero inverse,
/// singular substitution, mixed moduli, degree above truncation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The modulus is not an odd prime.
class InvalidPrime : public Error {
 public:
  using Error::Error;
};

/// n < 2 or mismatched vector lengths.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// R and Q do not span a plane in (Z/p)^{2n}.
class InvalidSpan : public Error {
 public:
  using Error::Error;
};

/// A lens-space rotation number is zero mod p.
class InvalidRotation : public Error {
 public:
  using Error::Error;
};

/// An operation was requested outside the range in which its formula or
/// classification theorem holds (for instance p <= n for the k-invariant).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the supported size.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be understood.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spq
