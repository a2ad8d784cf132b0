#pragma once

#include <stdexcept>
#include <string>

namespace idealis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
  FieldMismatch() : Error("operands belong to different fields") {}
};

/// The prime cannot be used: it divides a denominator, is not an odd prime,
/// or lacks a required square root.
class BadPrime : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials belong to different rings") {}
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class MissingBasis : public Error {
 public:
  MissingBasis() : Error("ideal carries no Groebner basis") {}
};

class UnsupportedFieldForModel : public Error {
 public:
  using Error::Error;
};

class DuplicateLines : public Error {
 public:
  using Error::Error;
};

class NonEssential : public Error {
 public:
  NonEssential() : Error("arrangement is not essential (all lines concurrent)") {}
};

class ClosureBoundExceeded : public Error {
 public:
  using Error::Error;
};

class BadCharacteristic : public Error {
 public:
  using Error::Error;
};

class EmptyKernel : public Error {
 public:
  using Error::Error;
};

class PrimeTooLarge : public Error {
 public:
  using Error::Error;
};

class NonOrdinaryUnsupported : public Error {
 public:
  NonOrdinaryUnsupported()
      : Error("genus formula only supports ordinary singularities") {}
};

}  // namespace idealis
