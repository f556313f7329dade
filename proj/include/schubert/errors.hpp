#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Every error thrown by the library derives from this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

// Nonzero remainder in a division that was expected to be exact.
class InexactDivision : public Error {
 public:
  using Error::Error;
  InexactDivision() : Error("polynomial division leaves a nonzero remainder") {}
};

class CenterTooSmall : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A computed Betti number came out negative, or two routes that must agree
// did not.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class SpecInvalid : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace schubert
