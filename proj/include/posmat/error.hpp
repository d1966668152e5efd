#pragma once

#include <stdexcept>
#include <string>

namespace posmat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// A value cannot be expressed in the requested ring (e.g. 1/3 in DYADIC).
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch() : Error("matrix dimensions disagree") {}
  using Error::Error;
};

class NotMonomial : public Error {
 public:
  NotMonomial() : Error("matrix is not monomial") {}
  using Error::Error;
};

class UnsupportedRing : public Error {
 public:
  using Error::Error;
};

class InvalidTriple : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace posmat
