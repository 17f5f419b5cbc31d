#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A DecimalLiteral (or the precision cap) cannot supply the bits requested.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// floor() of an interval whose endpoints lie on different sides of an integer.
class IntervalStraddlesInteger : public Error {
 public:
  using Error::Error;
};

class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

class InsufficientConvergents : public Error {
 public:
  using Error::Error;
};

class BadRationalApproximation : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain (poles, non-coprime pairs, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dioph
