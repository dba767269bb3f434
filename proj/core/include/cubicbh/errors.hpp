#pragma once

#include <stdexcept>
#include <string>

namespace cubicbh {

// Root of all library failures. Each subclass maps onto one CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (n = 0, p not
// prime, non-primary Eisenstein input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

// Request exceeds a configured table or memory bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Inconsistent parameters, e.g. overlapping major arcs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A discretisation too coarse for the identity it is meant to reproduce.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Malformed command line, config file or suite name.
class UsageError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace cubicbh
