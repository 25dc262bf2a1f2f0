#pragma once

#include <stdexcept>
#include <string>

namespace sweeplab {

// Every library failure derives from Error so the CLI can map families of
// failures onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (words, partitions, weights, numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Partition does not fit the requested rectangle.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// 64-bit level arithmetic would wrap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Input lies outside the domain of the operation (non-Dyck path, path
// outside a trapezoid, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid numeric parameters (gcd != 1, unsupported b for GM inversion, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Perturbed slope requested outside the r > 0, s < 0 regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// Inversion could not reconstruct a preimage from the given labels.
class NotInImageError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured object budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace sweeplab
