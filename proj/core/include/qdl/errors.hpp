#pragma once

#include <stdexcept>
#include <string>

namespace qdl {

// Base of every error raised by the library. Callers that only care about
// "the numerics refused this input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation requested at (or numerically indistinguishable from) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument is valid mathematically but outside the range this build supports
// (modulus too large, |Im s| too large, X beyond desk scale, ...).
class RangeError : public Error {
 public:
  using Error::Error;
};

// A point lies outside the convergence region a series was asked to sum in.
class RegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Richardson extrapolation did not settle.
class ExtrapolationError : public Error {
 public:
  using Error::Error;
};

// An iterative algorithm ran out of iterations.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdl
