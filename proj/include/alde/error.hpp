#pragma once

#include <stdexcept>
#include <string>

namespace alde {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, polynomials, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed: vanishing denominator, division by
/// zero, index out of range, parameter outside its admissible set.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A synthesis or linear solve had no solution or no unique solution.
class SolveError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent or missing run configuration (bad flags, k > beta).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace alde
