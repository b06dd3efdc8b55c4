#pragma once

#include <stdexcept>
#include <string>

namespace equiosc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (|t| > 1 for a
/// kernel, t outside [0,1] for a field).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad kernel parameters, non-covering field pieces,
/// non-positive exponents, inadmissible fields.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A node system is not in the regularity set where it is required.
class RegularityError : public Error {
 public:
  using Error::Error;
};

/// The kernel does not satisfy the assumptions an algorithm depends on.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A grid search would exceed its evaluation budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace equiosc
