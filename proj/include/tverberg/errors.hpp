#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tverberg {

/// Base for every error raised by the library. Each subclass maps onto one of
/// the failure kinds a caller can act on (see tools/ for the exit codes).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A documented hypothesis of an operation does not hold for the input, or a
/// runtime assertion tied to such a hypothesis failed.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class CenterpointNotFound : public NotFound {
 public:
  using NotFound::NotFound;
};

class Infeasible : public NotFound {
 public:
  using NotFound::NotFound;
};

class ExtractionFailed : public NotFound {
 public:
  using NotFound::NotFound;
};

class SearchExhausted : public NotFound {
 public:
  using NotFound::NotFound;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::string remaining)
      : Error(what), remaining_(std::move(remaining)) {}
  /// Decimal count of work units left unexamined when the budget ran out.
  const std::string& remaining() const { return remaining_; }

 private:
  std::string remaining_;
};

/// A step that the underlying theorem guarantees has failed. Never expected in
/// practice; indicates an implementation defect or a misreported hypothesis.
class AssertionFailed : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tverberg
