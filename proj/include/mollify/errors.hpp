#pragma once

#include <stdexcept>
#include <string>

namespace mollify {

enum class ErrorKind {
  kUsage = 1,
  kPrecondition = 2,
  kConditioning = 3,
  kAccuracy = 4,
  kBudget = 5,
};

// Root of the library's exception hierarchy. The kind maps one-to-one onto
// the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::kUsage, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::kPrecondition, what) {}
};

// A mollifier configuration whose functionals degenerate (zero denominator,
// empty basis, sub-unit lengths).
class DegenerateError : public PreconditionError {
 public:
  explicit DegenerateError(const std::string& what) : PreconditionError(what) {}
};

class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double pivot)
      : Error(ErrorKind::kConditioning, what), pivot_(pivot) {}
  double pivot() const noexcept { return pivot_; }

 private:
  double pivot_;
};

class AccuracyError : public Error {
 public:
  explicit AccuracyError(const std::string& what) : Error(ErrorKind::kAccuracy, what) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(ErrorKind::kBudget, what) {}
};

}  // namespace mollify
