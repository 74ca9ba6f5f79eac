#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginibre {

/// Invalid caller-supplied argument (bad dimension, empty input, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation point outside the domain of a formula (poles, a <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sample is numerically non-diagonalizable; callers discard and count it.
class DefectiveMatrix : public std::runtime_error {
 public:
  DefectiveMatrix(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Quadrature did not reach its tolerance. Carries both partial values of the
/// contour-independence check.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double first, double second)
      : std::runtime_error(what), first_(first), second_(second) {}
  double first() const noexcept { return first_; }
  double second() const noexcept { return second_; }

 private:
  double first_;
  double second_;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN/Inf appeared in the conjugate gradient recurrence.
class BreakdownError : public std::runtime_error {
 public:
  BreakdownError(const std::string& what, std::size_t iteration)
      : std::runtime_error(what), iteration_(iteration) {}
  std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::size_t iteration_;
};

}  // namespace ginibre
