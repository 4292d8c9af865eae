#pragma once

#include <stdexcept>
#include <string>

namespace teich2 {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the region where a formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

enum class DomainBound { lower_a, upper_a, alpha_range };

const char* to_string(DomainBound which) noexcept;

// (a, alpha_tilde) outside the admissible octagon region.
class OutOfDomain : public DomainError {
 public:
  OutOfDomain(DomainBound which, double bound, double value);

  DomainBound which() const noexcept { return which_; }
  double bound() const noexcept { return bound_; }
  double value() const noexcept { return value_; }

 private:
  DomainBound which_;
  double bound_;
  double value_;
};

// Finite-difference stencil would leave the admissible region.
class StepTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double error_estimate, long evaluations)
      : Error(what), error_estimate_(error_estimate), evaluations_(evaluations) {}

  double error_estimate() const noexcept { return error_estimate_; }
  long evaluations() const noexcept { return evaluations_; }

 private:
  double error_estimate_;
  long evaluations_;
};

}  // namespace teich2
