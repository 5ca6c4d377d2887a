#ifndef FRIS_ERRORS_HPP
#define FRIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fris {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element or matrix index out of range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Invalid or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear algebra failure (dimension mismatch, eigensolver breakdown).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative numerical method failed to reach its tolerance.
/// Carries the last estimate and the achieved error bound.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what + " (estimate " + std::to_string(estimate) +
                           ", error bound " + std::to_string(error_bound) + ")"),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

}  // namespace fris

#endif  // FRIS_ERRORS_HPP
