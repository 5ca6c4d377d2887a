#ifndef FRIS_QUADRATURE_HPP
#define FRIS_QUADRATURE_HPP

#include <functional>

namespace fris {

enum class QuadratureScheme {
  /// Double-exponential (exp-sinh) substitution x = exp(pi/2 sinh t),
  /// refined by step halving until successive estimates agree.
  kExpSinh,
  /// Fixed-node Gauss-Laguerre rule, error estimated against the half-size rule.
  kGaussLaguerre,
};

struct QuadratureSpec {
  QuadratureScheme scheme = QuadratureScheme::kExpSinh;
  double abs_tol = 0.0;
  double rel_tol = 1e-11;
  int max_levels = 12;  // step halvings for exp-sinh
  int nodes = 64;       // Gauss-Laguerre node count, 16..150

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// \int_0^\infty f(x) dx for f decaying at least exponentially.
/// Throws ConvergenceError with the last estimate when the tolerance is not met.
QuadratureResult integrate_semi_infinite_detailed(const std::function<double(double)>& f,
                                                  const QuadratureSpec& spec = {});

inline double integrate_semi_infinite(const std::function<double(double)>& f,
                                      const QuadratureSpec& spec = {}) {
  return integrate_semi_infinite_detailed(f, spec).value;
}

}  // namespace fris

#endif  // FRIS_QUADRATURE_HPP
