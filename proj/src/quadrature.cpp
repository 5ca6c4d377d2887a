#include "fris/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <numbers>

#include "fris/errors.hpp"

namespace fris {
namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
// t-range of the exp-sinh map: x spans roughly [1e-137, 1e137].
constexpr double kTMax = 6.0;

double exp_sinh_term(const std::function<double(double)>& f, double t, int& evals) {
  const double x = std::exp(kHalfPi * std::sinh(t));
  if (x == 0.0 || !std::isfinite(x)) return 0.0;
  const double w = kHalfPi * std::cosh(t) * x;
  ++evals;
  const double fx = f(x);
  if (std::isnan(fx)) throw DomainError("integrate_semi_infinite: integrand returned NaN");
  const double term = fx * w;
  return std::isfinite(term) ? term : 0.0;
}

QuadratureResult exp_sinh(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  QuadratureResult out;
  double h = 1.0;
  double sum = 0.0;
  const int n0 = static_cast<int>(kTMax);
  for (int j = -n0; j <= n0; ++j) sum += exp_sinh_term(f, j * h, out.evaluations);
  double estimate = h * sum;
  double error = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= spec.max_levels; ++level) {
    h *= 0.5;
    const int count = static_cast<int>(std::round(kTMax / h));
    double odd_sum = 0.0;
    for (int j = -count + 1; j < count; j += 2) odd_sum += exp_sinh_term(f, j * h, out.evaluations);
    sum += odd_sum;
    const double refined = h * sum;
    error = std::fabs(refined - estimate);
    estimate = refined;
    if (level >= 3 && error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(estimate))) {
      out.value = estimate;
      out.error_estimate = error;
      return out;
    }
  }
  throw ConvergenceError("exp-sinh quadrature did not converge", estimate, error);
}

// Golub-Welsch: nodes are eigenvalues of the Laguerre Jacobi matrix,
// weights the squared first eigenvector components.
double gauss_laguerre(const std::function<double(double)>& f, int n, int& evals) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0;
  for (int i = 1; i < n; ++i) sub(i - 1) = i;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericError("Gauss-Laguerre node computation failed");
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    ++evals;
    sum += v0 * v0 * std::exp(x) * f(x);
  }
  return sum;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature: need abs_tol >= 0 and rel_tol > 0");
  if (max_levels < 1) throw DomainError("quadrature max_levels must be >= 1");
  if (scheme == QuadratureScheme::kGaussLaguerre && (nodes < 16 || nodes > 150)) {
    throw DomainError("Gauss-Laguerre node count must lie in [16, 150]");
  }
}

QuadratureResult integrate_semi_infinite_detailed(const std::function<double(double)>& f,
                                                  const QuadratureSpec& spec) {
  spec.validate();
  if (spec.scheme == QuadratureScheme::kExpSinh) return exp_sinh(f, spec);

  QuadratureResult out;
  const double fine = gauss_laguerre(f, spec.nodes, out.evaluations);
  const double coarse = gauss_laguerre(f, spec.nodes / 2, out.evaluations);
  out.value = fine;
  out.error_estimate = std::fabs(fine - coarse);
  if (out.error_estimate > std::max(spec.abs_tol, spec.rel_tol * std::fabs(fine))) {
    throw ConvergenceError("Gauss-Laguerre rule did not reach tolerance", fine, out.error_estimate);
  }
  return out;
}

}  // namespace fris
