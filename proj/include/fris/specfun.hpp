#ifndef FRIS_SPECFUN_HPP
#define FRIS_SPECFUN_HPP

#include <cstddef>

namespace fris {

/// Bessel function of the first kind, order zero. Absolute error below
/// 1e-12 for |x| <= 1e4. Throws DomainError for non-finite input.
double bessel_j0(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Regularized lower incomplete gamma P(k, x) = gamma(k, x) / Gamma(k).
/// Series for x < k + 1, Lentz continued fraction otherwise.
double reg_lower_inc_gamma(double k, double x);

/// Regularized upper incomplete gamma Q(k, x) = 1 - P(k, x), evaluated
/// without cancellation in either tail.
double reg_upper_inc_gamma(double k, double x);

/// G^{2,1}_{2,2}(z | -k, 0; 0, -1) = Gamma(k) / (z (1 + z)^k).
double meijer_g_2122(double z, double k);

/// Natural log of meijer_g_2122; stays finite where the value under/overflows.
double log_meijer_g_2122(double z, double k);

/// Reference evaluation of G^{2,1}_{2,2}(z | -k, 0; 0, -1) straight from its
/// Mellin-Barnes integral, (1/2 pi i) \int Gamma(-1-s) Gamma(1+k+s) z^s ds,
/// by the trapezoidal rule on a vertical line Re(s) = c inside (-1-k, -1).
/// Throws ConvergenceError when the trapezoid halving estimate exceeds a
/// 1e-8 relative error.
double meijer_g_2122_oracle(double z, double k, std::size_t contour_points = 4097);

}  // namespace fris

#endif  // FRIS_SPECFUN_HPP
