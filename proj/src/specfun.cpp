#include "fris/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fris/errors.hpp"

namespace fris {
namespace {

constexpr int kMaxSeriesTerms = 100000;

// sum_k (-1)^k (x^2/4)^k / (k!)^2, extended precision to absorb the
// alternating-series cancellation for x up to 8.
double j0_series(double ax) {
  const long double q = -0.25L * static_cast<long double>(ax) * ax;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * k);
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) + 1e-30L) break;
  }
  return static_cast<double>(sum);
}

// Miller backward recurrence J_{n-1} = (2n/x) J_n - J_{n+1}, normalized with
// J_0 + 2 sum_{k>=1} J_{2k} = 1.
double j0_miller(double ax) {
  int start = static_cast<int>(ax + 60.0 + 10.0 * std::cbrt(ax));
  if (start % 2 != 0) ++start;
  const long double x = ax;
  long double next = 0.0L;  // J_{n+1}
  long double cur = 1e-300L;  // J_n
  long double even_sum = 0.0L;
  long double j0 = 0.0L;
  for (int n = start; n >= 1; --n) {
    const long double prev = (2.0L * n / x) * cur - next;  // J_{n-1}
    next = cur;
    cur = prev;
    if ((n - 1) % 2 == 0 && n - 1 > 0) even_sum += cur;
    if (std::fabs(cur) > 1e300L) {
      cur *= 1e-300L;
      next *= 1e-300L;
      even_sum *= 1e-300L;
    }
  }
  j0 = cur;
  return static_cast<double>(j0 / (j0 + 2.0L * even_sum));
}

// Hankel amplitude-phase expansion, J0 = sqrt(2/(pi x)) (P cos w - Q sin w),
// w = x - pi/4. Only used where its smallest term is far below 1e-16.
double j0_asymptotic(double ax) {
  long double p = 0.0L;
  long double q = 0.0L;
  long double c = 1.0L;  // b_n / x^n
  long double prev = std::numeric_limits<long double>::infinity();
  for (int n = 0; n < 200; ++n) {
    if (n > 0) {
      const long double odd = 2.0L * n - 1.0L;
      c *= odd * odd / (8.0L * n * ax);
    }
    if (c > prev) break;  // asymptotic series started to diverge
    prev = c;
    const int half = n / 2;
    const long double sign = (half % 2 == 0) ? 1.0L : -1.0L;
    if (n % 2 == 0) {
      p += sign * c;
    } else {
      q -= sign * c;
    }
    if (c < 1e-20L) break;
  }
  const double w = ax - 0.25 * std::numbers::pi;
  const double amp = std::sqrt(2.0 / (std::numbers::pi * ax));
  return amp * static_cast<double>(p * std::cos(w) - q * std::sin(w));
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite argument");
}

void check_gamma_args(double k, double x) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("incomplete gamma: shape must be positive and finite");
  if (!(x >= 0.0)) throw DomainError("incomplete gamma: x must be >= 0");
}

// x^k e^{-x} / Gamma(k + shift) in log space.
double log_prefactor(double k, double x, double lgamma_arg) {
  return k * std::log(x) - x - std::lgamma(lgamma_arg);
}

double lower_series(double k, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    term *= x / (k + n);
    sum += term;
    if (term < sum * 1e-17) {
      return std::exp(log_prefactor(k, x, k + 1.0)) * sum;
    }
  }
  throw ConvergenceError("incomplete gamma series did not converge", sum, term);
}

// Modified Lentz evaluation of the continued fraction for Q(k, x).
double upper_fraction(double k, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - k;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxSeriesTerms; ++i) {
    const double an = -i * (i - k);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) <= 4e-16) {
      return std::exp(log_prefactor(k, x, k)) * h;
    }
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge", h, 0.0);
}

}  // namespace

double bessel_j0(double x) {
  require_finite(x, "bessel_j0");
  const double ax = std::fabs(x);
  if (ax <= 8.0) return j0_series(ax);
  if (ax <= 25.0) return j0_miller(ax);
  return j0_asymptotic(ax);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double reg_lower_inc_gamma(double k, double x) {
  check_gamma_args(k, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < k + 1.0) return std::min(1.0, lower_series(k, x));
  return std::max(0.0, 1.0 - upper_fraction(k, x));
}

double reg_upper_inc_gamma(double k, double x) {
  check_gamma_args(k, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < k + 1.0) return std::max(0.0, 1.0 - lower_series(k, x));
  return std::min(1.0, upper_fraction(k, x));
}

double log_meijer_g_2122(double z, double k) {
  if (!(z > 0.0) || !(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("meijer_g_2122: requires z > 0 and k > 0");
  }
  if (std::isinf(z)) return -std::numeric_limits<double>::infinity();
  // The Gamma(-s) factors cancel between numerator and denominator of the
  // Mellin-Barnes kernel; the remaining Gamma(-1-s) Gamma(1+k+s) pair is a
  // beta integral.
  return std::lgamma(k) - std::log(z) - k * std::log1p(z);
}

double meijer_g_2122(double z, double k) { return std::exp(log_meijer_g_2122(z, k)); }

}  // namespace fris
