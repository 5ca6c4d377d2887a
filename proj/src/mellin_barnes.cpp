// Mellin-Barnes contour evaluation of G^{2,1}_{2,2}(z | -k, 0; 0, -1).
//
// With the standard kernel the Gamma(-s) from b_1 = 0 cancels against the
// denominator Gamma(a_2 - s), leaving
//   G = (1 / 2 pi i) \int_{c - i inf}^{c + i inf} Gamma(-1-s) Gamma(1+k+s) z^s ds.
// Poles of Gamma(-1-s) sit at s = -1, 0, 1, ... and those of Gamma(1+k+s) at
// s = -1-k, -2-k, ..., so the contour must satisfy -1-k < c < -1. Inside that
// strip c is placed at the real saddle of the kernel, which is where the
// vertical line crosses the steepest-descent path and cancellation is smallest.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "fris/errors.hpp"
#include "fris/specfun.hpp"

namespace fris {
namespace {

using cplx = std::complex<double>;

// Stirling series after shifting Re(w) above 15; valid for Re(w) > 0.
cplx log_gamma_complex(cplx w) {
  static constexpr double kBernoulli[] = {1.0 / 12.0,          -1.0 / 360.0,  1.0 / 1260.0,
                                          -1.0 / 1680.0,       1.0 / 1188.0,  -691.0 / 360360.0,
                                          1.0 / 156.0,         -3617.0 / 122400.0};
  cplx shift_sum = 0.0;
  while (w.real() < 15.0) {
    shift_sum += std::log(w);
    w += 1.0;
  }
  const cplx inv = 1.0 / w;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double b : kBernoulli) {
    series += b * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift_sum;
}

// log of the kernel on the real axis; convex in c on (-1-k, -1).
double log_kernel_real(double c, double k, double log_z) {
  return std::lgamma(-1.0 - c) + std::lgamma(1.0 + k + c) + c * log_z;
}

double saddle_abscissa(double k, double log_z) {
  // golden-section search over a = -1 - c in (0, k)
  const double eps = 1e-12 * k;
  double lo = eps;
  double hi = k - eps;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  auto phi = [&](double a) { return log_kernel_real(-1.0 - a, k, log_z); };
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = phi(x1);
  double f2 = phi(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * k; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = phi(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = phi(x2);
    }
  }
  return -1.0 - 0.5 * (lo + hi);
}

}  // namespace

double meijer_g_2122_oracle(double z, double k, std::size_t contour_points) {
  if (!(z > 0.0) || !std::isfinite(z) || !(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("meijer_g_2122_oracle: requires finite z > 0 and k > 0");
  }
  if (contour_points < 1000) throw DomainError("meijer_g_2122_oracle: contour_points must be >= 1000");

  const double log_z = std::log(z);
  const double c = saddle_abscissa(k, log_z);
  const double log_peak = log_kernel_real(c, k, log_z);

  // log of the kernel relative to its value at y = 0
  auto log_kernel = [&](double y) {
    const cplx s(c, y);
    return log_gamma_complex(-1.0 - s) + log_gamma_complex(1.0 + k + s) + s * log_z - log_peak;
  };

  // Truncate where the kernel has decayed by e^-46 (~1e-20) relative to the peak.
  constexpr double kDecay = -46.0;
  double half_range = 1.0;
  while (log_kernel(half_range).real() > kDecay || log_kernel(-half_range).real() > kDecay) {
    half_range *= 2.0;
    if (half_range > 1e5) {
      throw ConvergenceError("meijer_g_2122_oracle: kernel does not decay along the contour",
                             std::numeric_limits<double>::quiet_NaN(), half_range);
    }
  }

  // Odd node count keeps y = 0 on the grid; even-indexed nodes form the
  // step-2h rule used for the error estimate. The grid is refined until the
  // two rules agree.
  constexpr std::size_t kMaxPoints = std::size_t{1} << 21;
  const double tail = std::exp(kDecay) * half_range;
  double fine = 0.0;
  double error = std::numeric_limits<double>::infinity();
  for (std::size_t points = contour_points; points <= kMaxPoints; points = 2 * points - 1) {
    const std::size_t half = (points - 1) / 2;
    const double h = half_range / static_cast<double>(half);
    double sum = 0.0;
    double coarse = 0.0;
    for (std::size_t j = 0; j <= 2 * half; ++j) {
      const double y = -half_range + static_cast<double>(j) * h;
      double value = std::exp(log_kernel(y)).real();
      if (j == 0 || j == 2 * half) value *= 0.5;
      sum += value;
      if (j % 2 == 0) coarse += value;
    }
    fine = sum * h;
    error = std::fabs(fine - coarse * 2.0 * h) + tail;
    if (error <= 1e-8 * std::fabs(fine)) break;
  }

  // (1 / 2 pi i) \int f(c + iy) i dy
  const double scale = std::exp(log_peak) / (2.0 * std::numbers::pi);
  const double value = scale * fine;
  if (!(error <= 1e-8 * std::fabs(fine))) {
    throw ConvergenceError("meijer_g_2122_oracle: contour accuracy not reached", value, scale * error);
  }
  return value;
}

}  // namespace fris
