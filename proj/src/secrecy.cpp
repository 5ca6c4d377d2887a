#include "fris/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fris/errors.hpp"
#include "fris/specfun.hpp"
#include "fris/surface.hpp"

namespace fris {
namespace {

void check_gain(double g) {
  if (!(g >= 0.0)) throw DomainError("distribution: gain must be >= 0");
}

void check_fits(const GammaFit& bob, const ExpFit& eve) {
  if (!(bob.shape > 0.0) || !(bob.scale > 0.0)) throw DomainError("Gamma fit parameters must be positive");
  if (!(eve.rate > 0.0)) throw DomainError("Exponential fit rate must be positive");
}

}  // namespace

GammaFit gamma_fit_from_traces(double tr2, double tr4) {
  if (!(tr2 > 0.0) || !(tr4 > 0.0)) throw DomainError("gamma fit: reduced correlation matrix is zero");
  return {tr2 * tr2 / tr4, tr4 / tr2};
}

ExpFit exp_fit_from_traces(double tr2) {
  if (!(tr2 > 0.0)) throw DomainError("exponential fit: reduced correlation matrix is zero");
  return {1.0 / tr2};
}

GammaFit fit_bob_gamma(const Eigen::MatrixXd& j_reduced) {
  return gamma_fit_from_traces(trace_power(j_reduced, 2), trace_power(j_reduced, 4));
}

ExpFit fit_eve_exponential(const Eigen::MatrixXd& j_reduced) {
  return exp_fit_from_traces(trace_power(j_reduced, 2));
}

double gamma_cdf(double g, const GammaFit& fit) {
  check_gain(g);
  return reg_lower_inc_gamma(fit.shape, g / fit.scale);
}

double gamma_pdf(double g, const GammaFit& fit) {
  check_gain(g);
  if (g == 0.0) {
    if (fit.shape < 1.0) return std::numeric_limits<double>::infinity();
    return fit.shape == 1.0 ? 1.0 / fit.scale : 0.0;
  }
  return std::exp((fit.shape - 1.0) * std::log(g) - g / fit.scale - std::lgamma(fit.shape) -
                  fit.shape * std::log(fit.scale));
}

double exp_cdf(double g, const ExpFit& fit) {
  check_gain(g);
  return -std::expm1(-fit.rate * g);
}

double exp_pdf(double g, const ExpFit& fit) {
  check_gain(g);
  return fit.rate * std::exp(-fit.rate * g);
}

double secrecy_capacity(double snr_bob, double snr_eve) {
  if (!(snr_bob >= 0.0) || !(snr_eve >= 0.0)) throw DomainError("secrecy_capacity: SNRs must be >= 0");
  if (snr_bob <= snr_eve) return 0.0;
  return (std::log1p(snr_bob) - std::log1p(snr_eve)) / std::numbers::ln2;
}

double asc_upper_bound(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget) {
  check_fits(bob, eve);
  const double bob_mean = budget.mean_snr(Receiver::kBob) * budget.loss_f() * budget.loss(Receiver::kBob) *
                          bob.shape * bob.scale;
  const double eve_mean =
      budget.mean_snr(Receiver::kEve) * budget.loss_f() * budget.loss(Receiver::kEve) / eve.rate;
  return (std::log1p(bob_mean) - std::log1p(eve_mean)) / std::numbers::ln2;
}

double sop_bound_argument(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget,
                          const SecrecyTarget& target) {
  check_fits(bob, eve);
  if (!(target.rate >= 0.0)) throw DomainError("secrecy target rate must be >= 0");
  return budget.mean_snr(Receiver::kBob) * budget.loss(Receiver::kBob) * bob.scale * eve.rate /
         (budget.mean_snr(Receiver::kEve) * budget.loss(Receiver::kEve) * std::exp2(target.rate));
}

double sop_lower_bound_reduced(double shape, double z) {
  if (!(shape > 0.0)) throw DomainError("sop_lower_bound: shape must be > 0");
  if (!(z >= 0.0)) throw DomainError("sop_lower_bound: argument must be >= 0");
  if (z == 0.0) return 1.0;
  if (std::isinf(z)) return 0.0;
  const double log_value = std::log(z) - std::lgamma(shape) + log_meijer_g_2122(z, shape);
  return std::clamp(std::exp(log_value), 0.0, 1.0);
}

double sop_lower_bound(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget,
                       const SecrecyTarget& target) {
  return sop_lower_bound_reduced(bob.shape, sop_bound_argument(bob, eve, budget, target));
}

double sop_lower_oracle_reduced(double shape, double z, const QuadratureSpec& quad) {
  if (!(shape > 0.0) || !(z > 0.0)) throw DomainError("sop_lower_oracle: requires shape > 0 and z > 0");
  return integrate_semi_infinite(
      [&](double x) { return reg_lower_inc_gamma(shape, x / z) * std::exp(-x); }, quad);
}

double sop_lower_oracle(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget,
                        const SecrecyTarget& target, const QuadratureSpec& quad) {
  check_fits(bob, eve);
  // SNR per unit channel gain on each link
  const double bob_unit = budget.mean_snr(Receiver::kBob) * budget.loss_f() * budget.loss(Receiver::kBob);
  const double eve_unit = budget.mean_snr(Receiver::kEve) * budget.loss_f() * budget.loss(Receiver::kEve);
  const double eve_mean = eve_unit / eve.rate;
  const double threshold = std::exp2(target.rate);
  // gamma_e = eve_mean * x
  auto integrand = [&](double x) {
    const double gamma_e = eve_mean * x;
    const double bob_cdf = gamma_cdf(threshold * gamma_e / bob_unit, bob);
    const double eve_density = exp_pdf(gamma_e / eve_unit, eve) / eve_unit;
    return bob_cdf * eve_density * eve_mean;
  };
  return integrate_semi_infinite(integrand, quad);
}

double asc_oracle(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget, const QuadratureSpec& quad) {
  check_fits(bob, eve);
  const double bob_scale =
      budget.mean_snr(Receiver::kBob) * budget.loss_f() * budget.loss(Receiver::kBob) * bob.scale;
  const double eve_mean =
      budget.mean_snr(Receiver::kEve) * budget.loss_f() * budget.loss(Receiver::kEve) / eve.rate;
  if (bob_scale == 0.0) return 0.0;
  const double k = bob.shape;
  const double log_gamma_k = std::lgamma(k);

  QuadratureSpec inner_spec = quad;
  inner_spec.rel_tol = std::min(quad.rel_tol, 1e-12);

  // E over gamma_b > gamma_e = y of log2((1 + gamma_b) / (1 + y)), with
  // gamma_b = y + bob_scale * w.
  auto inner = [&](double y) {
    const double offset = y / bob_scale;
    const double ratio = bob_scale / (1.0 + y);
    auto integrand = [&](double w) {
      const double s = offset + w;
      const double density = std::exp((k - 1.0) * std::log(s) - s - log_gamma_k);
      return std::log1p(ratio * w) * density;
    };
    return integrate_semi_infinite(integrand, inner_spec) / std::numbers::ln2;
  };

  // gamma_e = eve_mean * t, t ~ Exp(1)
  return integrate_semi_infinite([&](double t) { return std::exp(-t) * inner(eve_mean * t); }, quad);
}

}  // namespace fris
