#ifndef FRIS_SECRECY_HPP
#define FRIS_SECRECY_HPP

#include <Eigen/Dense>

#include "fris/channel.hpp"
#include "fris/quadrature.hpp"

namespace fris {

/// Gamma(k, theta) law for Bob's channel power gain.
struct GammaFit {
  double shape = 1.0;
  double scale = 1.0;
  double mean() const { return shape * scale; }
};

/// Exponential law with rate theta for Eve's channel power gain.
struct ExpFit {
  double rate = 1.0;
  double mean() const { return 1.0 / rate; }
};

struct SecrecyTarget {
  double rate = 1.0;  // bits/s/Hz
};

/// Moment matching from tr(J~^2), tr(J~^4):
/// k = tr(J~^2)^2 / tr(J~^4), theta = tr(J~^4) / tr(J~^2).
GammaFit gamma_fit_from_traces(double tr2, double tr4);
/// rate = 1 / tr(J~^2).
ExpFit exp_fit_from_traces(double tr2);

GammaFit fit_bob_gamma(const Eigen::MatrixXd& j_reduced);
ExpFit fit_eve_exponential(const Eigen::MatrixXd& j_reduced);

double gamma_cdf(double g, const GammaFit& fit);
double gamma_pdf(double g, const GammaFit& fit);
double exp_cdf(double g, const ExpFit& fit);
double exp_pdf(double g, const ExpFit& fit);

/// [log2(1 + gamma_b) - log2(1 + gamma_e)]^+
double secrecy_capacity(double snr_bob, double snr_eve);

/// log2((1 + gb L_f L_b k theta_b) / (1 + ge L_f L_e / theta_e)). Not clamped:
/// negative whenever Eve's mean SNR exceeds Bob's.
double asc_upper_bound(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget);

/// Argument of the closed-form SOP bound,
/// z = gb L_b theta_b theta_e / (ge L_e 2^Rs). L_f cancels between the links.
double sop_bound_argument(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget,
                          const SecrecyTarget& target);

/// z / Gamma(k) * G^{2,1}_{2,2}(z | -k, 0; 0, -1), in (0, 1].
double sop_lower_bound(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget,
                       const SecrecyTarget& target);

/// Same quantity as a function of (k, z) only.
double sop_lower_bound_reduced(double shape, double z);

/// Pr(gamma_b <= 2^Rs gamma_e) integrated numerically from the fitted
/// Gamma CDF and Exponential PDF.
double sop_lower_oracle(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget,
                        const SecrecyTarget& target, const QuadratureSpec& quad = {});

/// (k, z) form of sop_lower_oracle: \int_0^inf P(k, x / z) e^{-x} dx.
double sop_lower_oracle_reduced(double shape, double z, const QuadratureSpec& quad = {});

/// E[C_s] under the fitted laws by iterated quadrature over gamma_e then gamma_b.
double asc_oracle(const GammaFit& bob, const ExpFit& eve, const LinkBudget& budget,
                  const QuadratureSpec& quad = {});

}  // namespace fris

#endif  // FRIS_SECRECY_HPP
