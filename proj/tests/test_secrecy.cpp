#include <gtest/gtest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fris/errors.hpp"
#include "fris/quadrature.hpp"
#include "fris/secrecy.hpp"

namespace {

using fris::ExpFit;
using fris::GammaFit;
using fris::LinkBudget;
using fris::SecrecyTarget;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Unit path loss, unit transmit power; mean SNRs set by the noise powers.
LinkBudget unit_budget(double bob_snr, double eve_snr) {
  LinkBudget b{1.0, 1e-300, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  b.noise_bob = bob_snr > 0.0 ? 1.0 / bob_snr : kInf;
  b.noise_eve = eve_snr > 0.0 ? 1.0 / eve_snr : kInf;
  return b;
}

LinkBudget reference_budget(double bob_db) {
  LinkBudget b;
  b.tx_power = fris::dbm_to_watts(30.0);
  b.noise_eve = fris::dbm_to_watts(-80.0);
  return b.with_bob_mean_snr(fris::db_to_linear(bob_db));
}

// ASC of the fitted laws by a single integral:
// E[C_s] = (1 / ln 2) \int_0^inf Pr(gamma_e < x) Pr(gamma_b > x) / (1 + x) dx.
double asc_single_integral(double k, double bob_scale, double eve_mean) {
  auto f = [&](double x) {
    const double eve_cdf = eve_mean > 0.0 ? -std::expm1(-x / eve_mean) : 1.0;
    return eve_cdf * boost::math::gamma_q(k, x / bob_scale) / (1.0 + x);
  };
  fris::QuadratureSpec q;
  q.rel_tol = 1e-12;
  return fris::integrate_semi_infinite(f, q) / std::numbers::ln2;
}

Eigen::MatrixXd two_by_two() {
  Eigen::MatrixXd a(2, 2);
  a << 1.0, 0.5, 0.5, 1.0;
  return a;
}

TEST(Fits, Examples) {
  auto g = fris::fit_bob_gamma(Eigen::MatrixXd::Identity(6, 6));
  EXPECT_DOUBLE_EQ(g.shape, 6.0);
  EXPECT_DOUBLE_EQ(g.scale, 1.0);
  g = fris::fit_bob_gamma(two_by_two());
  EXPECT_NEAR(g.shape, 6.25 / 5.125, 1e-15);
  EXPECT_NEAR(g.shape, 1.219512, 1e-6);
  EXPECT_NEAR(g.scale, 2.05, 1e-15);
  g = fris::fit_bob_gamma(Eigen::MatrixXd::Identity(1, 1));
  EXPECT_EQ(g.shape, 1.0);
  EXPECT_EQ(g.scale, 1.0);

  EXPECT_DOUBLE_EQ(fris::fit_eve_exponential(Eigen::MatrixXd::Identity(5, 5)).rate, 0.2);
  EXPECT_NEAR(fris::fit_eve_exponential(two_by_two()).rate, 0.4, 1e-15);
  EXPECT_EQ(fris::fit_eve_exponential(Eigen::MatrixXd::Identity(1, 1)).rate, 1.0);

  EXPECT_THROW(fris::fit_bob_gamma(Eigen::MatrixXd::Zero(3, 3)), fris::DomainError);
  EXPECT_THROW(fris::fit_eve_exponential(Eigen::MatrixXd::Zero(3, 3)), fris::DomainError);
}

TEST(Fits, MeanMatchesTraceOnRandomCorrelations) {
  const auto c = fris::build_correlation({12, 12, 2.5, 2.5, 1.0});
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> pool(144);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::uniform_int_distribution<std::size_t>(1, 144)(rng));
    const int n = static_cast<int>(pool.size());
    const Eigen::MatrixXd jr = fris::reduce_correlation(c.j, fris::SelectionSet(pool, 144));
    const double tr2 = fris::trace_power(jr, 2);
    const auto g = fris::fit_bob_gamma(jr);
    EXPECT_NEAR(g.mean() / tr2, 1.0, 1e-10);
    EXPECT_NEAR(fris::fit_eve_exponential(jr).mean() / tr2, 1.0, 1e-10);
    EXPECT_LE(g.shape, n * (1.0 + 1e-12));
  }
}

TEST(Distributions, GammaExamples) {
  EXPECT_EQ(fris::gamma_cdf(0.0, {2.0, 3.0}), 0.0);
  EXPECT_NEAR(fris::gamma_cdf(std::log(2.0), {1.0, 1.0}), 0.5, 1e-15);
  EXPECT_EQ(fris::gamma_cdf(kInf, {2.0, 3.0}), 1.0);
  EXPECT_THROW(fris::gamma_cdf(-1.0, {2.0, 3.0}), fris::DomainError);
  EXPECT_THROW(fris::gamma_pdf(-1.0, {2.0, 3.0}), fris::DomainError);
}

TEST(Distributions, GammaPdfIntegratesToOne) {
  for (GammaFit f : {GammaFit{0.7, 2.0}, GammaFit{1.0, 1.0}, GammaFit{3.5, 0.2}, GammaFit{40.0, 17.0}}) {
    const double upper = 50.0 * f.shape * f.scale;
    fris::QuadratureSpec q;
    q.rel_tol = 1e-12;
    const double v = fris::integrate_semi_infinite([&](double g) { return g <= upper ? fris::gamma_pdf(g, f) : 0.0; }, q);
    EXPECT_NEAR(v, 1.0, 1e-8) << f.shape;
  }
}

TEST(Distributions, GammaPdfMatchesBoost) {
  for (double g : {0.01, 0.5, 2.0, 9.0}) {
    EXPECT_NEAR(fris::gamma_pdf(g, {2.5, 1.5}), boost::math::gamma_p_derivative(2.5, g / 1.5) / 1.5, 1e-14);
  }
}

TEST(Distributions, ExponentialExamples) {
  const ExpFit f{0.25};
  EXPECT_EQ(fris::exp_cdf(0.0, f), 0.0);
  EXPECT_NEAR(fris::exp_cdf(std::log(2.0) / f.rate, f), 0.5, 1e-15);
  const double mean = fris::integrate_semi_infinite([&](double g) { return g * fris::exp_pdf(g, f); });
  EXPECT_NEAR(mean, 1.0 / f.rate, 1e-10);
  EXPECT_THROW(fris::exp_cdf(-0.1, f), fris::DomainError);
}

TEST(SecrecyCapacity, Examples) {
  EXPECT_NEAR(fris::secrecy_capacity(3.0, 1.0), 1.0, 1e-15);
  EXPECT_EQ(fris::secrecy_capacity(2.0, 2.0), 0.0);
  EXPECT_EQ(fris::secrecy_capacity(1.0, 3.0), 0.0);
  EXPECT_THROW(fris::secrecy_capacity(-1.0, 0.0), fris::DomainError);
}

TEST(SecrecyCapacity, NonNegativeAndZeroIffBobNotBetter) {
  std::mt19937_64 rng(6);
  std::exponential_distribution<double> e(0.01);
  for (int i = 0; i < 10000; ++i) {
    const double b = e(rng), v = e(rng);
    const double c = fris::secrecy_capacity(b, v);
    EXPECT_GE(c, 0.0);
    EXPECT_EQ(c == 0.0, b <= v);
  }
}

TEST(AscUpperBound, Examples) {
  EXPECT_NEAR(fris::asc_upper_bound({1.0, 1.0}, {1.0}, unit_budget(5.0, 5.0)), 0.0, 1e-15);
  EXPECT_NEAR(fris::asc_upper_bound({1.0, 1.0}, {1.0}, unit_budget(3.0, 1.0)), 1.0, 1e-14);
  EXPECT_LT(fris::asc_upper_bound({1.0, 1.0}, {1.0}, unit_budget(1.0, 3.0)), 0.0);
}

TEST(AscUpperBound, MonotoneInMeanSnrs) {
  const GammaFit b{4.0, 3.0};
  const ExpFit e{0.1};
  double prev = -kInf;
  for (double db = 60; db <= 160; db += 5) {
    const double v = fris::asc_upper_bound(b, e, reference_budget(db));
    EXPECT_GT(v, prev);
    prev = v;
  }
  prev = kInf;
  for (double snr = 1.0; snr < 1e12; snr *= 10.0) {
    const double v = fris::asc_upper_bound(b, e, unit_budget(1e6, snr));
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(SopBound, Examples) {
  EXPECT_EQ(fris::sop_lower_bound_reduced(2.0, 0.0), 1.0);
  EXPECT_NEAR(fris::sop_lower_bound_reduced(1.0, 1.0), 0.5, 1e-15);
  EXPECT_NEAR(fris::sop_lower_bound_reduced(2.0, 3.0), 0.0625, 1e-15);
  EXPECT_NEAR(fris::sop_lower_bound_reduced(3.0, 1e-12), 1.0, 1e-10);
  EXPECT_THROW(fris::sop_lower_bound_reduced(0.0, 1.0), fris::DomainError);
}

TEST(SopBound, ArgumentFromBudget) {
  // z = gb Lb theta_b theta_e / (ge Le 2^R)
  const GammaFit b{2.0, 1.5};
  const ExpFit e{2.0};
  const auto budget = unit_budget(4.0, 1.0);
  EXPECT_NEAR(fris::sop_bound_argument(b, e, budget, SecrecyTarget{1.0}), 4.0 * 1.5 * 2.0 / 2.0, 1e-14);
  EXPECT_NEAR(fris::sop_lower_bound(b, e, budget, SecrecyTarget{1.0}), std::pow(7.0, -2.0), 1e-15);
}

TEST(SopBound, ForwardLossCancels) {
  const GammaFit b{5.0, 40.0};
  const ExpFit e{1.0 / 300.0};
  auto near = reference_budget(100.0);
  auto far = near;
  far.d_f = 200.0;
  EXPECT_EQ(fris::sop_lower_bound(b, e, near, {}), fris::sop_lower_bound(b, e, far, {}));
  EXPECT_NEAR(fris::sop_lower_oracle(b, e, far, {}) / fris::sop_lower_bound(b, e, far, {}), 1.0, 1e-8);
}

TEST(SopOracle, Examples) {
  // k = 1, z = 1 and k = 2, z = 3 through full budgets
  EXPECT_NEAR(fris::sop_lower_oracle({1.0, 1.0}, {1.0}, unit_budget(2.0, 1.0), {1.0}), 0.5, 1e-8);
  EXPECT_NEAR(fris::sop_lower_oracle({2.0, 1.0}, {1.0}, unit_budget(6.0, 1.0), {1.0}), 0.0625, 1e-8);
  EXPECT_NEAR(fris::sop_lower_oracle({2.0, 1.0}, {1.0}, unit_budget(1e-9, 1.0), {1.0}), 1.0, 1e-8);
  EXPECT_NEAR(fris::sop_lower_oracle({1.0, 1.0}, {1.0}, unit_budget(7.0, 7.0), {0.0}), 0.5, 1e-10);
  EXPECT_LT(fris::sop_lower_oracle({2.0, 1.0}, {1.0}, unit_budget(1.0, 1e-9), {1.0}), 1e-15);
}

TEST(SopOracle, AgreesWithClosedFormOnLogGrid) {
  for (double k = 0.5; k <= 50.0; k *= 1.6) {
    for (double lz = -3.0; lz <= 6.0; lz += 0.75) {
      const double z = std::pow(10.0, lz);
      const double closed = fris::sop_lower_bound_reduced(k, z);
      const double oracle = fris::sop_lower_oracle_reduced(k, z);
      EXPECT_LE(std::abs(closed - oracle) / oracle, 1e-6) << "k=" << k << " z=" << z;
    }
  }
}

TEST(SopBound, Monotonicity) {
  const GammaFit b{6.0, 50.0};
  const ExpFit e{1.0 / 400.0};
  double prev = 1.0;
  for (double db = 60; db <= 160; db += 2.5) {
    const double v = fris::sop_lower_bound(b, e, reference_budget(db), {});
    EXPECT_LE(v, prev);
    prev = v;
  }
  prev = 1.0;
  for (double k = 0.5; k < 60.0; k *= 1.3) {
    const double v = fris::sop_lower_bound_reduced(k, 0.8);
    EXPECT_LE(v, prev);
    prev = v;
  }
  prev = 0.0;
  for (double r = 0.0; r < 8.0; r += 0.5) {
    const double v = fris::sop_lower_bound(b, e, reference_budget(110.0), SecrecyTarget{r});
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(SopBound, HighSnrSlopeApproachesShape) {
  for (double k : {1.0, 4.0, 12.0}) {
    const GammaFit b{k, 1.0 / k};
    const ExpFit e{1.0};
    // 60 dB sweep whose last decade lies deep in the asymptotic regime
    const double p_lo = fris::sop_lower_bound(b, e, reference_budget(150.0), {});
    const double p_hi = fris::sop_lower_bound(b, e, reference_budget(160.0), {});
    const double slope = std::log10(p_hi / p_lo);
    EXPECT_NEAR(slope / -k, 1.0, 0.05) << k;
  }
}

TEST(AscOracle, ZeroBobSnr) { EXPECT_EQ(fris::asc_oracle({2.0, 1.0}, {1.0}, unit_budget(0.0, 1.0)), 0.0); }

TEST(AscOracle, EveAbsentExponentialBob) {
  // E[log2(1 + a X)], X ~ Exp(1), equals e^{1/a} E1(1/a) / ln 2
  for (double a : {0.1, 1.0, 30.0, 1e4}) {
    const double expected = std::exp(1.0 / a) * boost::math::expint(1, 1.0 / a) / std::numbers::ln2;
    EXPECT_NEAR(fris::asc_oracle({1.0, 1.0}, {1.0}, unit_budget(a, 0.0)) / expected, 1.0, 1e-9) << a;
  }
}

TEST(AscOracle, MatchesSingleIntegralRoute) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> lk(std::log(0.5), std::log(50.0));
  std::uniform_real_distribution<double> ls(std::log(1e-2), std::log(1e6));
  for (int i = 0; i < 25; ++i) {
    const double k = std::exp(lk(rng));
    const double bob = std::exp(ls(rng));
    const double eve = std::exp(ls(rng));
    const double oracle = fris::asc_oracle({k, 1.0}, {1.0}, unit_budget(bob, eve));
    const double route = asc_single_integral(k, bob, eve);
    EXPECT_NEAR(oracle, route, 1e-8 * std::max(1.0, route)) << k << " " << bob << " " << eve;
  }
}

// With gamma_b >> gamma_e >> 1 the bound minus the exact ASC tends to
// (ln k - psi(k) - euler_gamma) / ln 2, which is negative for k > 1.
TEST(AscOracle, HighSnrGapToBound) {
  for (double k : {2.0, 5.0, 20.0}) {
    const GammaFit b{k, 1.0 / k};
    const ExpFit e{1.0};
    const auto budget = unit_budget(1e12, 1e6);
    const double gap = fris::asc_upper_bound(b, e, budget) - fris::asc_oracle(b, e, budget);
    const double limit = (std::log(k) - boost::math::digamma(k) - std::numbers::egamma) / std::numbers::ln2;
    EXPECT_NEAR(gap, limit, 1e-3) << k;
    EXPECT_LT(gap, 0.0);
  }
}

}  // namespace
