#ifndef FRIS_HARNESS_ESTIMATORS_HPP
#define FRIS_HARNESS_ESTIMATORS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fris::harness {

/// Per-trial outcome: gains, received SNRs and instantaneous secrecy capacity.
struct TrialRecord {
  double gain_b = 0.0;
  double gain_e = 0.0;
  double snr_b = 0.0;
  double snr_e = 0.0;
  double secrecy = 0.0;
};

struct MetricEstimate {
  double value = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t count = 0;
};

inline constexpr double kZ95 = 1.959963984540054;

/// Fixed-order pairwise summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> x);

/// Sample mean with a normal-approximation 95% interval. Needs >= 2 values.
MetricEstimate mean_estimate(std::span<const double> x);

/// Binomial proportion with a Wilson 95% interval. Needs n >= 1.
MetricEstimate proportion_estimate(std::uint64_t successes, std::uint64_t n);

/// Fraction of trials with C_s <= rate.
MetricEstimate estimate_sop(std::span<const TrialRecord> records, double rate);

/// Mean of C_s.
MetricEstimate estimate_asc(std::span<const TrialRecord> records);

/// sup |F_n(x) - F(x)| for the empirical CDF of the samples. Needs >= 100 samples.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace fris::harness

#endif  // FRIS_HARNESS_ESTIMATORS_HPP
