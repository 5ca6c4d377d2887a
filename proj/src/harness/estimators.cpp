#include "fris/harness/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fris/errors.hpp"

namespace fris::harness {

double pairwise_sum(std::span<const double> x) {
  constexpr std::size_t kBlock = 64;
  if (x.size() <= kBlock) {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

MetricEstimate mean_estimate(std::span<const double> x) {
  if (x.size() < 2) throw DomainError("mean_estimate: need at least 2 values");
  const double n = static_cast<double>(x.size());
  const double mean = pairwise_sum(x) / n;
  std::vector<double> dev(x.size());
  std::transform(x.begin(), x.end(), dev.begin(), [mean](double v) { return (v - mean) * (v - mean); });
  const double var = pairwise_sum(dev) / (n - 1.0);
  const double se = std::sqrt(var / n);
  return {mean, se, mean - kZ95 * se, mean + kZ95 * se, x.size()};
}

MetricEstimate proportion_estimate(std::uint64_t successes, std::uint64_t n) {
  if (n == 0) throw DomainError("proportion_estimate: need at least 1 trial");
  if (successes > n) throw DomainError("proportion_estimate: successes exceed trials");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / nn;
  const double centre = (p + z2 / (2.0 * nn)) / denom;
  const double half = kZ95 * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {p, std::sqrt(p * (1.0 - p) / nn), std::max(0.0, std::min(p, centre - half)),
          std::min(1.0, std::max(p, centre + half)), n};
}

MetricEstimate estimate_sop(std::span<const TrialRecord> records, double rate) {
  std::uint64_t hits = 0;
  for (const auto& r : records) hits += r.secrecy <= rate ? 1 : 0;
  return proportion_estimate(hits, records.size());
}

MetricEstimate estimate_asc(std::span<const TrialRecord> records) {
  std::vector<double> cs(records.size());
  std::transform(records.begin(), records.end(), cs.begin(), [](const TrialRecord& r) { return r.secrecy; });
  return mean_estimate(cs);
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.size() < 100) {
    throw DomainError("ks_statistic: need at least 100 samples, got " + std::to_string(samples.size()));
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace fris::harness
