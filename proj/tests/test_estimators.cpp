#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fris/errors.hpp"
#include "fris/harness/estimators.hpp"
#include "fris/secrecy.hpp"

namespace {

using namespace fris::harness;

std::vector<TrialRecord> from_secrecy(const std::vector<double>& cs) {
  std::vector<TrialRecord> out;
  for (double c : cs) out.push_back({0.0, 0.0, 0.0, 0.0, c});
  return out;
}

TEST(PairwiseSum, ExactOnIntegers) {
  std::vector<double> x(10007);
  std::iota(x.begin(), x.end(), 1.0);
  EXPECT_EQ(pairwise_sum(x), 10007.0 * 10008.0 / 2.0);
  EXPECT_EQ(pairwise_sum({}), 0.0);
}

TEST(PairwiseSum, AccurateOnManySmallTerms) {
  std::vector<double> x(1 << 20, 0.1);
  EXPECT_NEAR(pairwise_sum(x), 0.1 * (1 << 20), 1e-9);
}

TEST(Sop, AllZeroCapacity) {
  const auto e = estimate_sop(from_secrecy(std::vector<double>(500, 0.0)), 1.0);
  EXPECT_EQ(e.value, 1.0);
  EXPECT_LE(e.ci_low, 1.0);
  EXPECT_EQ(e.ci_high, 1.0);
  EXPECT_EQ(e.count, 500u);
}

TEST(Sop, NoneBelowThreshold) {
  const auto e = estimate_sop(from_secrecy(std::vector<double>(1000, 5.0)), 1.0);
  EXPECT_EQ(e.value, 0.0);
  EXPECT_EQ(e.ci_low, 0.0);
  EXPECT_GT(e.ci_high, 0.0);
  EXPECT_LT(e.ci_high, 0.005);
}

TEST(Sop, WilsonIntervalKnownValue) {
  const auto e = proportion_estimate(20, 100);
  EXPECT_NEAR(e.ci_low, 0.13329, 1e-4);
  EXPECT_NEAR(e.ci_high, 0.28883, 1e-4);
  EXPECT_THROW(proportion_estimate(0, 0), fris::DomainError);
}

TEST(Sop, IntervalContainsEstimate) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 5000)(rng);
    const std::uint64_t s = std::uniform_int_distribution<std::uint64_t>(0, n)(rng);
    const auto e = proportion_estimate(s, n);
    EXPECT_LE(e.ci_low, e.value);
    EXPECT_GE(e.ci_high, e.value);
    EXPECT_GE(e.value, 0.0);
    EXPECT_LE(e.value, 1.0);
  }
}

// Records drawn from the fitted laws with k = 1: SOP equals (1 + z)^{-1}.
TEST(Sop, SyntheticRecordsMatchClosedForm) {
  std::mt19937_64 rng(2);
  const double a = 50.0, b = 10.0, rate = 1.0;
  std::exponential_distribution<double> bob(1.0 / a), eve(1.0 / b);
  std::vector<TrialRecord> records;
  for (int i = 0; i < 200000; ++i) {
    const double gb = bob(rng), ge = eve(rng);
    records.push_back({0, 0, gb, ge, fris::secrecy_capacity(gb, ge)});
  }
  // lower bound event gamma_b <= 2^R gamma_e
  std::uint64_t hits = 0;
  for (const auto& r : records) hits += r.snr_b <= std::exp2(rate) * r.snr_e;
  const auto est = proportion_estimate(hits, records.size());
  const double z = a / (b * std::exp2(rate));
  const double closed = fris::sop_lower_bound_reduced(1.0, z);
  EXPECT_GE(closed, est.ci_low);
  EXPECT_LE(closed, est.ci_high);
  // and the actual outage sits above it
  EXPECT_GE(estimate_sop(records, rate).value, est.value);
}

TEST(Asc, ConstantRecords) {
  const auto e = estimate_asc(from_secrecy(std::vector<double>(100, 1.25)));
  EXPECT_EQ(e.value, 1.25);
  EXPECT_EQ(e.std_error, 0.0);
  EXPECT_EQ(e.ci_low, 1.25);
  EXPECT_EQ(e.ci_high, 1.25);
}

TEST(Asc, DegenerateBobNoEve) {
  std::vector<TrialRecord> r(10, {0, 0, 3.0, 0.0, fris::secrecy_capacity(3.0, 0.0)});
  EXPECT_NEAR(estimate_asc(r).value, 2.0, 1e-15);
}

TEST(Asc, NeedsTwoRecords) {
  EXPECT_THROW(estimate_asc(from_secrecy({1.0})), fris::DomainError);
}

TEST(Asc, SyntheticRecordsMatchOracle) {
  const fris::GammaFit bob{3.0, 1.0};
  const fris::ExpFit eve{1.0};
  fris::LinkBudget budget{1.0, 1e-300, 1.0, 1.0, 1.0, 1.0, 1.0 / 40.0, 1.0 / 5.0};
  std::mt19937_64 rng(3);
  std::gamma_distribution<double> gb(3.0, 40.0);
  std::exponential_distribution<double> ge(1.0 / 5.0);
  std::vector<TrialRecord> records;
  for (int i = 0; i < 200000; ++i) {
    const double b = gb(rng), e = ge(rng);
    records.push_back({0, 0, b, e, fris::secrecy_capacity(b, e)});
  }
  const auto est = estimate_asc(records);
  const double oracle = fris::asc_oracle(bob, eve, budget);
  EXPECT_GE(oracle, est.ci_low);
  EXPECT_LE(oracle, est.ci_high);
}

TEST(Ks, SamplesFromTheCdfItself) {
  std::mt19937_64 rng(4);
  std::exponential_distribution<double> d(2.0);
  std::vector<double> x(100000);
  for (auto& v : x) v = d(rng);
  EXPECT_LE(ks_statistic(x, [](double g) { return -std::expm1(-2.0 * g); }), 0.01);
}

TEST(Ks, DegenerateSamples) {
  const std::vector<double> x(200, 0.7);
  auto cdf = [](double g) { return -std::expm1(-g); };
  const double f = cdf(0.7);
  EXPECT_NEAR(ks_statistic(x, cdf), std::max(f, 1.0 - f), 1e-15);
}

TEST(Ks, MismatchedLawIsLarge) {
  std::mt19937_64 rng(5);
  std::exponential_distribution<double> d(1.0);
  std::vector<double> x(1000);
  for (auto& v : x) v = d(rng) + 5.0;
  EXPECT_GT(ks_statistic(x, [](double g) { return -std::expm1(-g); }), 0.99);
}

TEST(Ks, NeedsHundredSamples) {
  EXPECT_THROW(ks_statistic(std::vector<double>(99, 1.0), [](double) { return 0.5; }), fris::DomainError);
}

}  // namespace
