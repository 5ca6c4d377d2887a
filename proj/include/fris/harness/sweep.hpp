#ifndef FRIS_HARNESS_SWEEP_HPP
#define FRIS_HARNESS_SWEEP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fris/harness/config.hpp"
#include "fris/harness/csv.hpp"
#include "fris/harness/engine.hpp"
#include "fris/harness/estimators.hpp"

namespace fris::harness {

/// One point of an SNR or size sweep for one scenario.
struct SweepRow {
  std::string sweep;  // "snr" or "size"
  double sweep_value = 0.0;
  Policy policy = Policy::kGreedy;
  int m = 0;
  int m_on = 0;
  int mx = 0;
  int mz = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  double bob_mean_snr_db = 0.0;
  MetricEstimate asc;
  MetricEstimate sop;
  double asc_upper_bound = 0.0;
  double sop_lower_bound = 0.0;
  double k_b = 0.0;
  double theta_b = 0.0;
  double theta_e = 0.0;
  double ks_gain_b = 0.0;
  double ks_gain_e = 0.0;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
  /// MC SOP >= bound - 2 SE.
  bool sop_bound_holds() const;
  bool asc_bound_holds() const;
};

/// Restricts the FRIS scenarios of a config to one policy; "conventional"
/// keeps only the conventional baselines.
void apply_policy_override(ExperimentConfig& config, Policy policy);

/// Every scenario at every Bob mean SNR of the grid. Gains are simulated once
/// per scenario and shared across the grid.
std::vector<SweepRow> run_snr_sweep(const ExperimentConfig& config);

/// FRIS at size_m_on over each grid of size_grid (fixed aperture), and the
/// conventional array of size_m_on elements with a fresh stream per point.
std::vector<SweepRow> run_size_sweep(const ExperimentConfig& config);

Table sweep_table(std::span<const SweepRow> rows);

/// Moment checks of the fixed-configuration fits.
struct FitCheck {
  Policy policy = Policy::kFixedUniform;
  int m = 0;
  int m_on = 0;
  std::uint64_t trials = 0;
  GainSample gains;
  MetricEstimate mean_gain_b;
  MetricEstimate mean_gain_e;
  double rel_err_gain_b = 0.0;  // vs tr(J~^2)
  double rel_err_gain_e = 0.0;  // vs 1 / theta_e
  double ks_gain_b = 0.0;
  double ks_gain_e = 0.0;
  std::string status = "ok";
};

std::vector<FitCheck> run_fit_checks(const ExperimentConfig& config, Policy policy);
Table fit_table(std::span<const FitCheck> checks, double ks_threshold);

/// Closed form against numerical reference.
struct BoundCheck {
  std::string kind;    // "sop", "meijer" or "asc"
  std::string policy;  // asc rows only
  double shape = 0.0;
  double argument = 0.0;  // z, or Bob's mean SNR in dB for asc rows
  double closed_form = 0.0;
  double oracle = 0.0;
  double rel_err = 0.0;    // |closed - oracle| / |oracle|; signed for asc
  double tolerance = 0.0;  // nan for asc rows
  bool ok = false;
  std::string status = "ok";
};

std::vector<double> log_grid(double lo, double hi, int n);
std::vector<BoundCheck> sop_bound_checks(std::span<const double> shapes, std::span<const double> args);
std::vector<BoundCheck> meijer_checks(std::span<const double> shapes, std::span<const double> args);
/// Sign of asc_upper_bound - asc_oracle for each scenario over the SNR grid,
/// with fits from fit_samples trials.
std::vector<BoundCheck> asc_bound_checks(const ExperimentConfig& config);
std::vector<BoundCheck> run_bound_checks(const ExperimentConfig& config);
Table bound_table(std::span<const BoundCheck> checks);

Table correlation_table(const CorrelationMatrix& c, bool root);

}  // namespace fris::harness

#endif  // FRIS_HARNESS_SWEEP_HPP
