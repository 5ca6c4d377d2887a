#ifndef FRIS_HARNESS_ENGINE_HPP
#define FRIS_HARNESS_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fris/configuration.hpp"
#include "fris/harness/config.hpp"
#include "fris/harness/estimators.hpp"
#include "fris/secrecy.hpp"
#include "fris/surface.hpp"

namespace fris::harness {

/// Everything about a scenario that does not change from trial to trial.
struct ScenarioSetup {
  Scenario scenario;
  SurfaceGeometry geometry;
  CorrelationMatrix correlation;
  int m = 0;
  int m_on = 0;
  /// Frozen configuration for the fixed policies.
  std::optional<FrisConfiguration> fixed;
};

/// Resolves geometry (the experiment surface, the scenario's own grid, or the
/// lambda/2 conventional array) and, for fixed policies, the frozen configuration.
ScenarioSetup build_scenario(const ExperimentConfig& config, const Scenario& scenario);

struct RunOptions {
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  int workers = 1;
  int fit_samples = 256;
  /// Mixed into the stream id so that repeated scenarios in one sweep get
  /// independent draws.
  std::uint64_t salt = 0;
};

/// Per-trial channel gains of one scenario plus its moment-matched fits.
struct GainSample {
  std::vector<double> gain_b;
  std::vector<double> gain_e;
  double tr2 = 0.0;
  double tr4 = 0.0;
  /// tr(Phi J~ Phi^H J~); differs from tr2 only for non-uniform fixed phases.
  double phase_trace = 0.0;
  GammaFit bob;
  ExpFit eve;
};

/// Random-stream id of a scenario; depends on policy, grid, M_ON and salt only.
std::uint64_t scenario_stream(const ScenarioSetup& setup, std::uint64_t salt);

/// Runs the trials. Trial t always uses make_trial_engine(seed, stream, t), so
/// the output does not depend on the worker count. For adaptive policies the
/// fit traces are averaged over the configurations of the first fit_samples trials.
GainSample simulate_gains(const ScenarioSetup& setup, const RunOptions& options);

/// SNRs and secrecy capacities of the sampled gains under one link budget.
std::vector<TrialRecord> make_records(const GainSample& gains, const LinkBudget& budget);

/// Full pipeline for one scenario under the experiment's own budget.
std::vector<TrialRecord> run_trials(const ExperimentConfig& config, const Scenario& scenario);

}  // namespace fris::harness

#endif  // FRIS_HARNESS_ENGINE_HPP
