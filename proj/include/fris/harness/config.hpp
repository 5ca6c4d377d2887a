#ifndef FRIS_HARNESS_CONFIG_HPP
#define FRIS_HARNESS_CONFIG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fris/channel.hpp"
#include "fris/surface.hpp"
#include "json.hpp"

namespace fris::harness {

enum class Policy { kGreedy, kFixedUniform, kFixedRandom, kConventional };

Policy parse_policy(const std::string& name);
std::string policy_name(Policy p);

/// One curve of an experiment. For surface policies mx/mz of 0 mean "use the
/// experiment's surface grid"; for kConventional m_on is M_conv.
struct Scenario {
  Policy policy = Policy::kGreedy;
  int m_on = 100;
  int mx = 0;
  int mz = 0;
};

/// Resolved experiment parameters. Powers are given in dBm, SNR grids in dB;
/// everything is converted to linear units once, by budget().
struct ExperimentConfig {
  double carrier_hz = 2.4e9;

  // surface
  int mx = 20;
  int mz = 20;
  double wx = 3.0;
  double wz = 3.0;

  // link budget
  double rho = 1.0;
  double alpha = 2.5;
  double d_f = 20.0;
  double d_b = 30.0;
  double d_e = 30.0;
  double tx_power_dbm = 30.0;
  double noise_bob_dbm = -90.0;
  double noise_eve_dbm = -80.0;

  double target_rate = 1.0;

  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int workers = 1;

  std::vector<Scenario> scenarios;
  std::vector<double> snr_grid_db;
  std::vector<std::pair<int, int>> size_grid;
  int size_m_on = 64;

  int fits_mx = 10;
  int fits_mz = 10;
  std::vector<int> fits_m_on;

  int fit_samples = 256;
  double ks_threshold = 0.05;

  std::string out;

  /// Reference 2.4 GHz defaults with the scenario lists and grids filled in.
  static ExperimentConfig defaults();

  double wavelength() const;
  LinkBudget budget() const;
  SurfaceGeometry surface() const;
  SurfaceGeometry surface(int grid_x, int grid_z) const;
  /// Throws ConfigError on the first violated invariant.
  void validate() const;
};

/// Overlays keys present in the JSON object onto the defaults. Unknown keys
/// are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json config_to_json(const ExperimentConfig& c);

}  // namespace fris::harness

#endif  // FRIS_HARNESS_CONFIG_HPP
