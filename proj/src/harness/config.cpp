#include "fris/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "fris/errors.hpp"

namespace fris::harness {
namespace {

using nlohmann::json;

constexpr double kSpeedOfLight = 299792458.0;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <typename T>
void read(const json& j, const char* key, T& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

std::vector<double> read_grid(const json& g) {
  if (g.is_array()) return g.get<std::vector<double>>();
  reject_unknown(g, {"start", "stop", "step"}, "snr_grid_db");
  const double start = g.at("start").get<double>();
  const double stop = g.at("stop").get<double>();
  const double step = g.at("step").get<double>();
  if (!(step > 0.0) || stop < start) throw ConfigError("snr_grid_db: need step > 0 and stop >= start");
  std::vector<double> out;
  const auto n = static_cast<int>(std::floor((stop - start) / step + 1e-9));
  for (int i = 0; i <= n; ++i) out.push_back(start + i * step);
  return out;
}

}  // namespace

Policy parse_policy(const std::string& name) {
  if (name == "greedy") return Policy::kGreedy;
  if (name == "fixed-uniform") return Policy::kFixedUniform;
  if (name == "fixed-random") return Policy::kFixedRandom;
  if (name == "conventional") return Policy::kConventional;
  throw ConfigError("unknown policy '" + name + "' (greedy | fixed-uniform | fixed-random | conventional)");
}

std::string policy_name(Policy p) {
  switch (p) {
    case Policy::kGreedy:
      return "greedy";
    case Policy::kFixedUniform:
      return "fixed-uniform";
    case Policy::kFixedRandom:
      return "fixed-random";
    case Policy::kConventional:
      return "conventional";
  }
  return "unknown";
}

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig c;
  c.scenarios = {{Policy::kGreedy, 50},        {Policy::kGreedy, 100},        {Policy::kGreedy, 200},
                 {Policy::kConventional, 49},  {Policy::kConventional, 100},  {Policy::kConventional, 196}};
  for (int db = 60; db <= 120; db += 5) c.snr_grid_db.push_back(db);
  for (int side = 10; side <= 20; side += 2) c.size_grid.emplace_back(side, side);
  c.fits_m_on = {10, 50, 100};
  return c;
}

double ExperimentConfig::wavelength() const { return kSpeedOfLight / carrier_hz; }

LinkBudget ExperimentConfig::budget() const {
  LinkBudget b;
  b.rho = rho;
  b.alpha = alpha;
  b.d_f = d_f;
  b.d_b = d_b;
  b.d_e = d_e;
  b.tx_power = dbm_to_watts(tx_power_dbm);
  b.noise_bob = dbm_to_watts(noise_bob_dbm);
  b.noise_eve = dbm_to_watts(noise_eve_dbm);
  b.validate();
  return b;
}

SurfaceGeometry ExperimentConfig::surface() const { return surface(mx, mz); }

SurfaceGeometry ExperimentConfig::surface(int grid_x, int grid_z) const {
  SurfaceGeometry g{grid_x, grid_z, wx, wz, wavelength()};
  g.validate();
  return g;
}

void ExperimentConfig::validate() const {
  if (!(carrier_hz > 0.0)) throw ConfigError("carrier_hz must be > 0");
  surface().validate();
  budget();
  if (!(target_rate >= 0.0)) throw ConfigError("target_rate must be >= 0");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (fit_samples < 1) throw ConfigError("fit_samples must be >= 1");
  if (scenarios.empty()) throw ConfigError("scenarios must not be empty");
  for (const auto& s : scenarios) {
    if (s.m_on < 1) throw ConfigError("scenario m_on must be >= 1");
    if (s.mx < 0 || s.mz < 0) throw ConfigError("scenario grid must be >= 0");
  }
  auto increasing = [](const auto& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!(v[i - 1] < v[i])) return false;
    return !v.empty();
  };
  if (!increasing(snr_grid_db)) throw ConfigError("snr_grid_db must be nonempty and strictly increasing");
  std::vector<int> sizes;
  for (const auto& [gx, gz] : size_grid) {
    if (gx < 1 || gz < 1) throw ConfigError("size_grid entries must be >= 1");
    sizes.push_back(gx * gz);
  }
  if (!increasing(sizes)) throw ConfigError("size_grid must be nonempty and strictly increasing in M");
  if (size_m_on < 1) throw ConfigError("size_m_on must be >= 1");
  if (fits_mx < 1 || fits_mz < 1 || fits_m_on.empty()) throw ConfigError("fits block is incomplete");
  if (!(ks_threshold > 0.0 && ks_threshold < 1.0)) throw ConfigError("ks_threshold must lie in (0, 1)");
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c = ExperimentConfig::defaults();
  try {
    reject_unknown(j,
                   {"carrier_hz", "surface", "link", "target_rate", "trials", "seed", "workers", "scenarios",
                    "snr_grid_db", "size_grid", "size_m_on", "fits", "fit_samples", "ks_threshold", "out"},
                   "config");
    read(j, "carrier_hz", c.carrier_hz);
    if (j.contains("surface")) {
      const auto& s = j.at("surface");
      reject_unknown(s, {"mx", "mz", "wx", "wz"}, "surface");
      read(s, "mx", c.mx);
      read(s, "mz", c.mz);
      read(s, "wx", c.wx);
      read(s, "wz", c.wz);
    }
    if (j.contains("link")) {
      const auto& l = j.at("link");
      reject_unknown(l, {"rho", "alpha", "d_f", "d_b", "d_e", "tx_power_dbm", "noise_bob_dbm", "noise_eve_dbm"},
                     "link");
      read(l, "rho", c.rho);
      read(l, "alpha", c.alpha);
      read(l, "d_f", c.d_f);
      read(l, "d_b", c.d_b);
      read(l, "d_e", c.d_e);
      read(l, "tx_power_dbm", c.tx_power_dbm);
      read(l, "noise_bob_dbm", c.noise_bob_dbm);
      read(l, "noise_eve_dbm", c.noise_eve_dbm);
    }
    read(j, "target_rate", c.target_rate);
    read(j, "trials", c.trials);
    read(j, "seed", c.seed);
    read(j, "workers", c.workers);
    if (j.contains("scenarios")) {
      c.scenarios.clear();
      for (const auto& s : j.at("scenarios")) {
        reject_unknown(s, {"policy", "m_on", "mx", "mz"}, "scenario");
        Scenario sc;
        sc.policy = parse_policy(s.at("policy").get<std::string>());
        sc.m_on = s.at("m_on").get<int>();
        read(s, "mx", sc.mx);
        read(s, "mz", sc.mz);
        c.scenarios.push_back(sc);
      }
    }
    if (j.contains("snr_grid_db")) c.snr_grid_db = read_grid(j.at("snr_grid_db"));
    if (j.contains("size_grid")) c.size_grid = j.at("size_grid").get<std::vector<std::pair<int, int>>>();
    read(j, "size_m_on", c.size_m_on);
    if (j.contains("fits")) {
      const auto& f = j.at("fits");
      reject_unknown(f, {"mx", "mz", "m_on"}, "fits");
      read(f, "mx", c.fits_mx);
      read(f, "mz", c.fits_mz);
      read(f, "m_on", c.fits_m_on);
    }
    read(j, "fit_samples", c.fit_samples);
    read(j, "ks_threshold", c.ks_threshold);
    read(j, "out", c.out);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

json config_to_json(const ExperimentConfig& c) {
  json scenarios = json::array();
  for (const auto& s : c.scenarios) {
    scenarios.push_back({{"policy", policy_name(s.policy)}, {"m_on", s.m_on}, {"mx", s.mx}, {"mz", s.mz}});
  }
  return {
      {"carrier_hz", c.carrier_hz},
      {"surface", {{"mx", c.mx}, {"mz", c.mz}, {"wx", c.wx}, {"wz", c.wz}}},
      {"link",
       {{"rho", c.rho},
        {"alpha", c.alpha},
        {"d_f", c.d_f},
        {"d_b", c.d_b},
        {"d_e", c.d_e},
        {"tx_power_dbm", c.tx_power_dbm},
        {"noise_bob_dbm", c.noise_bob_dbm},
        {"noise_eve_dbm", c.noise_eve_dbm}}},
      {"target_rate", c.target_rate},
      {"trials", c.trials},
      {"seed", c.seed},
      {"workers", c.workers},
      {"scenarios", scenarios},
      {"snr_grid_db", c.snr_grid_db},
      {"size_grid", c.size_grid},
      {"size_m_on", c.size_m_on},
      {"fits", {{"mx", c.fits_mx}, {"mz", c.fits_mz}, {"m_on", c.fits_m_on}}},
      {"fit_samples", c.fit_samples},
      {"ks_threshold", c.ks_threshold},
      {"out", c.out},
  };
}

}  // namespace fris::harness
