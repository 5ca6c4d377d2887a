#include "fris/harness/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fris/errors.hpp"
#include "fris/secrecy.hpp"
#include "fris/specfun.hpp"

namespace fris::harness {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

MetricEstimate nan_estimate() { return {kNaN, kNaN, kNaN, kNaN, 0}; }

double ks_or_nan(const std::vector<double>& samples, const std::function<double(double)>& cdf) {
  return samples.size() < 100 ? kNaN : ks_statistic(samples, cdf);
}

RunOptions options_for(const ExperimentConfig& c, std::uint64_t salt = 0) {
  return {c.trials, c.seed, c.workers, c.fit_samples, salt};
}

SweepRow base_row(const ExperimentConfig& c, const Scenario& sc, const std::string& sweep, double value) {
  SweepRow row;
  row.sweep = sweep;
  row.sweep_value = value;
  row.policy = sc.policy;
  row.m_on = sc.m_on;
  row.seed = c.seed;
  row.trials = c.trials;
  row.asc = nan_estimate();
  row.sop = nan_estimate();
  row.asc_upper_bound = row.sop_lower_bound = kNaN;
  row.k_b = row.theta_b = row.theta_e = row.ks_gain_b = row.ks_gain_e = kNaN;
  return row;
}

void fill_geometry(SweepRow& row, const ScenarioSetup& setup) {
  row.m = setup.m;
  row.mx = setup.geometry.mx;
  row.mz = setup.geometry.mz;
}

void evaluate_point(SweepRow& row, const GainSample& gains, const LinkBudget& budget, double rate) {
  const auto records = make_records(gains, budget);
  row.asc = estimate_asc(records);
  row.sop = estimate_sop(records, rate);
  row.asc_upper_bound = asc_upper_bound(gains.bob, gains.eve, budget);
  row.sop_lower_bound = sop_lower_bound(gains.bob, gains.eve, budget, SecrecyTarget{rate});
}

void fill_fits(SweepRow& row, const GainSample& gains, double ks_b, double ks_e) {
  row.k_b = gains.bob.shape;
  row.theta_b = gains.bob.scale;
  row.theta_e = gains.eve.rate;
  row.ks_gain_b = ks_b;
  row.ks_gain_e = ks_e;
}

std::pair<double, double> ks_pair(const GainSample& g) {
  const double ks_b = ks_or_nan(g.gain_b, [&](double x) { return gamma_cdf(x, g.bob); });
  const double ks_e = ks_or_nan(g.gain_e, [&](double x) { return exp_cdf(x, g.eve); });
  return {ks_b, ks_e};
}

double to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace

bool SweepRow::sop_bound_holds() const { return sop.value >= sop_lower_bound - 2.0 * sop.std_error; }

bool SweepRow::asc_bound_holds() const { return asc_upper_bound >= asc.value; }

void apply_policy_override(ExperimentConfig& config, Policy policy) {
  std::vector<Scenario> kept;
  for (auto s : config.scenarios) {
    if (policy == Policy::kConventional) {
      if (s.policy == Policy::kConventional) kept.push_back(s);
    } else if (s.policy == Policy::kConventional) {
      kept.push_back(s);
    } else {
      s.policy = policy;
      kept.push_back(s);
    }
  }
  if (kept.empty()) throw ConfigError("policy override leaves no scenarios");
  config.scenarios = std::move(kept);
}

std::vector<SweepRow> run_snr_sweep(const ExperimentConfig& config) {
  const LinkBudget base = config.budget();
  std::vector<SweepRow> rows;
  for (const auto& sc : config.scenarios) {
    std::optional<ScenarioSetup> setup;
    std::optional<GainSample> gains;
    std::pair<double, double> ks{kNaN, kNaN};
    std::string failure;
    try {
      setup = build_scenario(config, sc);
      gains = simulate_gains(*setup, options_for(config));
      ks = ks_pair(*gains);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      failure = e.what();
    }
    for (double db : config.snr_grid_db) {
      auto row = base_row(config, sc, "snr", db);
      row.bob_mean_snr_db = db;
      if (setup) fill_geometry(row, *setup);
      if (!gains) {
        row.status = failure;
        rows.push_back(row);
        continue;
      }
      fill_fits(row, *gains, ks.first, ks.second);
      try {
        evaluate_point(row, *gains, base.with_bob_mean_snr(db_to_linear(db)), config.target_rate);
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        row.status = e.what();
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SweepRow> run_size_sweep(const ExperimentConfig& config) {
  const LinkBudget budget = config.budget();
  const double bob_db = to_db(budget.mean_snr(Receiver::kBob));
  std::vector<SweepRow> rows;
  bool fris = false;
  bool conventional = false;
  Policy fris_policy = Policy::kGreedy;
  for (const auto& s : config.scenarios) {
    if (s.policy == Policy::kConventional) {
      conventional = true;
    } else if (!fris) {
      fris = true;
      fris_policy = s.policy;
    }
  }
  std::uint64_t point = 0;
  for (const auto& [gx, gz] : config.size_grid) {
    std::vector<std::pair<Scenario, std::uint64_t>> runs;
    if (fris) runs.push_back({Scenario{fris_policy, config.size_m_on, gx, gz}, 0});
    if (conventional) runs.push_back({Scenario{Policy::kConventional, config.size_m_on, 0, 0}, point + 1});
    for (const auto& [sc, salt] : runs) {
      auto row = base_row(config, sc, "size", static_cast<double>(gx * gz));
      row.bob_mean_snr_db = bob_db;
      try {
        const auto setup = build_scenario(config, sc);
        fill_geometry(row, setup);
        const auto gains = simulate_gains(setup, options_for(config, salt));
        const auto [ks_b, ks_e] = ks_pair(gains);
        fill_fits(row, gains, ks_b, ks_e);
        evaluate_point(row, gains, budget, config.target_rate);
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        row.status = e.what();
      }
      rows.push_back(row);
    }
    ++point;
  }
  return rows;
}

Table sweep_table(std::span<const SweepRow> rows) {
  Table t;
  t.header = {"sweep",        "sweep_value",    "policy",          "m",           "m_on",
              "mx",           "mz",             "seed",            "trials",      "bob_mean_snr_db",
              "asc_mc",       "asc_se",         "asc_ci_low",      "asc_ci_high", "asc_upper_bound",
              "asc_bound_negative", "asc_bound_ok", "sop_mc",         "sop_se",          "sop_ci_low",  "sop_ci_high",
              "sop_lower_bound", "sop_bound_ok", "k_b",            "theta_b",     "theta_e",
              "ks_gain_b",    "ks_gain_e",      "status"};
  for (const auto& r : rows) {
    const auto i64 = [](auto v) { return Cell{static_cast<std::int64_t>(v)}; };
    t.rows.push_back({r.sweep,
                      r.sweep_value,
                      policy_name(r.policy),
                      i64(r.m),
                      i64(r.m_on),
                      i64(r.mx),
                      i64(r.mz),
                      i64(r.seed),
                      i64(r.trials),
                      r.bob_mean_snr_db,
                      r.asc.value,
                      r.asc.std_error,
                      r.asc.ci_low,
                      r.asc.ci_high,
                      r.asc_upper_bound,
                      i64(r.asc_upper_bound < 0.0),
                      i64(r.ok() && r.asc_bound_holds()),
                      r.sop.value,
                      r.sop.std_error,
                      r.sop.ci_low,
                      r.sop.ci_high,
                      r.sop_lower_bound,
                      i64(r.ok() && r.sop_bound_holds()),
                      r.k_b,
                      r.theta_b,
                      r.theta_e,
                      r.ks_gain_b,
                      r.ks_gain_e,
                      r.status});
  }
  return t;
}

std::vector<FitCheck> run_fit_checks(const ExperimentConfig& config, Policy policy) {
  std::vector<FitCheck> out;
  for (int m_on : config.fits_m_on) {
    FitCheck fc;
    fc.policy = policy;
    fc.m_on = m_on;
    fc.trials = config.trials;
    try {
      const Scenario sc{policy, m_on, config.fits_mx, config.fits_mz};
      const auto setup = build_scenario(config, sc);
      fc.m = setup.m;
      fc.gains = simulate_gains(setup, options_for(config));
      fc.mean_gain_b = mean_estimate(fc.gains.gain_b);
      fc.mean_gain_e = mean_estimate(fc.gains.gain_e);
      fc.rel_err_gain_b = std::abs(fc.mean_gain_b.value - fc.gains.tr2) / fc.gains.tr2;
      const double eve_mean = fc.gains.eve.mean();
      fc.rel_err_gain_e = std::abs(fc.mean_gain_e.value - eve_mean) / eve_mean;
      std::tie(fc.ks_gain_b, fc.ks_gain_e) = ks_pair(fc.gains);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      fc.status = e.what();
    }
    out.push_back(std::move(fc));
  }
  return out;
}

Table fit_table(std::span<const FitCheck> checks, double ks_threshold) {
  Table t;
  t.header = {"policy",      "m",          "m_on",          "trials",      "tr2",        "tr4",
              "phase_trace", "k_b",        "theta_b",       "theta_e",     "mean_gain_b", "se_gain_b",
              "rel_err_gain_b", "mean_gain_e", "se_gain_e", "rel_err_gain_e", "ks_gain_b", "ks_gain_e",
              "ks_threshold", "ks_gain_b_ok", "ks_gain_e_ok", "status"};
  for (const auto& c : checks) {
    const auto& g = c.gains;
    t.rows.push_back({policy_name(c.policy),
                      Cell{static_cast<std::int64_t>(c.m)},
                      Cell{static_cast<std::int64_t>(c.m_on)},
                      Cell{static_cast<std::int64_t>(c.trials)},
                      g.tr2,
                      g.tr4,
                      g.phase_trace,
                      g.bob.shape,
                      g.bob.scale,
                      g.eve.rate,
                      c.mean_gain_b.value,
                      c.mean_gain_b.std_error,
                      c.rel_err_gain_b,
                      c.mean_gain_e.value,
                      c.mean_gain_e.std_error,
                      c.rel_err_gain_e,
                      c.ks_gain_b,
                      c.ks_gain_e,
                      ks_threshold,
                      Cell{static_cast<std::int64_t>(c.ks_gain_b <= ks_threshold)},
                      Cell{static_cast<std::int64_t>(c.ks_gain_e <= ks_threshold)},
                      c.status});
  }
  return t;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw DomainError("log_grid: need n >= 2 and 0 < lo < hi");
  std::vector<double> out;
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) out.push_back(std::exp(a + (b - a) * i / (n - 1)));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<BoundCheck> sop_bound_checks(std::span<const double> shapes, std::span<const double> args) {
  std::vector<BoundCheck> out;
  for (double k : shapes) {
    for (double z : args) {
      BoundCheck b{"sop", "", k, z, kNaN, kNaN, kNaN, 1e-6, false, "ok"};
      try {
        b.closed_form = sop_lower_bound_reduced(k, z);
        b.oracle = sop_lower_oracle_reduced(k, z);
        b.rel_err = std::abs(b.closed_form - b.oracle) / std::abs(b.oracle);
        b.ok = b.rel_err <= b.tolerance;
      } catch (const std::exception& e) {
        b.status = e.what();
      }
      out.push_back(b);
    }
  }
  return out;
}

std::vector<BoundCheck> meijer_checks(std::span<const double> shapes, std::span<const double> args) {
  std::vector<BoundCheck> out;
  for (double k : shapes) {
    for (double z : args) {
      BoundCheck b{"meijer", "", k, z, kNaN, kNaN, kNaN, 1e-7, false, "ok"};
      try {
        b.closed_form = meijer_g_2122(z, k);
        b.oracle = meijer_g_2122_oracle(z, k);
        b.rel_err = std::abs(b.closed_form - b.oracle) / std::abs(b.oracle);
        b.ok = b.rel_err <= b.tolerance;
      } catch (const std::exception& e) {
        b.status = e.what();
      }
      out.push_back(b);
    }
  }
  return out;
}

std::vector<BoundCheck> asc_bound_checks(const ExperimentConfig& config) {
  const LinkBudget base = config.budget();
  std::vector<BoundCheck> out;
  for (const auto& sc : config.scenarios) {
    std::optional<GainSample> gains;
    std::string failure;
    try {
      const auto setup = build_scenario(config, sc);
      auto opts = options_for(config);
      opts.trials = static_cast<std::uint64_t>(config.fit_samples);
      gains = simulate_gains(setup, opts);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      failure = e.what();
    }
    for (double db : config.snr_grid_db) {
      BoundCheck b{"asc", policy_name(sc.policy) + ":" + std::to_string(sc.m_on), kNaN, db, kNaN, kNaN, kNaN, kNaN,
                   false, "ok"};
      if (!gains) {
        b.status = failure;
        out.push_back(b);
        continue;
      }
      b.shape = gains->bob.shape;
      try {
        const auto budget = base.with_bob_mean_snr(db_to_linear(db));
        b.closed_form = asc_upper_bound(gains->bob, gains->eve, budget);
        b.oracle = asc_oracle(gains->bob, gains->eve, budget);
        b.rel_err = (b.closed_form - b.oracle) / std::abs(b.oracle);
        b.ok = b.closed_form >= b.oracle;
      } catch (const std::exception& e) {
        b.status = e.what();
      }
      out.push_back(b);
    }
  }
  return out;
}

std::vector<BoundCheck> run_bound_checks(const ExperimentConfig& config) {
  const auto shapes = log_grid(0.5, 50.0, 20);
  const auto args = log_grid(1e-3, 1e6, 10);
  auto out = sop_bound_checks(shapes, args);
  const auto m_shapes = log_grid(0.5, 50.0, 10);
  const auto m_args = log_grid(1e-3, 1e6, 5);
  const auto meijer = meijer_checks(m_shapes, m_args);
  out.insert(out.end(), meijer.begin(), meijer.end());
  const auto asc = asc_bound_checks(config);
  out.insert(out.end(), asc.begin(), asc.end());
  return out;
}

Table bound_table(std::span<const BoundCheck> checks) {
  Table t;
  t.header = {"kind", "scenario", "shape", "argument", "closed_form", "oracle", "rel_err", "tolerance", "ok", "status"};
  for (const auto& b : checks) {
    t.rows.push_back({b.kind, b.policy, b.shape, b.argument, b.closed_form, b.oracle, b.rel_err, b.tolerance,
                      Cell{static_cast<std::int64_t>(b.ok)}, b.status});
  }
  return t;
}

Table correlation_table(const CorrelationMatrix& c, bool root) {
  const Eigen::MatrixXd& a = root ? c.j_sqrt : c.j;
  Table t;
  t.header.push_back("row");
  for (Eigen::Index j = 0; j < a.cols(); ++j) t.header.push_back("c" + std::to_string(j));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::vector<Cell> row{Cell{static_cast<std::int64_t>(i)}};
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.emplace_back(a(i, j));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace fris::harness
