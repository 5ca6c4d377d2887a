#include "fris/harness/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "fris/channel.hpp"
#include "fris/control.hpp"
#include "fris/errors.hpp"

namespace fris::harness {
namespace {

constexpr std::uint64_t kBatch = 128;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h = (h ^ (h >> 31)) * 0x7fb5d329728ea185ULL;
  return h ^ (h >> 27);
}

bool is_adaptive(Policy p) { return p == Policy::kGreedy || p == Policy::kConventional; }

// Top-m_on indices by strength, ties to the lower index, returned sorted.
void select_top(const Eigen::VectorXd& strength, int m_on, std::vector<int>& order) {
  order.resize(static_cast<std::size_t>(strength.size()));
  std::iota(order.begin(), order.end(), 0);
  auto better = [&](int a, int b) { return strength(a) > strength(b) || (strength(a) == strength(b) && a < b); };
  if (m_on < static_cast<int>(order.size())) {
    std::nth_element(order.begin(), order.begin() + m_on, order.end(), better);
    order.resize(static_cast<std::size_t>(m_on));
  }
  std::sort(order.begin(), order.end());
}

struct BatchWorkspace {
  Eigen::MatrixXd h;
  Eigen::MatrixXd y;
  Eigen::VectorXd strength;
  std::vector<int> order;
};

}  // namespace

ScenarioSetup build_scenario(const ExperimentConfig& config, const Scenario& scenario) {
  ScenarioSetup s;
  s.scenario = scenario;
  if (scenario.policy == Policy::kConventional) {
    auto [geometry, _] = conventional_ris_config(scenario.m_on, config.wavelength());
    s.geometry = geometry;
  } else if (scenario.mx > 0 && scenario.mz > 0) {
    s.geometry = config.surface(scenario.mx, scenario.mz);
  } else {
    s.geometry = config.surface();
  }
  s.correlation = build_correlation(s.geometry);
  s.m = s.geometry.size();
  s.m_on = scenario.m_on;
  if (s.m_on < 1 || s.m_on > s.m) {
    throw ConfigError("scenario " + policy_name(scenario.policy) + ": M_ON = " + std::to_string(s.m_on) +
                      " outside [1, " + std::to_string(s.m) + "]");
  }
  if (scenario.policy == Policy::kFixedUniform || scenario.policy == Policy::kFixedRandom) {
    const auto mode =
        scenario.policy == Policy::kFixedUniform ? FixedPhaseMode::kUniform : FixedPhaseMode::kRandom;
    auto engine = make_trial_engine(config.seed, scenario_stream(s, 0), std::numeric_limits<std::uint64_t>::max());
    s.fixed = fixed_statistical_config(s.m, s.m_on, mode, engine);
  }
  return s;
}

std::uint64_t scenario_stream(const ScenarioSetup& setup, std::uint64_t salt) {
  std::uint64_t h = 0x5f0e1d2c3b4a5968ULL;
  h = mix(h, static_cast<std::uint64_t>(setup.scenario.policy));
  h = mix(h, static_cast<std::uint64_t>(setup.geometry.mx));
  h = mix(h, static_cast<std::uint64_t>(setup.geometry.mz));
  h = mix(h, static_cast<std::uint64_t>(setup.m_on));
  return mix(h, salt);
}

GainSample simulate_gains(const ScenarioSetup& setup, const RunOptions& options) {
  if (options.trials < 1) throw ConfigError("simulate_gains: trials must be >= 1");
  if (options.workers < 1) throw ConfigError("simulate_gains: workers must be >= 1");
  const int m = setup.m;
  const int m_on = setup.m_on;
  const bool adaptive = is_adaptive(setup.scenario.policy);
  if (!adaptive && !setup.fixed) throw ConfigError("simulate_gains: fixed policy without a configuration");

  const std::uint64_t stream = scenario_stream(setup, options.salt);
  const std::uint64_t n = options.trials;
  const std::uint64_t n_fit = std::min<std::uint64_t>(n, static_cast<std::uint64_t>(std::max(options.fit_samples, 1)));
  const Eigen::MatrixXd& root = setup.correlation.j_sqrt;

  GainSample out;
  out.gain_b.assign(n, 0.0);
  out.gain_e.assign(n, 0.0);
  std::vector<std::vector<int>> fit_selections(adaptive ? n_fit : 0);

  std::vector<cplx> fixed_phasors;
  if (setup.fixed) {
    for (double phi : setup.fixed->phases) fixed_phasors.push_back(std::polar(1.0, phi));
  }

  const std::uint64_t batches = (n + kBatch - 1) / kBatch;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&]() {
    BatchWorkspace ws;
    try {
      for (std::uint64_t b = next.fetch_add(1); b < batches; b = next.fetch_add(1)) {
        const std::uint64_t t0 = b * kBatch;
        const auto nb = static_cast<Eigen::Index>(std::min(kBatch, n - t0));
        ws.h.resize(m, 6 * nb);
        for (Eigen::Index j = 0; j < nb; ++j) {
          auto engine = make_trial_engine(options.seed, stream, t0 + static_cast<std::uint64_t>(j));
          // h_f, h_b, h_e in turn, real then imaginary part per element
          for (int c = 0; c < 3; ++c) {
            std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
            for (int i = 0; i < m; ++i) {
              ws.h(i, 6 * j + 2 * c) = normal(engine);
              ws.h(i, 6 * j + 2 * c + 1) = normal(engine);
            }
          }
        }
        ws.y.noalias() = root * ws.h;

        for (Eigen::Index j = 0; j < nb; ++j) {
          const std::uint64_t t = t0 + static_cast<std::uint64_t>(j);
          auto v = [&](int i) { return cplx(ws.y(i, 6 * j), ws.y(i, 6 * j + 1)); };
          auto ub = [&](int i) { return cplx(ws.y(i, 6 * j + 2), ws.y(i, 6 * j + 3)); };
          auto ue = [&](int i) { return cplx(ws.y(i, 6 * j + 4), ws.y(i, 6 * j + 5)); };
          cplx hb(0.0, 0.0), he(0.0, 0.0);
          if (adaptive) {
            ws.strength.resize(m);
            for (int i = 0; i < m; ++i) ws.strength(i) = std::abs(ub(i)) * std::abs(v(i));
            select_top(ws.strength, m_on, ws.order);
            for (int i : ws.order) {
              const cplx w = std::conj(ub(i)) * v(i);
              const double aw = std::abs(w);
              const cplx phasor = aw > 0.0 ? std::conj(w) / aw : cplx(1.0, 0.0);
              hb += w * phasor;
              he += std::conj(ue(i)) * phasor * v(i);
            }
            if (t < n_fit) fit_selections[t] = ws.order;
          } else {
            const auto& idx = setup.fixed->selection.indices();
            for (std::size_t k = 0; k < idx.size(); ++k) {
              const int i = idx[k];
              hb += std::conj(ub(i)) * fixed_phasors[k] * v(i);
              he += std::conj(ue(i)) * fixed_phasors[k] * v(i);
            }
          }
          out.gain_b[t] = channel_gain(hb);
          out.gain_e[t] = channel_gain(he);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(batches);
    }
  };

  const int threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), batches));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  const Eigen::MatrixXd& j = setup.correlation.j;
  if (adaptive) {
    std::vector<double> tr2(n_fit), tr4(n_fit);
    for (std::uint64_t t = 0; t < n_fit; ++t) {
      const Eigen::MatrixXd jr = reduce_correlation(j, SelectionSet(fit_selections[t], m));
      tr2[t] = trace_power(jr, 2);
      tr4[t] = trace_power(jr, 4);
    }
    out.tr2 = pairwise_sum(tr2) / static_cast<double>(n_fit);
    out.tr4 = pairwise_sum(tr4) / static_cast<double>(n_fit);
    out.phase_trace = std::numeric_limits<double>::quiet_NaN();
  } else {
    const Eigen::MatrixXd jr = reduce_correlation(j, setup.fixed->selection);
    out.tr2 = trace_power(jr, 2);
    out.tr4 = trace_power(jr, 4);
    out.phase_trace = phase_weighted_trace(jr, setup.fixed->phases);
  }
  out.bob = gamma_fit_from_traces(out.tr2, out.tr4);
  out.eve = exp_fit_from_traces(out.tr2);
  return out;
}

std::vector<TrialRecord> make_records(const GainSample& gains, const LinkBudget& budget) {
  const double unit_b = received_snr(1.0, budget, Receiver::kBob);
  const double unit_e = received_snr(1.0, budget, Receiver::kEve);
  std::vector<TrialRecord> records(gains.gain_b.size());
  for (std::size_t t = 0; t < records.size(); ++t) {
    auto& r = records[t];
    r.gain_b = gains.gain_b[t];
    r.gain_e = gains.gain_e[t];
    r.snr_b = unit_b * r.gain_b;
    r.snr_e = unit_e * r.gain_e;
    r.secrecy = secrecy_capacity(r.snr_b, r.snr_e);
  }
  return records;
}

std::vector<TrialRecord> run_trials(const ExperimentConfig& config, const Scenario& scenario) {
  const auto setup = build_scenario(config, scenario);
  const RunOptions options{config.trials, config.seed, config.workers, config.fit_samples, 0};
  return make_records(simulate_gains(setup, options), config.budget());
}

}  // namespace fris::harness
