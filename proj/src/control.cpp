#include "fris/control.hpp"

#include <algorithm>
#include <iterator>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "fris/errors.hpp"

namespace fris {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void check_m_on(int m_on, int m) {
  if (m_on < 1 || m_on > m) {
    throw ConfigError("M_ON = " + std::to_string(m_on) + " outside [1, " + std::to_string(m) + "]");
  }
}

}  // namespace

void FrisConfiguration::validate() const {
  if (phases.size() != static_cast<std::size_t>(selection.size())) {
    throw ConfigError("configuration: one phase per selected element required");
  }
  for (double p : phases) {
    if (!std::isfinite(p)) throw ConfigError("configuration: phases must be finite");
  }
}

FrisConfiguration cophase(const Eigen::VectorXcd& u_b, const Eigen::VectorXcd& v, SelectionSet selection,
                          ConfigMode mode) {
  if (u_b.size() != v.size() || selection.total() != v.size()) {
    throw IndexError("cophase: channel and selection sizes differ");
  }
  FrisConfiguration cfg;
  cfg.phases.reserve(static_cast<std::size_t>(selection.size()));
  for (int m : selection.indices()) cfg.phases.push_back(wrap_phase(-std::arg(std::conj(u_b(m)) * v(m))));
  cfg.selection = std::move(selection);
  cfg.mode = mode;
  return cfg;
}

FrisConfiguration select_greedy_cophase(const Eigen::VectorXcd& u_b, const Eigen::VectorXcd& v, int m_on) {
  const int m = static_cast<int>(v.size());
  if (u_b.size() != v.size()) throw IndexError("select_greedy_cophase: channel sizes differ");
  check_m_on(m_on, m);

  const Eigen::VectorXd strength = u_b.cwiseAbs().cwiseProduct(v.cwiseAbs());
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + m_on, order.end(), [&](int a, int b) {
    return strength(a) > strength(b) || (strength(a) == strength(b) && a < b);
  });
  order.resize(static_cast<std::size_t>(m_on));
  std::sort(order.begin(), order.end());
  return cophase(u_b, v, SelectionSet(std::move(order), m));
}

FrisConfiguration select_exhaustive(const ChannelRealization& r, int m_on) {
  const int m = static_cast<int>(r.v.size());
  check_m_on(m_on, m);
  if (binomial(m, m_on) > 1e6) {
    throw ConfigError("select_exhaustive: C(" + std::to_string(m) + ", " + std::to_string(m_on) +
                      ") exceeds the 1e6 subset budget");
  }

  std::vector<int> subset(static_cast<std::size_t>(m_on));
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<int> best;
  double best_value = -1.0;
  while (true) {
    const auto cfg = cophase(r.u_b, r.v, SelectionSet(subset, m));
    const double value = std::abs(equivalent_channel(r, cfg, Receiver::kBob));
    if (value > best_value) {
      best_value = value;
      best = subset;
    }
    // next combination in lexicographic order
    int i = m_on - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - m_on + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m_on; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return cophase(r.u_b, r.v, SelectionSet(std::move(best), m));
}

std::pair<SurfaceGeometry, FrisConfiguration> conventional_ris_config(int m_conv, double wavelength) {
  if (m_conv < 1) throw ConfigError("conventional RIS: M_conv must be >= 1");
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m_conv))));
  if (side * side != m_conv) {
    throw ConfigError("conventional RIS: M_conv = " + std::to_string(m_conv) +
                      " is not a perfect square (nearest is " + std::to_string(side * side) + ")");
  }
  auto geometry = SurfaceGeometry::square_with_pitch(side, 0.5, wavelength);
  FrisConfiguration cfg;
  cfg.selection = SelectionSet::all(m_conv);
  cfg.phases.assign(static_cast<std::size_t>(m_conv), 0.0);
  cfg.mode = ConfigMode::kAdaptive;
  return {geometry, cfg};
}

FrisConfiguration fixed_statistical_config(int m, int m_on, FixedPhaseMode mode, std::mt19937_64& engine) {
  check_m_on(m_on, m);
  FrisConfiguration cfg;
  if (mode == FixedPhaseMode::kUniform) {
    cfg.selection = SelectionSet::first(m_on, m);
    cfg.phases.assign(static_cast<std::size_t>(m_on), 0.0);
    cfg.mode = ConfigMode::kFixedUniform;
    return cfg;
  }
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(m_on));
  std::sample(pool.begin(), pool.end(), std::back_inserter(chosen), m_on, engine);
  cfg.selection = SelectionSet(std::move(chosen), m);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int k = 0; k < m_on; ++k) cfg.phases.push_back(wrap_phase(phase(engine)));
  cfg.mode = ConfigMode::kFixedRandom;
  return cfg;
}

double phase_weighted_trace(const Eigen::MatrixXd& j_reduced, const std::vector<double>& phases) {
  const auto n = j_reduced.rows();
  if (j_reduced.cols() != n || static_cast<std::size_t>(n) != phases.size()) {
    throw IndexError("phase_weighted_trace: size mismatch");
  }
  double acc = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      acc += j_reduced(a, b) * j_reduced(b, a) * std::cos(phases[static_cast<std::size_t>(a)] -
                                                         phases[static_cast<std::size_t>(b)]);
    }
  }
  return acc;
}

}  // namespace fris
