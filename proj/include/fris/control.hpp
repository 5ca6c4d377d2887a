#ifndef FRIS_CONTROL_HPP
#define FRIS_CONTROL_HPP

#include <Eigen/Dense>
#include <random>
#include <utility>

#include "fris/channel.hpp"
#include "fris/configuration.hpp"
#include "fris/surface.hpp"

namespace fris {

/// Phases that align every selected term of Bob's equivalent channel:
/// phi_m = -arg(conj(u_b[m]) v[m]) wrapped to [0, 2 pi).
FrisConfiguration cophase(const Eigen::VectorXcd& u_b, const Eigen::VectorXcd& v, SelectionSet selection,
                          ConfigMode mode = ConfigMode::kAdaptive);

/// Keeps the m_on elements with the largest |u_b[m]| |v[m]| (ties go to the
/// lower index) and co-phases them. Bob's co-phased gain is separable across
/// elements, so this is the best subset of size m_on.
FrisConfiguration select_greedy_cophase(const Eigen::VectorXcd& u_b, const Eigen::VectorXcd& v, int m_on);

inline FrisConfiguration select_greedy_cophase(const ChannelRealization& r, int m_on) {
  return select_greedy_cophase(r.u_b, r.v, m_on);
}

/// Brute force over all C(M, m_on) subsets, each co-phased; keeps the
/// lexicographically first maximizer of |H_eq,b|. Refuses more than 1e6 subsets.
FrisConfiguration select_exhaustive(const ChannelRealization& r, int m_on);

/// sqrt(m_conv) x sqrt(m_conv) array at lambda/2 pitch with every element on.
/// Phases are placeholders; the engine co-phases per trial.
std::pair<SurfaceGeometry, FrisConfiguration> conventional_ris_config(int m_conv, double wavelength);

enum class FixedPhaseMode { kUniform, kRandom };

/// Frozen configuration for statistical validation: first m_on elements with
/// zero phases (uniform), or a uniform random subset with i.i.d. phases (random).
FrisConfiguration fixed_statistical_config(int m, int m_on, FixedPhaseMode mode, std::mt19937_64& engine);

/// tr(Phi J~ Phi^H J~) for the configuration's phases on the reduced matrix;
/// equals tr(J~^2) when all phases are equal.
double phase_weighted_trace(const Eigen::MatrixXd& j_reduced, const std::vector<double>& phases);

}  // namespace fris

#endif  // FRIS_CONTROL_HPP
