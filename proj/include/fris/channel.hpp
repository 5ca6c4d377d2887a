#ifndef FRIS_CHANNEL_HPP
#define FRIS_CHANNEL_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>

#include "fris/configuration.hpp"

namespace fris {

using cplx = std::complex<double>;

enum class Receiver { kBob, kEve };

/// Large-scale link parameters in linear units (watts, meters).
struct LinkBudget {
  double rho = 1.0;     // reference gain at 1 m
  double alpha = 2.5;   // path-loss exponent
  double d_f = 20.0;    // BS -> surface
  double d_b = 30.0;    // surface -> Bob
  double d_e = 30.0;    // surface -> Eve
  double tx_power = 1.0;
  double noise_bob = 1e-12;
  double noise_eve = 1e-11;

  void validate() const;

  double loss_f() const;
  double loss(Receiver r) const;
  /// P / sigma_u^2
  double mean_snr(Receiver r) const;

  /// Same budget with Bob's noise set so that P / sigma_b^2 equals mean_snr.
  LinkBudget with_bob_mean_snr(double mean_snr) const;
};

/// rho * d^-alpha; DomainError for d <= 0.
double path_loss(double rho, double alpha, double d);

double db_to_linear(double db);
double dbm_to_watts(double dbm);

/// Per-trial random engine keyed by (seed, stream, trial). Streams are
/// independent of how trials are distributed over workers.
std::mt19937_64 make_trial_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

/// Small-scale fading for one trial. h_* are i.i.d. CN(0, I_M); v, u_b, u_e
/// are their images under J^{1/2}.
struct ChannelRealization {
  Eigen::VectorXcd h_f, h_b, h_e;
  Eigen::VectorXcd v, u_b, u_e;

  const Eigen::VectorXcd& image(Receiver r) const { return r == Receiver::kBob ? u_b : u_e; }
};

/// Fills an M-vector with CN(0, 1) entries (real and imaginary parts N(0, 1/2)).
void fill_complex_gaussian(std::mt19937_64& engine, Eigen::Ref<Eigen::VectorXcd> out);

ChannelRealization draw_channels(std::mt19937_64& engine, int m, const Eigen::MatrixXd& j_sqrt);

inline ChannelRealization draw_channels(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial,
                                        const Eigen::MatrixXd& j_sqrt) {
  auto engine = make_trial_engine(seed, stream, trial);
  return draw_channels(engine, static_cast<int>(j_sqrt.rows()), j_sqrt);
}

/// H_eq = sum over selected m of conj(u[m]) e^{j phi_m} v[m], i.e.
/// u^H D_phi v with D_phi the configuration's diagonal reflection mask.
template <typename DerivedU, typename DerivedV>
cplx equivalent_channel(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v,
                        const FrisConfiguration& config) {
  const auto& idx = config.selection.indices();
  cplx acc(0.0, 0.0);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const Eigen::Index m = idx[k];
    acc += std::conj(u(m)) * std::polar(1.0, config.phases[k]) * v(m);
  }
  return acc;
}

inline cplx equivalent_channel(const ChannelRealization& realization, const FrisConfiguration& config,
                               Receiver receiver) {
  if (config.selection.total() != realization.v.size() && !config.selection.empty()) {
    throw IndexError("equivalent_channel: configuration does not match surface size");
  }
  return equivalent_channel(realization.image(receiver), realization.v, config);
}

/// |H|^2
inline double channel_gain(cplx h) { return std::norm(h); }

/// gamma_u = (P / sigma_u^2) L_f L_u G_u
double received_snr(double gain, const LinkBudget& budget, Receiver r);

}  // namespace fris

#endif  // FRIS_CHANNEL_HPP
