#include "fris/channel.hpp"

#include <cmath>
#include <string>

#include "fris/errors.hpp"

namespace fris {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void LinkBudget::validate() const {
  if (!(d_f > 0.0) || !(d_b > 0.0) || !(d_e > 0.0)) throw ConfigError("link budget: distances must be > 0");
  if (!(alpha > 0.0)) throw ConfigError("link budget: path-loss exponent must be > 0");
  if (!(rho > 0.0)) throw ConfigError("link budget: reference gain must be > 0");
  if (!(tx_power > 0.0)) throw ConfigError("link budget: transmit power must be > 0");
  if (!(noise_bob > 0.0) || !(noise_eve > 0.0)) throw ConfigError("link budget: noise powers must be > 0");
}

double LinkBudget::loss_f() const { return path_loss(rho, alpha, d_f); }

double LinkBudget::loss(Receiver r) const { return path_loss(rho, alpha, r == Receiver::kBob ? d_b : d_e); }

double LinkBudget::mean_snr(Receiver r) const {
  return tx_power / (r == Receiver::kBob ? noise_bob : noise_eve);
}

LinkBudget LinkBudget::with_bob_mean_snr(double mean_snr) const {
  if (!(mean_snr > 0.0)) throw ConfigError("link budget: mean SNR must be > 0");
  LinkBudget out = *this;
  out.noise_bob = tx_power / mean_snr;
  return out;
}

double path_loss(double rho, double alpha, double d) {
  if (!(d > 0.0)) throw DomainError("path_loss: distance must be > 0");
  return rho * std::pow(d, -alpha);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

std::mt19937_64 make_trial_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  const std::uint64_t key = splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ trial);
  return std::mt19937_64(key);
}

void fill_complex_gaussian(std::mt19937_64& engine, Eigen::Ref<Eigen::VectorXcd> out) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const double re = normal(engine);
    const double im = normal(engine);
    out(i) = cplx(re, im);
  }
}

ChannelRealization draw_channels(std::mt19937_64& engine, int m, const Eigen::MatrixXd& j_sqrt) {
  if (m < 1 || j_sqrt.rows() != m || j_sqrt.cols() != m) {
    throw NumericError("draw_channels: correlation root must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  ChannelRealization r;
  r.h_f.resize(m);
  r.h_b.resize(m);
  r.h_e.resize(m);
  fill_complex_gaussian(engine, r.h_f);
  fill_complex_gaussian(engine, r.h_b);
  fill_complex_gaussian(engine, r.h_e);
  r.v = j_sqrt * r.h_f;
  r.u_b = j_sqrt * r.h_b;
  r.u_e = j_sqrt * r.h_e;
  return r;
}

double received_snr(double gain, const LinkBudget& budget, Receiver r) {
  return budget.mean_snr(r) * budget.loss_f() * budget.loss(r) * gain;
}

}  // namespace fris
