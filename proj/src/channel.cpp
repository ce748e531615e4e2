#include "bdirs/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bdirs {

namespace {

using Complex = std::complex<double>;

}  // namespace

void ChannelConfig::validate() const {
  if (num_elements < 1) {
    throw std::invalid_argument("ChannelConfig: num_elements must be >= 1");
  }
  if (num_subcarriers < 1) {
    throw std::invalid_argument("ChannelConfig: num_subcarriers must be >= 1");
  }
  if (taps_direct < 1 || taps_tx_irs < 1 || taps_irs_rx < 1) {
    throw std::invalid_argument("ChannelConfig: tap counts must be >= 1");
  }
  if (!(distance_direct_m > 0.0) || !(distance_tx_irs_m > 0.0) ||
      !(distance_irs_rx_m > 0.0)) {
    throw std::invalid_argument("ChannelConfig: distances must be > 0");
  }
  if (cp_length < max_delay_taps()) {
    throw std::invalid_argument(
        "ChannelConfig: cp_length (" + std::to_string(cp_length) +
        ") must be >= max delay spread (" + std::to_string(max_delay_taps()) +
        ")");
  }
}

int ChannelConfig::max_delay_taps() const {
  return std::max(taps_direct, taps_tx_irs + taps_irs_rx - 1);
}

double path_power(double beta0_db, double distance_m, double exponent) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("path_power: distance must be > 0");
  }
  return std::pow(10.0, beta0_db / 10.0) * std::pow(distance_m, -exponent);
}

Eigen::VectorXd tap_variances(double beta, int num_taps) {
  if (num_taps < 1) {
    throw std::invalid_argument("tap_variances: need at least one tap");
  }
  Eigen::VectorXd v(num_taps);
  if (num_taps == 1) {
    v(0) = beta;
    return v;
  }
  const double decay = static_cast<double>(num_taps - 1);
  for (int l = 0; l < num_taps; ++l) {
    v(l) = std::exp(-static_cast<double>(l) / decay);
  }
  v *= beta / v.sum();
  return v;
}

TimeDomainChannels generate_taps(const ChannelConfig& cfg, RngStream& rng) {
  cfg.validate();
  const double beta_d =
      path_power(cfg.beta0_db, cfg.distance_direct_m, cfg.exponent_direct);
  const double beta_g =
      path_power(cfg.beta0_db, cfg.distance_tx_irs_m, cfg.exponent_tx_irs);
  const double beta_s =
      path_power(cfg.beta0_db, cfg.distance_irs_rx_m, cfg.exponent_irs_rx);

  const Eigen::VectorXd var_d = tap_variances(beta_d, cfg.taps_direct);
  const Eigen::VectorXd var_g = tap_variances(beta_g, cfg.taps_tx_irs);
  const Eigen::VectorXd var_s = tap_variances(beta_s, cfg.taps_irs_rx);

  TimeDomainChannels out;
  out.direct.resize(cfg.taps_direct);
  for (int l = 0; l < cfg.taps_direct; ++l) {
    out.direct(l) = std::sqrt(var_d(l)) * rng.complex_gaussian();
  }
  out.tx_irs.resize(static_cast<std::size_t>(cfg.taps_tx_irs));
  for (int l = 0; l < cfg.taps_tx_irs; ++l) {
    Eigen::VectorXcd tap(cfg.num_elements);
    for (int m = 0; m < cfg.num_elements; ++m) {
      tap(m) = std::sqrt(var_g(l)) * rng.complex_gaussian();
    }
    out.tx_irs[static_cast<std::size_t>(l)] = std::move(tap);
  }
  out.irs_rx.resize(static_cast<std::size_t>(cfg.taps_irs_rx));
  for (int l = 0; l < cfg.taps_irs_rx; ++l) {
    Eigen::VectorXcd tap(cfg.num_elements);
    for (int m = 0; m < cfg.num_elements; ++m) {
      tap(m) = std::sqrt(var_s(l)) * rng.complex_gaussian();
    }
    out.irs_rx[static_cast<std::size_t>(l)] = std::move(tap);
  }
  return out;
}

FrequencyChannels to_frequency_domain(const TimeDomainChannels& taps, int n) {
  const int l_d = static_cast<int>(taps.direct.size());
  const int l_g = static_cast<int>(taps.tx_irs.size());
  const int l_s = static_cast<int>(taps.irs_rx.size());
  if (n < std::max({l_d, l_g, l_s})) {
    throw std::invalid_argument(
        "to_frequency_domain: N smaller than a tap count");
  }
  const int m_count =
      taps.tx_irs.empty() ? 0 : static_cast<int>(taps.tx_irs.front().size());

  FrequencyChannels out;
  out.direct.resize(n);
  for (int bin = 0; bin < n; ++bin) {
    Complex acc(0.0, 0.0);
    for (int l = 0; l < l_d; ++l) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(bin) *
                           static_cast<double>(l) / static_cast<double>(n);
      acc += taps.direct(l) * std::polar(1.0, angle);
    }
    out.direct(bin) = acc;
  }
  out.tx_irs.resize(static_cast<std::size_t>(n));
  out.irs_rx.resize(static_cast<std::size_t>(n));
  for (int bin = 0; bin < n; ++bin) {
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(m_count);
    Eigen::VectorXcd s = Eigen::VectorXcd::Zero(m_count);
    for (int l = 0; l < l_g; ++l) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(bin) *
                           static_cast<double>(l) / static_cast<double>(n);
      g += taps.tx_irs[static_cast<std::size_t>(l)] * std::polar(1.0, angle);
    }
    // Conjugated kernel: the stored vector's adjoint is the transform of the
    // tap-domain adjoint (see FrequencyChannels).
    for (int l = 0; l < l_s; ++l) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(bin) *
                           static_cast<double>(l) / static_cast<double>(n);
      s += taps.irs_rx[static_cast<std::size_t>(l)] * std::polar(1.0, angle);
    }
    out.tx_irs[static_cast<std::size_t>(bin)] = std::move(g);
    out.irs_rx[static_cast<std::size_t>(bin)] = std::move(s);
  }
  return out;
}

std::complex<double> effective_channel(std::complex<double> d,
                                       const Eigen::VectorXcd& s,
                                       const Eigen::VectorXcd& g,
                                       const Eigen::MatrixXcd& phi) {
  if (s.size() != phi.rows() || g.size() != phi.cols()) {
    throw std::invalid_argument("effective_channel: dimension mismatch");
  }
  return d + (s.adjoint() * phi * g)(0);
}

RateResult achievable_rate(const Eigen::VectorXcd& h, const Eigen::VectorXd& p,
                           double gamma_linear, double noise_power_w,
                           int cp_length) {
  if (h.size() != p.size()) {
    throw std::invalid_argument("achievable_rate: dimension mismatch");
  }
  if (!(gamma_linear >= 1.0)) {
    throw std::invalid_argument("achievable_rate: Gamma must be >= 1");
  }
  if (!(noise_power_w > 0.0)) {
    throw std::invalid_argument("achievable_rate: noise power must be > 0");
  }
  const double gs = gamma_linear * noise_power_w;
  RateResult out;
  for (Eigen::Index n = 0; n < h.size(); ++n) {
    if (p(n) < 0.0) {
      throw std::invalid_argument("achievable_rate: negative power entry");
    }
    out.sum_bits += std::log2(1.0 + p(n) * std::norm(h(n)) / gs);
  }
  out.bps_hz = out.sum_bits /
               static_cast<double>(h.size() + static_cast<Eigen::Index>(cp_length));
  return out;
}

}  // namespace bdirs
