#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bdirs/rng.hpp"

namespace bdirs {

// Link geometry and tap structure of the frequency-selective channels.
struct ChannelConfig {
  int num_elements = 5;      // M
  int num_subcarriers = 64;  // N
  int cp_length = 16;        // N_CP

  int taps_direct = 16;  // L_D
  int taps_tx_irs = 9;   // L_G
  int taps_irs_rx = 8;   // L_S

  double distance_direct_m = 33.0;
  double distance_tx_irs_m = 30.0;
  double distance_irs_rx_m = 5.0;

  double exponent_direct = 3.5;
  double exponent_tx_irs = 2.2;
  double exponent_irs_rx = 2.8;

  double beta0_db = -30.0;  // reference path power at 1 m

  void validate() const;
  int max_delay_taps() const;  // max(L_D, L_G + L_S - 1)
};

// Time-domain impulse responses. tx_irs[l] and irs_rx[l] are the length-M
// per-element tap vectors of the transmitter-surface and surface-receiver
// links.
struct TimeDomainChannels {
  Eigen::VectorXcd direct;
  std::vector<Eigen::VectorXcd> tx_irs;
  std::vector<Eigen::VectorXcd> irs_rx;
};

// Per-sub-carrier frequency responses. irs_rx[n] is stored so that its
// adjoint equals the tap-domain adjoint transform:
//   irs_rx[n]^H = sum_l s_l^H e^{-j 2 pi n l / N}
// (equivalently irs_rx[n] = sum_l s_l e^{+j 2 pi n l / N}).
struct FrequencyChannels {
  Eigen::VectorXcd direct;
  std::vector<Eigen::VectorXcd> tx_irs;
  std::vector<Eigen::VectorXcd> irs_rx;

  int num_subcarriers() const { return static_cast<int>(direct.size()); }
  int num_elements() const {
    return tx_irs.empty() ? 0 : static_cast<int>(tx_irs.front().size());
  }
};

// Distance path power 10^(beta0_db/10) * d^(-exponent).
double path_power(double beta0_db, double distance_m, double exponent);

// Exponential power delay profile: variances proportional to e^{-l/(L-1)},
// normalized to sum to beta. A single tap carries all of beta.
Eigen::VectorXd tap_variances(double beta, int num_taps);

// Draws all tap coefficients as independent CN(0, var_l). Draw order is
// fixed (direct taps, then tx_irs tap-major then element, then irs_rx) so a
// given stream always produces the same channels.
TimeDomainChannels generate_taps(const ChannelConfig& cfg, RngStream& rng);

// N-point discrete Fourier sums of the taps (direct summation; N is small).
FrequencyChannels to_frequency_domain(const TimeDomainChannels& taps, int n);

// Effective channel h = d + s^H Phi g.
std::complex<double> effective_channel(std::complex<double> d,
                                       const Eigen::VectorXcd& s,
                                       const Eigen::VectorXcd& g,
                                       const Eigen::MatrixXcd& phi);

struct RateResult {
  double sum_bits = 0.0;  // sum_n log2(1 + p_n |h_n|^2 / (Gamma sigma^2))
  double bps_hz = 0.0;    // sum_bits / (N + N_CP)
};

RateResult achievable_rate(const Eigen::VectorXcd& h, const Eigen::VectorXd& p,
                           double gamma_linear, double noise_power_w,
                           int cp_length);

}  // namespace bdirs
