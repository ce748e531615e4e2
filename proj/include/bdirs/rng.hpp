#pragma once

#include <complex>
#include <cstdint>

namespace bdirs {

// SplitMix64-based random stream with explicit substream derivation.
//
// Substream contract: RngStream::substream(master, key) yields streams that
// are independent for distinct keys and fully determined by (master, key).
// Monte-Carlo harnesses derive one substream per realization index, so
// results do not depend on execution order or thread count.
//
// Gaussians use the polar form sqrt(-ln u1) * exp(j 2 pi u2), which keeps
// draws bit-identical across platforms (no reliance on the standard
// library's unspecified normal_distribution algorithm).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  static RngStream substream(std::uint64_t master, std::uint64_t key);

  std::uint64_t next_u64();

  // Uniform on [0, 1).
  double uniform();

  // Standard real Gaussian, N(0, 1).
  double gaussian();

  // Circularly-symmetric complex Gaussian, CN(0, 1):
  // real and imaginary parts are independent N(0, 1/2).
  std::complex<double> complex_gaussian();

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace bdirs
