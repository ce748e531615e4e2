#include "bdirs/rng.hpp"

#include <cmath>
#include <numbers>

namespace bdirs {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RngStream RngStream::substream(std::uint64_t master, std::uint64_t key) {
  // Two scrambles of the (master, key) pair decorrelate nearby keys.
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s = a ^ (key + 0x9E3779B97F4A7C15ULL);
  std::uint64_t b = splitmix64(s);
  return RngStream(b);
}

std::uint64_t RngStream::next_u64() { return splitmix64(state_); }

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> RngStream::complex_gaussian() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1));
  return std::polar(r, 2.0 * std::numbers::pi * u2);
}

}  // namespace bdirs
