#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace cxhyp {

// Splittable generator (splitmix64 core). A stream is keyed by (seed, stream
// index), so sharded work is reproducible no matter how shards are scheduled.
// Distributions are hand-rolled and bit-identical across platforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed + 0x9E3779B97F4A7C15ull * (stream + 1)) ^ mix(~stream)) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform on the Euclidean unit disc of the given radius.
  std::complex<double> disc(double radius = 1.0) {
    const double r = radius * std::sqrt(next_double());
    const double phi = uniform(0.0, 6.283185307179586476925286766559);
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 6.283185307179586476925286766559 * u2;
    spare_ = mag * std::sin(ang);
    have_spare_ = true;
    return mag * std::cos(ang);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace cxhyp
