#include "cxhyp/measure.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "cxhyp/errors.hpp"
#include "cxhyp/rng.hpp"

namespace cxhyp {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
constexpr std::uint64_t kShardSize = 1u << 15;
} // namespace

WedgeParams::WedgeParams(double s_, double eps_, double psi_) : s(s_), eps(eps_), psi(psi_) {
  if (!(s > 0.0) || !(eps > 0.0) || !(psi > 0.0) || psi > kTwoPi + 1e-15)
    throw ParameterOutOfRange("WedgeParams: need s > 0, eps > 0, psi in (0, 2 pi]");
}

double disc_area(double r) {
  if (r < 0.0) throw NegativeRadius("disc_area: radius must be nonnegative");
  const double sh = std::sinh(0.5 * r);
  return 4.0 * kPi * sh * sh;
}

double half_projection_disc_area(double d) {
  if (!(d > 0.0)) throw NonPositiveDistance("half_projection_disc_area: requires d > 0");
  return 4.0 * kPi / std::expm1(d);
}

double cosh4_minus_1(double x) {
  const double sh = std::sinh(x);
  const double ch = std::cosh(x);
  return sh * sh * (ch * ch + 1.0);
}

double tube_volume(double area, double eps) {
  if (area < 0.0 || eps < 0.0) throw NegativeInput("tube_volume: inputs must be nonnegative");
  return kTwoPi * cosh4_minus_1(0.5 * eps) * area;
}

double wedge_volume(const WedgeParams& w) {
  return w.psi * cosh4_minus_1(0.5 * w.eps) * disc_area(w.s);
}

McEstimate mc_wedge_volume(const WedgeParams& w, std::uint64_t samples, std::uint64_t seed,
                           unsigned threads) {
  if (samples < 10000) throw InsufficientSamples("mc_wedge_volume: needs at least 10^4 samples");

  const double r2max = std::tanh(0.5 * w.s);        // Euclidean radius of the anchor disc
  const double teps = std::tanh(0.5 * w.eps);       // normal-disc scale
  const double anchor_area = kPi * r2max * r2max;   // Euclidean cell measure in z2
  const std::uint64_t shards = (samples + kShardSize - 1) / kShardSize;

  // Each shard owns an independent stream and a fixed sample count, so the
  // reduction below is identical for every thread count.
  std::vector<double> sums(shards, 0.0), sqsums(shards, 0.0);
  const auto run_shard = [&](std::uint64_t k) {
    RngStream rng(seed, k);
    const std::uint64_t lo = k * kShardSize;
    const std::uint64_t hi = std::min<std::uint64_t>(samples, lo + kShardSize);
    double acc = 0.0, acc2 = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double rho2 = r2max * std::sqrt(rng.next_double()); // |z2|
      const double f = std::sqrt(1.0 - rho2 * rho2) * teps;     // sector radius at this z2
      const double r1 = f * std::sqrt(rng.next_double());       // |z1|
      // Arg z1 is uniform in [-psi/2, psi/2] but never enters the density.
      const double h = 1.0 - r1 * r1 - rho2 * rho2;
      const double density = 16.0 / (h * h * h);
      const double sector_area = 0.5 * w.psi * f * f;
      const double g = density * sector_area * anchor_area;
      acc += g;
      acc2 += g * g;
    }
    sums[k] = acc;
    sqsums[k] = acc2;
  };

  if (threads <= 1 || shards == 1) {
    for (std::uint64_t k = 0; k < shards; ++k) run_shard(k);
  } else {
    const unsigned nt = std::min<std::uint64_t>(threads, shards);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t k = t; k < shards; k += nt) run_shard(k);
      });
    }
    for (auto& th : pool) th.join();
  }

  double total = 0.0, total_sq = 0.0;
  for (std::uint64_t k = 0; k < shards; ++k) {
    total += sums[k];
    total_sq += sqsums[k];
  }
  const double n = static_cast<double>(samples);
  const double mean = total / n;
  double var = (total_sq - total * total / n) / (n - 1.0);
  if (var < 0.0) var = 0.0;
  return {mean, std::sqrt(var / n), samples, seed};
}

} // namespace cxhyp
