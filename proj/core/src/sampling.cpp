#include "cxhyp/sampling.hpp"

#include <cmath>

namespace cxhyp {

BallPoint random_ball_point(RngStream& rng, double max_radius) {
  double g[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& v : g) {
      v = rng.gaussian();
      n2 += v * v;
    }
  } while (n2 == 0.0);
  const double r = max_radius * std::pow(rng.next_double(), 0.25) / std::sqrt(n2);
  return {{r * g[0], r * g[1]}, {r * g[2], r * g[3]}};
}

Isometry random_isometry(RngStream& rng) {
  const Complex w{0.8 * rng.uniform(-1.0, 1.0), 0.8 * rng.uniform(-1.0, 1.0)};
  const double r = std::abs(w);
  const Complex w_in = r < 0.9 ? w : (0.9 / r) * w;
  Isometry g = normalized_loxodromic(w_in, rng.uniform(-3.0, 3.0));
  g = g * axis_translation(rng.uniform(0.05, 0.9));
  g = g * rotation_about_line(rng.uniform(-3.0, 3.0));
  g = g * rotation_in_line(rng.uniform(-3.0, 3.0));
  return g;
}

LinePair random_ultraparallel_pair(RngStream& rng, double d_min, double d_max) {
  const double d = rng.uniform(d_min, d_max);
  const double x = std::tanh(0.5 * d);
  const ComplexLine l1 = ComplexLine::from_polar({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
  const Isometry g = random_isometry(rng);
  return {apply_line(g, l1), apply_line(g, l2), d};
}

} // namespace cxhyp
