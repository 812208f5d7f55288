#pragma once

#include "cxhyp/isometry.hpp"
#include "cxhyp/rng.hpp"

namespace cxhyp {

// Uniform in the Euclidean ball of the given radius (< 1).
BallPoint random_ball_point(RngStream& rng, double max_radius = 0.95);

// Well-spread J-unitary built from translations and rotations.
Isometry random_isometry(RngStream& rng);

// Ultraparallel pair at distance `d`, moved by a random isometry.
struct LinePair {
  ComplexLine l1, l2;
  double d;
};
LinePair random_ultraparallel_pair(RngStream& rng, double d_min, double d_max);

} // namespace cxhyp
