#pragma once

#include <cstdint>

#include "cxhyp/isometry.hpp"

namespace cxhyp {

// Standard position of an ultraparallel pair: the mover carries L1 to {(0,w)},
// the common-perpendicular line to {(z,0)}, the orthogeodesic foot on L1 to
// the origin, and L2's polar to a multiple of (1/x, 0, 1), x = tanh(d/2).
struct NormalizedPair {
  Isometry mover;
  double x = 0.0;
};

NormalizedPair normalize_pair(const ComplexLine& l1, const ComplexLine& l2);

// Samples unit polar vectors within Euclidean distance epsilon of M's (in the
// chart where L is standard) and reports whether every sampled line still
// meets L. Requires transversal L, M and 0 < epsilon < 1 - sqrt(N(L,M)).
bool transversality_stability_check(const ComplexLine& l, const ComplexLine& m, double epsilon,
                                    std::uint64_t samples, std::uint64_t seed);

} // namespace cxhyp
