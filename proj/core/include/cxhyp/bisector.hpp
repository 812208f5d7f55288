#pragma once

#include "cxhyp/isometry.hpp"

namespace cxhyp {

// Bisector-style wall: the union of fibers of the carrier line's nearest-point
// projection over a geodesic spine inside the carrier. The spine is given by
// its two (ordered) ideal endpoints, which orient the wall's two sides.
class Bisector {
 public:
  // Validates that both endpoints are null directions of the carrier's plane.
  static Bisector from_spine(const ComplexLine& carrier, const BoundaryPoint& a,
                             const BoundaryPoint& b);

  const ComplexLine& carrier() const { return carrier_; }
  const BoundaryPoint& spine_start() const { return a_; }
  const BoundaryPoint& spine_end() const { return b_; }

  Bisector reversed() const; // swaps the spine orientation

 private:
  Bisector(const ComplexLine& c, const BoundaryPoint& a, const BoundaryPoint& b)
      : carrier_(c), a_(a), b_(b) {}
  ComplexLine carrier_;
  BoundaryPoint a_, b_;
};

struct BisectorSide {
  bool on;                // within tol::geo of the wall
  int side;               // -1, 0, +1
  double signed_distance; // signed distance of the carrier projection to the spine
};

// Projects p into the carrier and classifies it against the spine.
BisectorSide bisector_membership(const Bisector& b, const BallPoint& p);

// Distance from the spine to a complex line, minimized along the spine.
double spine_distance_to_line(const Bisector& b, const ComplexLine& l);

// s(rho(spine, L)); requires the carrier to meet L transversally in one point
// and the spine to stay at positive distance from L.
double bisector_projection_radius(const Bisector& b, const ComplexLine& l);

// Point of the spine at signed arclength tau from its closest approach to the
// carrier-coordinate origin.
BallPoint spine_point(const Bisector& b, double tau);

// Fiber of the carrier projection over a point q of the carrier: the complex
// line through q orthogonal to the carrier.
ComplexLine carrier_fiber(const ComplexLine& carrier, const BallPoint& q);

Bisector apply_bisector(const Isometry& g, const Bisector& b);

} // namespace cxhyp
