#pragma once

#include "cxhyp/hvector.hpp"

namespace cxhyp {

// Complex line of the ball, stored through a unit positive polar vector
// (<polar, polar> = 1).
class ComplexLine {
 public:
  // Normalizes the given positive vector; throws PositiveVector if <n,n> <= 0.
  static ComplexLine from_polar(const HVector& n);

  // Line through two distinct points (lifts must span a hyperbolic 2-plane).
  static ComplexLine through(const BallPoint& p, const BallPoint& q);

  const HVector& polar() const { return polar_; }

 private:
  explicit ComplexLine(const HVector& unit_polar) : polar_(unit_polar) {}
  HVector polar_;
};

// Bergman distance, cosh^2(rho/2) = <p,q><q,p> / (<p,p><q,q>). Computed as
// 2 asinh(sqrt(N-1)) with a cancellation-free N-1, so nearby points lose no
// precision and rho(p,q) is bitwise symmetric in its arguments.
double bergman_distance(const BallPoint& p, const BallPoint& q);

// N(L,M) = <n,m><m,n> for unit polar vectors.
double n_invariant(const ComplexLine& l, const ComplexLine& m);

struct LinePairClass {
  enum class Kind { Ultraparallel, AsymptoticOrEqual, Intersecting };
  Kind kind;
  // Ultraparallel: distance 2 arccosh(sqrt(N)). Intersecting: angle arccos(sqrt(N)).
  double value = 0.0;
};

// Trichotomy on N with the tol::cls band mapped to AsymptoticOrEqual.
LinePairClass classify_pair(const ComplexLine& l, const ComplexLine& m);

// Distance between ultraparallel lines; throws NotUltraparallel otherwise.
double line_distance(const ComplexLine& l, const ComplexLine& m);

// Nearest-point projection P(p^ - (<p^,n>/<n,n>) n).
BallPoint orthogonal_projection(const ComplexLine& l, const BallPoint& p);

// Projection of an arbitrary lift (interior or ideal, as long as the image is
// an interior point). Lets closure points of one line project into another.
BallPoint project_lift(const ComplexLine& l, const HVector& lift);

// Radius of the projected disc for disjoint lines at distance d:
// s(d) = 2 arcsinh(1/sinh(d/2)) = 2 log coth(d/4). Strictly decreasing
// involution on (0, inf). Throws NonPositiveDistance for d <= 0.
double s_function(double d);

// s(rho(L1,L2)); requires an ultraparallel pair.
double projection_radius_disjoint(const ComplexLine& l1, const ComplexLine& l2);

// log((1+|cos theta|)/(1-|cos theta|)) for lines meeting at angle theta in (0, pi/2].
double projection_radius_intersecting(double theta);

// Complex line containing the common perpendicular of an ultraparallel pair.
ComplexLine common_perpendicular(const ComplexLine& l1, const ComplexLine& l2);

// Intersection point of two intersecting lines.
BallPoint line_intersection_point(const ComplexLine& l, const ComplexLine& m);

// J-orthonormal frame adapted to a line: `center` is a point lift with
// <c,c> = -1, `tangent` an in-plane vector with <t,t> = 1. Points of the line
// are P(center + zeta * tangent) for |zeta| < 1, and zeta is an isometric
// Poincare coordinate of the induced curvature -1 metric.
struct LineFrame {
  HVector center;
  HVector tangent;
};

LineFrame line_frame(const ComplexLine& l);
BallPoint line_point(const LineFrame& f, const Complex& zeta);
BoundaryPoint line_boundary_point(const LineFrame& f, const Complex& unit_zeta);

} // namespace cxhyp
