#include "cxhyp/line.hpp"

#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/tolerances.hpp"

namespace cxhyp {

ComplexLine ComplexLine::from_polar(const HVector& n) {
  const double q = hermitian_form(n, n).real();
  if (q <= tol::null * euclidean_norm_sq(n))
    throw PositiveVector("ComplexLine: polar vector is not positive");
  return ComplexLine((1.0 / std::sqrt(q)) * n);
}

ComplexLine ComplexLine::through(const BallPoint& p, const BallPoint& q) {
  return from_polar(polar_of_span(standard_lift(p), standard_lift(q)));
}

double bergman_distance(const BallPoint& p, const BallPoint& q) {
  // N - 1 = (|p-q|^2 - |p1 q2 - p2 q1|^2) / ((1-|p|^2)(1-|q|^2)), by the
  // Lagrange identity applied to the standard lifts.
  const Complex d1 = p.z1 - q.z1;
  const Complex d2 = p.z2 - q.z2;
  const double diff_sq = std::norm(d1) + std::norm(d2);
  const double cross_sq = std::norm(p.z1 * q.z2 - p.z2 * q.z1);
  double num = diff_sq - cross_sq;
  if (num < 0.0) num = 0.0; // roundoff guard; exact value is nonnegative
  const double dp = 1.0 - std::norm(p.z1) - std::norm(p.z2);
  const double dq = 1.0 - std::norm(q.z1) - std::norm(q.z2);
  return 2.0 * std::asinh(std::sqrt(num / (dp * dq)));
}

double n_invariant(const ComplexLine& l, const ComplexLine& m) {
  return std::norm(hermitian_form(l.polar(), m.polar()));
}

LinePairClass classify_pair(const ComplexLine& l, const ComplexLine& m) {
  const double n = n_invariant(l, m);
  if (n > 1.0 + tol::cls) {
    // 2 arccosh(sqrt(N)) = 2 asinh(sqrt(N-1)).
    return {LinePairClass::Kind::Ultraparallel, 2.0 * std::asinh(std::sqrt(n - 1.0))};
  }
  if (n < 1.0 - tol::cls) {
    return {LinePairClass::Kind::Intersecting, std::acos(std::sqrt(n))};
  }
  return {LinePairClass::Kind::AsymptoticOrEqual, 0.0};
}

double line_distance(const ComplexLine& l, const ComplexLine& m) {
  const auto cls = classify_pair(l, m);
  if (cls.kind != LinePairClass::Kind::Ultraparallel)
    throw NotUltraparallel("line_distance: lines are not ultraparallel");
  return cls.value;
}

BallPoint orthogonal_projection(const ComplexLine& l, const BallPoint& p) {
  return project_lift(l, standard_lift(p));
}

BallPoint project_lift(const ComplexLine& l, const HVector& lift) {
  const HVector& n = l.polar(); // unit: <n,n> = 1
  const Complex coeff = hermitian_form(lift, n);
  return projectivize_ball(lift - coeff * n);
}

double s_function(double d) {
  if (!(d > 0.0)) throw NonPositiveDistance("s_function: requires d > 0");
  return 2.0 * std::asinh(1.0 / std::sinh(0.5 * d));
}

double projection_radius_disjoint(const ComplexLine& l1, const ComplexLine& l2) {
  return s_function(line_distance(l1, l2));
}

double projection_radius_intersecting(double theta) {
  if (!(theta > 0.0) || theta > 1.5707963267948966 + 1e-15)
    throw AngleOutOfRange("projection_radius_intersecting: theta must lie in (0, pi/2]");
  const double c = std::abs(std::cos(theta));
  return std::log1p(2.0 * c / (1.0 - c));
}

ComplexLine common_perpendicular(const ComplexLine& l1, const ComplexLine& l2) {
  const auto cls = classify_pair(l1, l2);
  if (cls.kind != LinePairClass::Kind::Ultraparallel)
    throw NotUltraparallel("common_perpendicular: lines are not ultraparallel");
  // The perpendicular line's polar is J-orthogonal to both polars.
  return ComplexLine::from_polar(polar_of_span(l1.polar(), l2.polar()));
}

BallPoint line_intersection_point(const ComplexLine& l, const ComplexLine& m) {
  // The point lift is J-orthogonal to both polar vectors.
  return projectivize_ball(polar_of_span(l.polar(), m.polar()));
}

LineFrame line_frame(const ComplexLine& l) {
  // Project the origin onto the line for the base point.
  const HVector origin{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
  const Complex coeff = hermitian_form(origin, l.polar());
  HVector c = origin - coeff * l.polar();
  const double qc = hermitian_form(c, c).real();
  c = (1.0 / std::sqrt(-qc)) * c;
  HVector t = polar_of_span(l.polar(), c);
  const double qt = hermitian_form(t, t).real();
  t = (1.0 / std::sqrt(qt)) * t;
  return {c, t};
}

BallPoint line_point(const LineFrame& f, const Complex& zeta) {
  return projectivize_ball(f.center + zeta * f.tangent);
}

BoundaryPoint line_boundary_point(const LineFrame& f, const Complex& unit_zeta) {
  return projectivize_boundary(f.center + unit_zeta * f.tangent);
}

} // namespace cxhyp
