#include "cxhyp/hvector.hpp"

#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/tolerances.hpp"

namespace cxhyp {

Complex hermitian_form(const HVector& p, const HVector& q) {
  return p.v1 * std::conj(q.v1) + p.v2 * std::conj(q.v2) - p.v3 * std::conj(q.v3);
}

double euclidean_norm_sq(const HVector& v) {
  return std::norm(v.v1) + std::norm(v.v2) + std::norm(v.v3);
}

HVector standard_lift(const BallPoint& p) { return {p.z1, p.z2, {1.0, 0.0}}; }
HVector standard_lift(const BoundaryPoint& p) { return {p.z1, p.z2, {1.0, 0.0}}; }

std::variant<BallPoint, BoundaryPoint> projectivize(const HVector& v) {
  const double scale = euclidean_norm_sq(v);
  if (std::norm(v.v3) <= tol::null * tol::null * scale)
    throw PolarAtInfinity("projectivize: chart coordinate v3 vanishes");
  const double q = hermitian_form(v, v).real();
  if (q > tol::null * scale)
    throw PositiveVector("projectivize: positive vector has no point in the closed ball");
  const Complex z1 = v.v1 / v.v3;
  const Complex z2 = v.v2 / v.v3;
  if (q < -tol::null * scale) return BallPoint{z1, z2};
  return BoundaryPoint{z1, z2};
}

BallPoint projectivize_ball(const HVector& v) {
  auto pt = projectivize(v);
  if (std::holds_alternative<BoundaryPoint>(pt))
    throw PositiveVector("projectivize_ball: null vector maps to the boundary sphere");
  return std::get<BallPoint>(pt);
}

BoundaryPoint projectivize_boundary(const HVector& v) {
  auto pt = projectivize(v);
  if (std::holds_alternative<BallPoint>(pt))
    throw PositiveVector("projectivize_boundary: negative vector maps inside the ball");
  return std::get<BoundaryPoint>(pt);
}

HVector polar_of_span(const HVector& p, const HVector& q) {
  const HVector n{std::conj(p.v2 * q.v3 - p.v3 * q.v2),
                  std::conj(p.v3 * q.v1 - p.v1 * q.v3),
                  std::conj(p.v2 * q.v1 - p.v1 * q.v2)};
  const double scale = euclidean_norm_sq(p) * euclidean_norm_sq(q);
  if (euclidean_norm_sq(n) <= tol::alg * tol::alg * scale)
    throw DegenerateSpan("polar_of_span: arguments are parallel");
  return n;
}

bool projectively_equal(const HVector& a, const HVector& b, double tolerance) {
  const double na = std::sqrt(euclidean_norm_sq(a));
  const double nb = std::sqrt(euclidean_norm_sq(b));
  if (na == 0.0 || nb == 0.0) return false;
  // Align the phase on the largest-magnitude coordinate of a.
  const HVector ua = (1.0 / na) * a;
  const HVector ub = (1.0 / nb) * b;
  const Complex* ca[3] = {&ua.v1, &ua.v2, &ua.v3};
  const Complex* cb[3] = {&ub.v1, &ub.v2, &ub.v3};
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::norm(*ca[i]) > std::norm(*ca[k])) k = i;
  if (std::norm(*cb[k]) == 0.0) return false;
  const Complex phase = (*ca[k] / *cb[k]);
  const double mag = std::abs(phase);
  if (mag == 0.0) return false;
  const Complex unit_phase = phase / mag;
  double err = 0.0;
  for (int i = 0; i < 3; ++i) err += std::norm(*ca[i] - unit_phase * *cb[i]);
  return std::sqrt(err) <= tolerance;
}

bool is_in_ball(const BallPoint& p) { return std::norm(p.z1) + std::norm(p.z2) < 1.0; }

bool is_on_boundary(const BoundaryPoint& p) {
  return std::abs(std::norm(p.z1) + std::norm(p.z2) - 1.0) <= tol::unit;
}

} // namespace cxhyp
