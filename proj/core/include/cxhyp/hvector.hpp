#pragma once

#include <complex>
#include <variant>

namespace cxhyp {

using Complex = std::complex<double>;

// Point of the ball model, |z1|^2 + |z2|^2 < 1.
struct BallPoint {
  Complex z1{0.0, 0.0};
  Complex z2{0.0, 0.0};
};

// Point of the sphere at infinity, |z1|^2 + |z2|^2 = 1.
struct BoundaryPoint {
  Complex z1{0.0, 0.0};
  Complex z2{0.0, 0.0};
};

// Homogeneous vector in C^{2,1}. Never the zero vector.
struct HVector {
  Complex v1{0.0, 0.0};
  Complex v2{0.0, 0.0};
  Complex v3{0.0, 0.0};
};

inline HVector operator+(const HVector& a, const HVector& b) {
  return {a.v1 + b.v1, a.v2 + b.v2, a.v3 + b.v3};
}
inline HVector operator-(const HVector& a, const HVector& b) {
  return {a.v1 - b.v1, a.v2 - b.v2, a.v3 - b.v3};
}
inline HVector operator*(const Complex& s, const HVector& v) {
  return {s * v.v1, s * v.v2, s * v.v3};
}
inline HVector operator*(double s, const HVector& v) {
  return {s * v.v1, s * v.v2, s * v.v3};
}

// Signature (2,1) pairing <p,q> = q* J p = p1 conj(q1) + p2 conj(q2) - p3 conj(q3).
Complex hermitian_form(const HVector& p, const HVector& q);

// Euclidean norm squared of the coordinate vector; scale reference for tolerances.
double euclidean_norm_sq(const HVector& v);

// (p1, p2) -> (p1, p2, 1).
HVector standard_lift(const BallPoint& p);
HVector standard_lift(const BoundaryPoint& p);

// Projection to the affine chart v3 != 0. Negative vectors map to BallPoint,
// null vectors to BoundaryPoint. Throws PolarAtInfinity when v3 = 0 and
// PositiveVector when <v,v> is positive beyond the null band.
std::variant<BallPoint, BoundaryPoint> projectivize(const HVector& v);

// projectivize restricted to negative vectors; throws on the boundary branch.
BallPoint projectivize_ball(const HVector& v);
BoundaryPoint projectivize_boundary(const HVector& v);

// Hermitian cross product: J-orthogonal to both arguments. Throws
// DegenerateSpan when p and q are parallel.
HVector polar_of_span(const HVector& p, const HVector& q);

// Equality up to a complex scalar factor (after unit-scale normalization).
bool projectively_equal(const HVector& a, const HVector& b, double tolerance);

bool is_in_ball(const BallPoint& p);
bool is_on_boundary(const BoundaryPoint& p);

} // namespace cxhyp
