#pragma once

#include <array>

#include "cxhyp/hvector.hpp"
#include "cxhyp/line.hpp"
#include "cxhyp/moebius.hpp"

namespace cxhyp {

struct Matrix3 {
  // Row-major.
  std::array<std::array<Complex, 3>, 3> m{};

  static Matrix3 identity();
  Matrix3 adjoint() const; // conjugate transpose
  Complex det() const;
  double frobenius_sq() const;
};

Matrix3 operator*(const Matrix3& a, const Matrix3& b);
HVector operator*(const Matrix3& a, const HVector& v);

// ||m* J m - J||_F, the J-unitarity residual.
double j_unitarity_residual(const Matrix3& m);

// Holomorphic isometry as an SU(2,1) representative: J-unitary, det 1.
class Isometry {
 public:
  Isometry() : m_(Matrix3::identity()) {}

  // Validates J-unitarity and det within tol::alg (relative to matrix scale).
  static Isometry from_matrix(const Matrix3& m);

  const Matrix3& matrix() const { return m_; }
  Isometry inverse() const; // J m* J, exact up to rounding

  friend Isometry operator*(const Isometry& a, const Isometry& b);

 private:
  struct Unchecked {};
  Isometry(const Matrix3& m, Unchecked) : m_(m) {}
  Matrix3 m_;

  friend Isometry compose_unchecked(const Matrix3& m);
};

BallPoint apply_point(const Isometry& g, const BallPoint& p);
BoundaryPoint apply_boundary(const Isometry& g, const BoundaryPoint& p);
ComplexLine apply_line(const Isometry& g, const ComplexLine& l);

// Equality in PU(2,1): representatives agree after normalizing the phase of
// the largest-magnitude entry.
bool projectively_equal(const Isometry& a, const Isometry& b, double tolerance);
bool is_projective_identity(const Isometry& a, double tolerance);

// Loxodromic stabilizer of L1 = {(0,w)} with axis through the origin, mapping
// (0,0) to (0,w) and rotating by psi about L1. w = 0 degenerates to the pure
// rotation about L1.
Isometry normalized_loxodromic(const Complex& w, double psi);

// f_x in Stab({(z,0)}): maps the origin to (x,0), translation length 2 artanh x.
Isometry axis_translation(double x);

// (z1, z2) -> (e^{i phi} z1, z2): rotation about the line {(0,w)}, fixing it pointwise.
Isometry rotation_about_line(double phi);

// (z1, z2) -> (z1, e^{i phi} z2): rotation of {(0,w)} about its center, trivial holonomy.
Isometry rotation_in_line(double phi);

// Embeds a disc isometry acting on {(0,w)} via the (v2, v3) block.
Isometry embed_in_line(const DiscIsometry& d);
// Embeds a disc isometry acting on {(z,0)} via the (v1, v3) block.
Isometry embed_in_perp(const DiscIsometry& d);

// Carries L to {(0,w)} with the projection of the origin landing at (0,0).
Isometry normalize_line(const ComplexLine& l);

// Oriented rotation angle about L carried by a stabilizing g, in (-pi, pi].
// Throws NotStabilizing when g does not stabilize L or is parabolic-like.
double holonomy_of(const Isometry& g, const ComplexLine& l);

// For gamma in Stab(L1) and the pair (L1, L2) in normal form, the normalized
// loxodromic g with g(0) = gamma(0) and hol(g) = hol(gamma).
Isometry reduce_stabilizer_element(const Isometry& gamma, const ComplexLine& l1,
                                   const ComplexLine& l2);

} // namespace cxhyp
