#include "cxhyp/isometry.hpp"

#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/tolerances.hpp"

namespace cxhyp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

const Matrix3& form_matrix() {
  static const Matrix3 j = [] {
    Matrix3 m = Matrix3::identity();
    m.m[2][2] = {-1.0, 0.0};
    return m;
  }();
  return j;
}

Matrix3 scale(const Matrix3& a, const Complex& s) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}

Matrix3 subtract(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

// Rescale to determinant one; J-unitary input has |det| = 1.
Matrix3 su_normalize(const Matrix3& m) {
  const Complex d = m.det();
  return scale(m, std::exp(-std::log(d) / 3.0));
}

// One Newton step toward the J-unitary manifold: m <- (3m - m J m* J m) / 2.
Matrix3 reunitarize(const Matrix3& m) {
  const Matrix3& j = form_matrix();
  const Matrix3 corr = m * j * m.adjoint() * j * m;
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = 0.5 * (3.0 * m.m[i][k] - corr.m[i][k]);
  return su_normalize(r);
}

double angle_principal(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

} // namespace

Matrix3 Matrix3::identity() {
  Matrix3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = {1.0, 0.0};
  return r;
}

Matrix3 Matrix3::adjoint() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = std::conj(m[j][i]);
  return r;
}

Complex Matrix3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double Matrix3::frobenius_sq() const {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += std::norm(m[i][j]);
  return s;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
  return r;
}

HVector operator*(const Matrix3& a, const HVector& v) {
  return {a.m[0][0] * v.v1 + a.m[0][1] * v.v2 + a.m[0][2] * v.v3,
          a.m[1][0] * v.v1 + a.m[1][1] * v.v2 + a.m[1][2] * v.v3,
          a.m[2][0] * v.v1 + a.m[2][1] * v.v2 + a.m[2][2] * v.v3};
}

double j_unitarity_residual(const Matrix3& m) {
  const Matrix3& j = form_matrix();
  return std::sqrt(subtract(m.adjoint() * j * m, j).frobenius_sq());
}

Isometry Isometry::from_matrix(const Matrix3& m) {
  const double s = std::max(1.0, m.frobenius_sq());
  if (j_unitarity_residual(m) > 1e3 * tol::alg * s)
    throw ParameterOutOfRange("Isometry: matrix is not J-unitary");
  if (std::abs(m.det() - Complex{1.0, 0.0}) > 1e3 * tol::alg * s)
    throw ParameterOutOfRange("Isometry: determinant is not 1");
  return Isometry(m, Unchecked{});
}

Isometry Isometry::inverse() const {
  const Matrix3& j = form_matrix();
  return Isometry(j * m_.adjoint() * j, Unchecked{});
}

Isometry compose_unchecked(const Matrix3& m) { return Isometry(m, Isometry::Unchecked{}); }

Isometry operator*(const Isometry& a, const Isometry& b) {
  Matrix3 m = a.matrix() * b.matrix();
  // Long generator words drift off the group; re-project when the residual grows.
  if (j_unitarity_residual(m) > tol::reunit * std::max(1.0, m.frobenius_sq()))
    m = reunitarize(m);
  return compose_unchecked(m);
}

BallPoint apply_point(const Isometry& g, const BallPoint& p) {
  return projectivize_ball(g.matrix() * standard_lift(p));
}

BoundaryPoint apply_boundary(const Isometry& g, const BoundaryPoint& p) {
  return projectivize_boundary(g.matrix() * standard_lift(p));
}

ComplexLine apply_line(const Isometry& g, const ComplexLine& l) {
  return ComplexLine::from_polar(g.matrix() * l.polar());
}

bool projectively_equal(const Isometry& a, const Isometry& b, double tolerance) {
  const Matrix3& ma = a.matrix();
  const Matrix3& mb = b.matrix();
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::norm(ma.m[i][j]) > best) best = std::norm(ma.m[i][j]), bi = i, bj = j;
  if (std::norm(mb.m[bi][bj]) == 0.0) return false;
  Complex phase = ma.m[bi][bj] / mb.m[bi][bj];
  const double mag = std::abs(phase);
  if (mag == 0.0) return false;
  phase /= mag;
  double err = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) err += std::norm(ma.m[i][j] - phase * mb.m[i][j]);
  return std::sqrt(err) <= tolerance * std::max(1.0, std::sqrt(ma.frobenius_sq()));
}

bool is_projective_identity(const Isometry& a, double tolerance) {
  return projectively_equal(a, Isometry(), tolerance);
}

Isometry normalized_loxodromic(const Complex& w, double psi) {
  const double r = std::abs(w);
  if (r >= 1.0) throw OutOfBall("normalized_loxodromic: |w| must be < 1");
  const double inv = 1.0 / std::sqrt(1.0 - r * r);
  const Complex head = std::polar(1.0, 2.0 * psi / 3.0);
  const Complex tail = std::polar(inv, -psi / 3.0);
  Matrix3 m;
  m.m[0][0] = head;
  m.m[1][1] = tail;
  m.m[1][2] = w * tail;
  m.m[2][1] = std::conj(w) * tail;
  m.m[2][2] = tail;
  return Isometry::from_matrix(m);
}

Isometry axis_translation(double x) {
  if (!(x > 0.0 && x < 1.0))
    throw ParameterOutOfRange("axis_translation: x must lie in (0,1)");
  return embed_in_perp(DiscIsometry::translate_to({x, 0.0}));
}

Isometry rotation_about_line(double phi) {
  Matrix3 m;
  m.m[0][0] = std::polar(1.0, 2.0 * phi / 3.0);
  m.m[1][1] = std::polar(1.0, -phi / 3.0);
  m.m[2][2] = std::polar(1.0, -phi / 3.0);
  return Isometry::from_matrix(m);
}

Isometry rotation_in_line(double phi) {
  Matrix3 m;
  m.m[0][0] = std::polar(1.0, -phi / 3.0);
  m.m[1][1] = std::polar(1.0, 2.0 * phi / 3.0);
  m.m[2][2] = std::polar(1.0, -phi / 3.0);
  return Isometry::from_matrix(m);
}

Isometry embed_in_line(const DiscIsometry& d0) {
  const DiscIsometry d = d0.normalized();
  Matrix3 m;
  m.m[0][0] = {1.0, 0.0};
  m.m[1][1] = d.a;
  m.m[1][2] = d.b;
  m.m[2][1] = std::conj(d.b);
  m.m[2][2] = std::conj(d.a);
  return Isometry::from_matrix(m);
}

Isometry embed_in_perp(const DiscIsometry& d0) {
  const DiscIsometry d = d0.normalized();
  Matrix3 m;
  m.m[1][1] = {1.0, 0.0};
  m.m[0][0] = d.a;
  m.m[0][2] = d.b;
  m.m[2][0] = std::conj(d.b);
  m.m[2][2] = std::conj(d.a);
  return Isometry::from_matrix(m);
}

Isometry normalize_line(const ComplexLine& l) {
  const LineFrame f = line_frame(l); // center (form -1), tangent (form +1)
  // Columns (polar, tangent, center) form a J-orthonormal basis; small
  // Gram-Schmidt corrections absorb rounding before inverting.
  HVector u1 = l.polar();
  HVector u2 = f.tangent - hermitian_form(f.tangent, u1) * u1;
  u2 = (1.0 / std::sqrt(hermitian_form(u2, u2).real())) * u2;
  HVector u3 = f.center - hermitian_form(f.center, u1) * u1 - hermitian_form(f.center, u2) * u2;
  const double q3 = hermitian_form(u3, u3).real();
  if (!(q3 < -tol::pivot)) throw ParameterOutOfRange("normalize_line: degenerate frame");
  u3 = (1.0 / std::sqrt(-q3)) * u3;
  Matrix3 u;
  const HVector* cols[3] = {&u1, &u2, &u3};
  for (int j = 0; j < 3; ++j) {
    u.m[0][j] = cols[j]->v1;
    u.m[1][j] = cols[j]->v2;
    u.m[2][j] = cols[j]->v3;
  }
  const Matrix3& jm = form_matrix();
  return Isometry::from_matrix(su_normalize(jm * u.adjoint() * jm));
}

double holonomy_of(const Isometry& g, const ComplexLine& l) {
  if (!projectively_equal(apply_line(g, l).polar(), l.polar(), 1e3 * tol::alg))
    throw NotStabilizing("holonomy_of: g does not stabilize L");
  const Isometry mover = normalize_line(l);
  const Matrix3 h = (mover * g * mover.inverse()).matrix();
  const double s = std::sqrt(h.frobenius_sq());
  const double off = std::sqrt(std::norm(h.m[0][1]) + std::norm(h.m[0][2]) +
                               std::norm(h.m[1][0]) + std::norm(h.m[2][0]));
  if (off > 1e-6 * s) throw NotStabilizing("holonomy_of: conjugated matrix is not block diagonal");

  const Complex u = h.m[0][0];
  const Complex b11 = h.m[1][1], b12 = h.m[1][2], b21 = h.m[2][1], b22 = h.m[2][2];
  const double bs = std::sqrt(std::norm(b11) + std::norm(b12) + std::norm(b21) + std::norm(b22));

  // Scalar block: pure rotation about L.
  if (std::abs(b21) <= 1e-12 * bs && std::abs(b12) <= 1e-12 * bs &&
      std::abs(b11 - b22) <= 1e-12 * bs) {
    return angle_principal(std::arg(u / b11));
  }

  // Fixed points of the restricted Moebius map: b21 w^2 + (b22 - b11) w - b12 = 0.
  // The multiplier at a fixed point w is b21 w + b22, an eigenvalue of the block.
  const Complex qa = b21, qb = b22 - b11, qc = -b12;
  const Complex disc = qb * qb - 4.0 * qa * qc;
  if (std::abs(disc) <= 1e-16 * bs * bs)
    throw NotStabilizing("holonomy_of: parabolic-like stabilizer element");

  const Complex sq = std::sqrt(disc);
  double angles[2];
  int found = 0;
  if (std::abs(qa) <= 1e-14 * bs) {
    // One fixed point at infinity (multiplier b11); the finite one at -qc/qb.
    if (std::abs(qb) > 0.0) {
      const Complex w = -qc / qb;
      if (std::abs(w) <= 1.0 + 1e-6) angles[found++] = std::arg(u / (b21 * w + b22));
    }
  } else {
    for (int sgn = -1; sgn <= 1; sgn += 2) {
      const Complex w = (-qb + double(sgn) * sq) / (2.0 * qa);
      if (std::abs(w) <= 1.0 + 1e-6) angles[found++] = std::arg(u / (b21 * w + b22));
    }
  }
  if (found == 0) throw NotStabilizing("holonomy_of: no fixed direction in the closed disc");
  if (found == 2) {
    const double d = angle_principal(angles[1] - angles[0]);
    if (std::abs(d) > 1e-7)
      throw NotStabilizing("holonomy_of: inconsistent multipliers (parabolic-like)");
    return angle_principal(angles[0] + 0.5 * d);
  }
  return angle_principal(angles[0]);
}

Isometry reduce_stabilizer_element(const Isometry& gamma, const ComplexLine& l1,
                                   const ComplexLine& l2) {
  const HVector e1{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  if (!projectively_equal(l1.polar(), e1, 1e3 * tol::alg))
    throw ParameterOutOfRange("reduce_stabilizer_element: pair is not in normal form");
  const auto cls = classify_pair(l1, l2);
  if (cls.kind != LinePairClass::Kind::Ultraparallel)
    throw NotUltraparallel("reduce_stabilizer_element: lines are not ultraparallel");
  if (!projectively_equal(apply_line(gamma, l1).polar(), l1.polar(), 1e3 * tol::alg))
    throw NotStabilizing("reduce_stabilizer_element: gamma does not stabilize L1");
  const BallPoint image = apply_point(gamma, BallPoint{});
  if (std::abs(image.z1) > 1e-7)
    throw NotStabilizing("reduce_stabilizer_element: gamma moves the origin off L1");
  // The factor left over after removing the normalized loxodromic must act as
  // the identity on the perpendicular line {(z,0)}, which pins the angle to
  // the normal-fiber rotation over the foot: arg(m00 / m22).
  const Matrix3& m = gamma.matrix();
  const double s = std::sqrt(m.frobenius_sq());
  if (std::abs(m.m[0][1]) + std::abs(m.m[0][2]) + std::abs(m.m[1][0]) + std::abs(m.m[2][0]) >
      1e-6 * s)
    throw NotStabilizing("reduce_stabilizer_element: gamma is not block diagonal");
  const double psi = std::arg(m.m[0][0] / m.m[2][2]);
  return normalized_loxodromic(image.z2, psi);
}

} // namespace cxhyp
