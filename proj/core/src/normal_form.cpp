#include "cxhyp/normal_form.hpp"

#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/rng.hpp"
#include "cxhyp/tolerances.hpp"

namespace cxhyp {

NormalizedPair normalize_pair(const ComplexLine& l1, const ComplexLine& l2) {
  const auto cls = classify_pair(l1, l2);
  if (cls.kind != LinePairClass::Kind::Ultraparallel)
    throw NotUltraparallel("normalize_pair: lines are not ultraparallel");
  const double x = std::tanh(0.5 * cls.value);

  const ComplexLine perp = common_perpendicular(l1, l2);

  // J-orthonormal frame (L1 polar | perp polar | foot on L1), Gram-Schmidt
  // under the indefinite form. Phases are pinned (foot lift with real positive
  // chart coordinate) so an already-normalized pair gets the identity mover.
  HVector u1 = l1.polar();
  HVector mhat = perp.polar() - hermitian_form(perp.polar(), u1) * u1;
  const double q2 = hermitian_form(mhat, mhat).real();
  if (!(q2 > tol::pivot)) throw ParameterOutOfRange("normalize_pair: degenerate frame");
  mhat = (1.0 / std::sqrt(q2)) * mhat;
  HVector u3 = polar_of_span(u1, mhat); // negative direction: the foot's lift
  double q3 = hermitian_form(u3, u3).real();
  if (!(q3 < -tol::pivot)) throw ParameterOutOfRange("normalize_pair: degenerate foot");
  u3 = (1.0 / std::sqrt(-q3)) * u3;
  if (std::abs(u3.v3) > tol::pivot) u3 = (std::abs(u3.v3) / u3.v3) * u3;
  HVector u2 = polar_of_span(u3, u1);
  u2 = (1.0 / std::sqrt(hermitian_form(u2, u2).real())) * u2;

  Matrix3 u;
  const HVector* cols[3] = {&u1, &u2, &u3};
  for (int j = 0; j < 3; ++j) {
    u.m[0][j] = cols[j]->v1;
    u.m[1][j] = cols[j]->v2;
    u.m[2][j] = cols[j]->v3;
  }
  Matrix3 jm = Matrix3::identity();
  jm.m[2][2] = {-1.0, 0.0};
  Matrix3 inv = jm * u.adjoint() * jm;
  // det of a J-unitary matrix is a unit scalar; bring it to 1.
  inv = [&] {
    const Complex d = inv.det();
    const Complex f = std::exp(-std::log(d) / 3.0);
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = f * inv.m[i][j];
    return r;
  }();
  const Isometry pre = Isometry::from_matrix(inv);

  // The foot of L2 on the perpendicular now sits at (x e^{i alpha}, 0);
  // rotate the first coordinate to land it on the positive real axis.
  const BallPoint foot2 = line_intersection_point(l2, perp);
  const BallPoint moved = apply_point(pre, foot2);
  const double alpha = std::arg(moved.z1);
  const Isometry mover = rotation_about_line(-alpha) * pre;
  return {mover, x};
}

bool transversality_stability_check(const ComplexLine& l, const ComplexLine& m, double epsilon,
                                    std::uint64_t samples, std::uint64_t seed) {
  const auto cls = classify_pair(l, m);
  if (cls.kind != LinePairClass::Kind::Intersecting)
    throw NotTransversal("transversality_stability_check: lines do not intersect transversally");
  const double bound = 1.0 - std::sqrt(n_invariant(l, m));
  if (!(epsilon > 0.0) || epsilon >= bound)
    throw ParameterOutOfRange(
        "transversality_stability_check: epsilon must lie in (0, 1 - sqrt(N))");

  // Work in the chart where L is {(0,w)} with unit polar (1,0,0); the
  // perturbation bound is stated in these coordinates.
  const Isometry mover = normalize_line(l);
  const ComplexLine l_std = apply_line(mover, l);
  const HVector mh = apply_line(mover, m).polar();

  RngStream rng(seed, 0x7141);
  std::uint64_t accepted = 0;
  while (accepted < samples) {
    HVector q{mh.v1 + Complex{rng.gaussian(), rng.gaussian()},
              mh.v2 + Complex{rng.gaussian(), rng.gaussian()},
              mh.v3 + Complex{rng.gaussian(), rng.gaussian()}};
    // Pull the Gaussian offset into the epsilon ball.
    const HVector diff = q - mh;
    const double dn = std::sqrt(euclidean_norm_sq(diff));
    if (dn == 0.0) continue;
    const double want = epsilon * std::pow(rng.next_double(), 1.0 / 6.0);
    q = mh + (want / dn) * diff;
    const double qq = hermitian_form(q, q).real();
    if (qq <= tol::null) continue; // not a polar vector of a line
    HVector qu = (1.0 / std::sqrt(qq)) * q;
    if (std::sqrt(euclidean_norm_sq(qu - mh)) >= epsilon) continue; // unit rep left the ball
    ++accepted;
    const ComplexLine probe = ComplexLine::from_polar(qu);
    if (!(n_invariant(probe, l_std) < 1.0)) return false;
  }
  return true;
}

} // namespace cxhyp
