#include <doctest.h>

#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/line.hpp"
#include "cxhyp/normal_form.hpp"
#include "cxhyp/sampling.hpp"
#include "cxhyp/verify.hpp"

using namespace cxhyp;

namespace {
const ComplexLine kL1 = ComplexLine::from_polar({{1, 0}, {0, 0}, {0, 0}}); // {(0,w)}
const ComplexLine kM = ComplexLine::from_polar({{0, 0}, {1, 0}, {0, 0}});  // {(z,0)}

ComplexLine normalized_partner(double x) {
  return ComplexLine::from_polar({{1.0 / x, 0}, {0, 0}, {1, 0}});
}
} // namespace

TEST_SUITE_BEGIN("lines");

TEST_CASE("bergman distance closed values") {
  CHECK(bergman_distance({{0, 0}, {0, 0}}, {{0.5, 0}, {0, 0}}) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(bergman_distance({{0, 0}, {0, 0}}, {{0, 0}, {0.8, 0}}) ==
        doctest::Approx(std::log(9.0)).epsilon(1e-15));
  const BallPoint p{{0.3, 0.2}, {-0.1, 0.4}};
  CHECK(bergman_distance(p, p) == 0.0);
}

TEST_CASE("n invariant of standard pairs") {
  CHECK(n_invariant(kL1, kM) == 0.0);
  CHECK(n_invariant(kL1, kL1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(n_invariant(kL1, normalized_partner(0.6)) == doctest::Approx(1.5625).epsilon(1e-14));
}

TEST_CASE("pair classification trichotomy") {
  const auto ultra = classify_pair(kL1, normalized_partner(0.6));
  CHECK(ultra.kind == LinePairClass::Kind::Ultraparallel);
  CHECK(ultra.value == doctest::Approx(2.0 * std::atanh(0.6)).epsilon(1e-14));

  const auto crossing = classify_pair(kL1, kM);
  CHECK(crossing.kind == LinePairClass::Kind::Intersecting);
  CHECK(crossing.value == doctest::Approx(1.5707963267948966).epsilon(1e-14));

  const auto same = classify_pair(kL1, kL1);
  CHECK(same.kind == LinePairClass::Kind::AsymptoticOrEqual);

  CHECK_THROWS_AS(line_distance(kL1, kM), NotUltraparallel);
}

TEST_CASE("orthogonal projection in the standard charts") {
  const double x = 0.35;
  const Complex w{0.2, -0.6};
  const BallPoint p{{x, 0}, w * std::sqrt(1.0 - x * x)};
  const BallPoint proj = orthogonal_projection(kL1, p);
  CHECK(std::abs(proj.z1) == 0.0);
  CHECK(std::abs(proj.z2 - w * std::sqrt(1.0 - x * x)) < 1e-15);

  const BallPoint on_line{{0, 0}, {0.3, 0.4}};
  const BallPoint same = orthogonal_projection(kL1, on_line);
  CHECK(std::abs(same.z2 - on_line.z2) < 1e-15);

  const BallPoint q = orthogonal_projection(kM, BallPoint{{0, 0}, {0.3, 0}});
  CHECK(std::abs(q.z1) + std::abs(q.z2) < 1e-15);
}

TEST_CASE("s function closed forms, involution, domain") {
  const double fixed = 2.0 * std::asinh(1.0);
  CHECK(s_function(fixed) == doctest::Approx(fixed).epsilon(1e-14));
  const double coth_quarter = std::cosh(0.25) / std::sinh(0.25);
  CHECK(std::abs(s_function(1.0) - 2.0 * std::log(coth_quarter)) < 1e-12);
  CHECK(s_function(1.0) == doctest::Approx(verify::golden::s_of_1).epsilon(5e-15));
  CHECK(std::abs(s_function(s_function(1.0)) - 1.0) < 1e-12);
  CHECK_THROWS_AS(s_function(0.0), NonPositiveDistance);
  CHECK_THROWS_AS(s_function(-1.0), NonPositiveDistance);
}

TEST_CASE("projection radius for disjoint lines") {
  const double d = 1.0;
  const ComplexLine l2 = normalized_partner(std::tanh(0.5 * d));
  CHECK(projection_radius_disjoint(kL1, l2) ==
        doctest::Approx(verify::golden::s_of_1).epsilon(1e-14));
  CHECK(projection_radius_disjoint(kL1, normalized_partner(std::tanh(2.0))) <
        projection_radius_disjoint(kL1, l2));
  CHECK(s_function(40.0) < 1e-8); // radius vanishes for far pairs
  CHECK_THROWS_AS(projection_radius_disjoint(kL1, kM), NotUltraparallel);
}

TEST_CASE("sampled image of the projection fills a disc of radius s(d)") {
  const double d = 1.0;
  const ComplexLine l2 = normalized_partner(std::tanh(0.5 * d));
  const LineFrame f2 = line_frame(l2);
  const BallPoint foot{};
  double max_dist = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Complex dir = std::polar(1.0, 6.283185307179586 * i / 10000.0);
    const BallPoint img = project_lift(kL1, f2.center + dir * f2.tangent);
    max_dist = std::max(max_dist, bergman_distance(foot, img));
  }
  CHECK(std::abs(max_dist - s_function(d)) < 1e-6);
}

TEST_CASE("projection radius for intersecting lines") {
  CHECK(projection_radius_intersecting(1.5707963267948966) == doctest::Approx(0.0));
  CHECK(projection_radius_intersecting(3.14159265358979323846 / 3.0) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(projection_radius_intersecting(1e-8) > 10.0);
  CHECK_THROWS_AS(projection_radius_intersecting(0.0), AngleOutOfRange);
  CHECK_THROWS_AS(projection_radius_intersecting(2.0), AngleOutOfRange);
}

TEST_CASE("normalize_pair reaches the standard position") {
  const double x = 0.6;
  const ComplexLine l2 = normalized_partner(x);
  const NormalizedPair np = normalize_pair(kL1, l2);
  CHECK(is_projective_identity(np.mover, 1e-9));
  CHECK(np.x == doctest::Approx(x).epsilon(1e-14));

  RngStream rng(23);
  for (int i = 0; i < 30; ++i) {
    const LinePair pair = random_ultraparallel_pair(rng, 0.2, 4.0);
    const NormalizedPair n = normalize_pair(pair.l1, pair.l2);
    CHECK(projectively_equal(apply_line(n.mover, pair.l1).polar(), kL1.polar(), 1e-8));
    const HVector want{{1.0 / n.x, 0}, {0, 0}, {1, 0}};
    CHECK(projectively_equal(apply_line(n.mover, pair.l2).polar(), want, 1e-8));
    // the perpendicular line lands on {(z,0)} and the foot on the origin
    const ComplexLine perp = common_perpendicular(pair.l1, pair.l2);
    CHECK(projectively_equal(apply_line(n.mover, perp).polar(), kM.polar(), 1e-8));
    const BallPoint foot = line_intersection_point(pair.l1, perp);
    const BallPoint moved = apply_point(n.mover, foot);
    CHECK(std::abs(moved.z1) + std::abs(moved.z2) < 1e-8);
    CHECK(n.x == doctest::Approx(std::tanh(0.5 * pair.d)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(normalize_pair(kL1, kM), NotUltraparallel);
}

TEST_CASE("transversality stability") {
  CHECK(transversality_stability_check(kL1, kM, 0.5, 2000, 42));
  CHECK_THROWS_AS(transversality_stability_check(kL1, normalized_partner(0.5), 0.1, 100, 1),
                  NotTransversal);
  CHECK_THROWS_AS(transversality_stability_check(kL1, kM, 1.5, 100, 1), ParameterOutOfRange);
}

TEST_CASE("line frame gives an isometric Poincare coordinate") {
  RngStream rng(29);
  for (int i = 0; i < 50; ++i) {
    const LinePair pair = random_ultraparallel_pair(rng, 0.5, 2.0);
    const LineFrame f = line_frame(pair.l1);
    const Complex a = rng.disc(0.95), b = rng.disc(0.95);
    const double t = std::abs((a - b) / (1.0 - a * std::conj(b)));
    const double want = std::log1p(2.0 * t / (1.0 - t));
    CHECK(bergman_distance(line_point(f, a), line_point(f, b)) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_SUITE_END();
