#include <doctest.h>

#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/isometry.hpp"
#include "cxhyp/sampling.hpp"

using namespace cxhyp;

namespace {
const ComplexLine kL1 = ComplexLine::from_polar({{1, 0}, {0, 0}, {0, 0}});
constexpr double kPi = 3.14159265358979323846264338327950288;
} // namespace

TEST_SUITE_BEGIN("isometries");

TEST_CASE("group operations act projectively") {
  RngStream rng(3);
  const BallPoint p = random_ball_point(rng);
  CHECK(bergman_distance(apply_point(Isometry(), p), p) == 0.0);
  for (int i = 0; i < 100; ++i) {
    const Isometry g = random_isometry(rng);
    const Isometry h = random_isometry(rng);
    const BallPoint q = random_ball_point(rng);
    // associativity of the action and inverse law
    const BallPoint a = apply_point(g * h, q);
    const BallPoint b = apply_point(g, apply_point(h, q));
    CHECK(bergman_distance(a, b) < 1e-10);
    CHECK(bergman_distance(apply_point(g.inverse(), apply_point(g, q)), q) < 1e-10);
    // isometry property
    CHECK(std::abs(bergman_distance(apply_point(g, p), apply_point(g, q)) -
                   bergman_distance(p, q)) < 1e-10);
  }
}

TEST_CASE("the pairing is invariant under the group") {
  RngStream rng(41);
  for (int i = 0; i < 200; ++i) {
    const Isometry u = random_isometry(rng);
    const HVector p{rng.disc(1.0), rng.disc(1.0), rng.disc(1.0)};
    const HVector q{rng.disc(1.0), rng.disc(1.0), rng.disc(1.0)};
    const Complex before = hermitian_form(p, q);
    const Complex after = hermitian_form(u.matrix() * p, u.matrix() * q);
    const double scale = std::max(1.0, std::abs(before));
    CHECK(std::abs(after - before) <= 1e-9 * scale);
  }
}

TEST_CASE("su(2,1) invariants hold for the constructors") {
  RngStream rng(5);
  for (int i = 0; i < 200; ++i) {
    const Isometry g = normalized_loxodromic(rng.disc(0.97), rng.uniform(-kPi, kPi));
    CHECK(j_unitarity_residual(g.matrix()) < 1e-9 * std::max(1.0, g.matrix().frobenius_sq()));
    CHECK(std::abs(g.matrix().det() - Complex{1, 0}) < 1e-10);
  }
  CHECK_THROWS_AS(normalized_loxodromic(Complex{1.0, 0.0}, 0.3), OutOfBall);
  CHECK_THROWS_AS(axis_translation(0.0), ParameterOutOfRange);
  CHECK_THROWS_AS(axis_translation(1.0), ParameterOutOfRange);
}

TEST_CASE("normalized loxodromic matches its displayed polar image") {
  // image of the normalized partner polar under g, written out entrywise
  const double x = 0.45, r = 0.6, theta = 0.8, psi = 1.1;
  const Isometry g = normalized_loxodromic(std::polar(r, theta), psi);
  const HVector n2{{1.0 / x, 0}, {0, 0}, {1, 0}};
  const HVector n3 = g.matrix() * n2;
  const double u = std::sqrt(1.0 - r * r);
  const HVector want{std::polar(1.0 / x, 2.0 * psi / 3.0),
                     std::polar(r / u, theta - psi / 3.0), std::polar(1.0 / u, -psi / 3.0)};
  CHECK(projectively_equal(n3, want, 1e-12));
}

TEST_CASE("normalized loxodromic coordinate action") {
  RngStream rng(9);
  for (int i = 0; i < 200; ++i) {
    const Complex w = rng.disc(0.9);
    const double psi = rng.uniform(-3.0, 3.0);
    const double r = std::abs(w);
    const Isometry g = normalized_loxodromic(w, psi);
    CHECK(std::abs(apply_point(g, BallPoint{}).z2 - w) < 1e-14);
    const BallPoint p = random_ball_point(rng);
    const BallPoint gp = apply_point(g, p);
    const Complex denom = std::conj(w) * p.z2 + 1.0;
    CHECK(std::abs(gp.z1 - std::sqrt(1.0 - r * r) * std::polar(1.0, psi) * p.z1 / denom) < 1e-12);
    CHECK(std::abs(gp.z2 - (p.z2 + w) / denom) < 1e-12);
  }
}

TEST_CASE("axis translation f_x") {
  const Isometry f = axis_translation(0.5);
  const BallPoint img = apply_point(f, BallPoint{});
  CHECK(std::abs(img.z1 - 0.5) < 1e-15);
  CHECK(std::abs(img.z2) == 0.0);
  CHECK(bergman_distance(BallPoint{}, img) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  const BallPoint twice = apply_point(f * f, BallPoint{});
  CHECK(bergman_distance(BallPoint{}, twice) ==
        doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-13));
}

TEST_CASE("holonomy of normalized loxodromics and rotations") {
  CHECK(holonomy_of(normalized_loxodromic({0.3, 0.4}, 0.7), kL1) ==
        doctest::Approx(0.7).epsilon(1e-13));
  CHECK(holonomy_of(Isometry(), kL1) == doctest::Approx(0.0));
  CHECK(holonomy_of(rotation_about_line(1.3), kL1) == doctest::Approx(1.3).epsilon(1e-13));
  CHECK(holonomy_of(rotation_in_line(1.3), kL1) == doctest::Approx(0.0).epsilon(1e-13));
  RngStream rng(17);
  for (int i = 0; i < 100; ++i) {
    const Isometry f = normalized_loxodromic(rng.disc(0.9), rng.uniform(-3.0, 3.0));
    const Isometry g = normalized_loxodromic(rng.disc(0.9), rng.uniform(-3.0, 3.0));
    const double diff = std::remainder(holonomy_of(f * g, kL1) - holonomy_of(g * f, kL1),
                                       2.0 * kPi);
    CHECK(std::abs(diff) < 1e-10);
  }
  // w = 0, psi = 0 is the identity
  CHECK(is_projective_identity(normalized_loxodromic({0, 0}, 0.0), 1e-12));
}

TEST_CASE("holonomy rejects non-stabilizing and parabolic-like elements") {
  CHECK_THROWS_AS(holonomy_of(axis_translation(0.3), kL1), NotStabilizing);
  // SU(1,1) parabolic fixing the boundary point 1 of the invariant disc
  const double t = 0.7;
  const DiscIsometry parabolic{{1.0, t}, {0.0, -t}};
  CHECK_THROWS_AS(holonomy_of(embed_in_line(parabolic), kL1), NotStabilizing);
}

TEST_CASE("stabilizer reduction keeps image point, holonomy, and translate distance") {
  const double x = 0.5;
  const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0}, {0, 0}, {1, 0}});
  RngStream rng(21);
  for (int i = 0; i < 100; ++i) {
    const Isometry lox = normalized_loxodromic(rng.disc(0.9), rng.uniform(-3.0, 3.0));
    const Isometry gamma = lox * rotation_in_line(rng.uniform(-3.0, 3.0));
    const Isometry g = reduce_stabilizer_element(gamma, kL1, l2);
    CHECK(bergman_distance(apply_point(gamma, BallPoint{}), apply_point(g, BallPoint{})) <
          1e-10);
    CHECK(std::abs(n_invariant(l2, apply_line(gamma, l2)) -
                   n_invariant(l2, apply_line(g, l2))) < 1e-10);
    // the leftover factor g^-1 gamma acts as the identity on the
    // perpendicular line, hence fixes L2 and every translate distance
    const Isometry leftover = g.inverse() * gamma;
    CHECK(projectively_equal(apply_line(leftover, l2).polar(), l2.polar(), 1e-9));
  }
  // an element already in normal form reduces to itself, and a pure normal
  // twist folds into the angle parameter
  const Isometry lox = normalized_loxodromic({0.2, 0.5}, 0.9);
  CHECK(projectively_equal(reduce_stabilizer_element(lox, kL1, l2), lox, 1e-10));
  const Isometry twisted = lox * rotation_about_line(0.4);
  CHECK(projectively_equal(reduce_stabilizer_element(twisted, kL1, l2),
                           normalized_loxodromic({0.2, 0.5}, 1.3), 1e-10));
  CHECK_THROWS_AS(reduce_stabilizer_element(axis_translation(0.4), kL1, l2), NotStabilizing);
}

TEST_CASE("long compositions stay on the group manifold") {
  // A bounded 600-step walk: each isometry is immediately undone, so the
  // product is the identity and any departure is pure accumulated drift.
  RngStream rng(31);
  Isometry w;
  for (int i = 0; i < 300; ++i) {
    const Isometry g = random_isometry(rng);
    w = (w * g) * g.inverse();
  }
  const double scale = std::max(1.0, w.matrix().frobenius_sq());
  CHECK(j_unitarity_residual(w.matrix()) < 1e-8 * scale);
  CHECK(projectively_equal(w, Isometry(), 1e-8));
}

TEST_CASE("projective equality identifies cube-root multiples") {
  const Isometry g = normalized_loxodromic({0.2, 0.1}, 0.4);
  Matrix3 m = g.matrix();
  const Complex omega = std::polar(1.0, 2.0 * kPi / 3.0);
  for (auto& row : m.m)
    for (auto& e : row) e *= omega;
  CHECK(projectively_equal(g, Isometry::from_matrix(m), 1e-12));
}

TEST_CASE("translate disjointness boundary: the exact twist criterion") {
  // For the normalized pair at x and a loxodromic with |w| = r, twist psi,
  // N(L2, gL2) > 1 exactly when cos(psi) < ((2-x^2) u^2 + x^2) / (2u),
  // u = sqrt(1-r^2). Small twists do not separate heavily overlapping
  // translates: x = 0.5, r = 0.6, psi = 0.3 meets L2 (N < 1).
  const auto n_of = [](double x, double r, double psi) {
    const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0}, {0, 0}, {1, 0}});
    const Isometry g = normalized_loxodromic(Complex{r, 0.0}, psi);
    return n_invariant(l2, apply_line(g, l2));
  };
  const double counterexample = n_of(0.5, 0.6, 0.3);
  CHECK(counterexample < 1.0);
  CHECK(counterexample == doctest::Approx(0.8899039009715).epsilon(1e-10));

  RngStream rng(37);
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform(0.05, 0.95);
    const double r = rng.uniform(0.05, 0.95);
    const double psi = rng.uniform(-kPi, kPi);
    const double u = std::sqrt(1.0 - r * r);
    const double crit = ((2.0 - x * x) * u * u + x * x) / (2.0 * u);
    const double n = n_of(x, r, psi);
    if (std::abs(std::cos(psi) - crit) < 1e-6) continue; // skip the tangency band
    CHECK((n > 1.0) == (std::cos(psi) < crit));
  }
}

TEST_SUITE_END();
