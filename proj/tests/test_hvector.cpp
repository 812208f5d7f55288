#include <doctest.h>

#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/hvector.hpp"
#include "cxhyp/rng.hpp"

using namespace cxhyp;

TEST_SUITE_BEGIN("core");

TEST_CASE("hermitian form on basis vectors and by hand") {
  const HVector e1{{1, 0}, {0, 0}, {0, 0}};
  const HVector e3{{0, 0}, {0, 0}, {1, 0}};
  CHECK(hermitian_form(e1, e1) == Complex{1.0, 0.0});
  CHECK(hermitian_form(e3, e3) == Complex{-1.0, 0.0});

  const HVector p{{1, 0}, {0, 2}, {1, 0}};
  const HVector q{{0, 1}, {0, 0}, {2, 0}};
  CHECK(hermitian_form(p, q) == Complex{-2.0, -1.0});
}

TEST_CASE("hermitian form is conjugate symmetric") {
  RngStream rng(7);
  for (int i = 0; i < 500; ++i) {
    const HVector p{rng.disc(2.0), rng.disc(2.0), rng.disc(2.0)};
    const HVector q{rng.disc(2.0), rng.disc(2.0), rng.disc(2.0)};
    CHECK(hermitian_form(p, q) == std::conj(hermitian_form(q, p)));
  }
}

TEST_CASE("standard lift") {
  const HVector a = standard_lift(BallPoint{});
  CHECK(a.v1 == Complex{0, 0});
  CHECK(a.v3 == Complex{1, 0});
  const HVector b = standard_lift(BallPoint{{0.5, 0}, {0, 0}});
  CHECK(hermitian_form(b, b).real() == doctest::Approx(-0.75).epsilon(1e-15));
  const HVector c = standard_lift(BallPoint{{0, 0}, {0, 0.8}});
  CHECK(hermitian_form(c, c).real() == doctest::Approx(-0.36).epsilon(1e-15));
}

TEST_CASE("projectivize branches") {
  const auto interior = projectivize({{1, 0}, {0, 0}, {2, 0}});
  const auto* ball = std::get_if<BallPoint>(&interior);
  REQUIRE(ball != nullptr);
  CHECK(ball->z1 == Complex{0.5, 0});

  const auto origin = projectivize({{0, 0}, {0, 0}, {1, 0}});
  CHECK(std::get<BallPoint>(origin).z2 == Complex{0, 0});

  const auto edge = projectivize({{1, 0}, {0, 0}, {1, 0}});
  const auto* boundary = std::get_if<BoundaryPoint>(&edge);
  REQUIRE(boundary != nullptr);
  CHECK(boundary->z1 == Complex{1, 0});
  CHECK(is_on_boundary(*boundary));

  CHECK_THROWS_AS(projectivize({{1, 0}, {0, 0}, {0, 0}}), PolarAtInfinity);
  CHECK_THROWS_AS(projectivize({{2, 0}, {0, 0}, {1, 0}}), PositiveVector);
}

TEST_CASE("polar of span matches the normalized configurations") {
  const HVector o = standard_lift(BallPoint{});
  const HVector w = standard_lift(BallPoint{{0, 0}, {0.5, 0}});
  CHECK(projectively_equal(polar_of_span(o, w), {{1, 0}, {0, 0}, {0, 0}}, 1e-12));
  const HVector z = standard_lift(BallPoint{{0.5, 0}, {0, 0}});
  CHECK(projectively_equal(polar_of_span(o, z), {{0, 0}, {1, 0}, {0, 0}}, 1e-12));
  CHECK_THROWS_AS(polar_of_span(o, {{0, 0}, {0, 0}, {2, 0}}), DegenerateSpan);
}

TEST_CASE("polar of span is orthogonal to its inputs") {
  RngStream rng(11);
  for (int i = 0; i < 500; ++i) {
    const HVector p{rng.disc(1.0), rng.disc(1.0), rng.disc(1.0) + Complex{1.5, 0}};
    const HVector q{rng.disc(1.0), rng.disc(1.0), rng.disc(1.0) + Complex{1.5, 0}};
    const HVector n = polar_of_span(p, q);
    const double scale = std::sqrt(euclidean_norm_sq(n) * euclidean_norm_sq(p));
    CHECK(std::abs(hermitian_form(n, p)) <= 1e-9 * scale);
    CHECK(std::abs(hermitian_form(n, q)) <= 1e-9 * scale);
  }
}

TEST_CASE("projectivize undoes the standard lift") {
  RngStream rng(13);
  for (int i = 0; i < 200; ++i) {
    const Complex z1 = rng.disc(0.7);
    const Complex z2 = rng.disc(0.99 - std::abs(z1));
    const BallPoint p{z1, z2};
    const auto back = std::get<BallPoint>(projectivize(standard_lift(p)));
    CHECK(back.z1 == p.z1);
    CHECK(back.z2 == p.z2);
  }
}

TEST_CASE("projective equality ignores scalar factors") {
  const HVector v{{1, 2}, {3, -1}, {0.5, 0}};
  const HVector w = Complex{-0.3, 1.7} * v;
  CHECK(projectively_equal(v, w, 1e-12));
  CHECK_FALSE(projectively_equal(v, {{1, 2}, {3, -1}, {0.6, 0}}, 1e-6));
}

TEST_SUITE_END();
