#include <doctest.h>

#include <cmath>

#include "cxhyp/errors.hpp"
#include "cxhyp/groups.hpp"
#include "cxhyp/sampling.hpp"
#include "cxhyp/verify.hpp"

using namespace cxhyp;

namespace {

const ComplexLine kL1 = ComplexLine::from_polar({{1, 0}, {0, 0}, {0, 0}});
const ComplexLine kM = ComplexLine::from_polar({{0, 0}, {1, 0}, {0, 0}});

CFuchsianGroup polygon_at_distance(double distance) {
  const CFuchsianGroup base = regular_polygon_group(2);
  const Isometry f = axis_translation(std::tanh(0.5 * distance));
  std::vector<Isometry> gens;
  for (const Isometry& g : base.generators()) gens.push_back(f * g * f.inverse());
  return CFuchsianGroup::create(apply_line(f, base.line()), std::move(gens));
}

} // namespace

TEST_SUITE_BEGIN("groups");

TEST_CASE("regular polygon group satisfies the surface relation") {
  for (int genus = 2; genus <= 3; ++genus) {
    const CFuchsianGroup grp = regular_polygon_group(genus);
    REQUIRE(grp.generators().size() == std::size_t(2 * genus));
    Isometry rel;
    for (int t = 0; t < genus; ++t) {
      const Isometry& a = grp.generators()[2 * t];
      const Isometry& b = grp.generators()[2 * t + 1];
      rel = rel * a * b * a.inverse() * b.inverse();
    }
    CHECK(is_projective_identity(rel, 1e-8));
    for (const Isometry& g : grp.letter_maps()) {
      CHECK(projectively_equal(apply_line(g, grp.line()).polar(), grp.line().polar(), 1e-9));
      CHECK(std::abs(holonomy_of(g, grp.line())) < 1e-10);
      // each side pairing displaces the center by twice the apothem
      CHECK(bergman_distance(BallPoint{}, apply_point(g, BallPoint{})) ==
            doctest::Approx(2.0 * regular_polygon_apothem(genus)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(regular_polygon_group(1), GenusTooSmall);
}

TEST_CASE("injectivity radius of the genus-2 group at the center") {
  const CFuchsianGroup grp = regular_polygon_group(2);
  const double inj = injectivity_radius(grp, BallPoint{}, 3);
  CHECK(std::abs(inj - std::acosh(1.0 + std::sqrt(2.0))) < 1e-8);
  CHECK(injectivity_radius(grp, BallPoint{}, 1) >= inj - 1e-12);
  CHECK_THROWS_AS(injectivity_radius(grp, BallPoint{{0.3, 0}, {0, 0}}, 2), PointOffLine);
}

TEST_CASE("injectivity radius of a cyclic group") {
  const Complex w{0.4, 0.2};
  const CFuchsianGroup cyclic =
      CFuchsianGroup::create(kL1, {normalized_loxodromic(w, 0.0)});
  const double want = 0.5 * bergman_distance(BallPoint{}, BallPoint{{0, 0}, w});
  CHECK(injectivity_radius(cyclic, BallPoint{}, 3) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("group creation rejects non-stabilizing generators") {
  CHECK_THROWS_AS(CFuchsianGroup::create(kL1, {axis_translation(0.5)}), NotStabilizing);
}

TEST_CASE("combination precondition and margin") {
  const double crit = 2.0 * s_function(std::acosh(1.0 + std::sqrt(2.0)));
  const CFuchsianGroup g1 = regular_polygon_group(2);
  const CFuchsianGroup g2 = polygon_at_distance(crit + 0.1);
  const auto pre = combination_precondition(g1, g2, 2);
  CHECK(pre.ok);
  CHECK(pre.margin == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(pre.inj1 == doctest::Approx(std::acosh(1.0 + std::sqrt(2.0))).epsilon(1e-10));

  const CFuchsianGroup close = polygon_at_distance(crit - 0.3);
  const auto bad = combination_precondition(g1, close, 2);
  CHECK_FALSE(bad.ok);
  CHECK(bad.margin < 0.0);
  CHECK_THROWS_AS(build_combination(g1, close, 2, 500, 3), PreconditionFailed);

  // margin grows with the spacing
  const auto wider = combination_precondition(g1, polygon_at_distance(crit + 0.4), 2);
  CHECK(wider.margin > pre.margin);
}

TEST_CASE("combination walls certify the genus-2 pair") {
  const double crit = 2.0 * s_function(std::acosh(1.0 + std::sqrt(2.0)));
  const CFuchsianGroup g1 = regular_polygon_group(2);
  const CFuchsianGroup g2 = polygon_at_distance(crit + 0.1);
  const Combination c = build_combination(g1, g2, 3, 2000, 77);
  CHECK(c.combined_generators.size() == g1.generators().size() + g2.generators().size());
  CHECK(c.report.precondition_satisfied);
  CHECK(c.report.pingpong_total > 0);
  CHECK(c.report.pingpong_passed == c.report.pingpong_total);
  CHECK(std::abs(c.report.min_distance_over_words - c.report.rho_l1_l2) < 1e-9);

  // a single generator of the far group cannot pull L2 closer
  const HVector moved = apply_line(g2.generators()[0], g2.line()).polar();
  const double n = std::norm(hermitian_form(moved, g1.line().polar()));
  CHECK(2.0 * std::asinh(std::sqrt(n - 1.0)) >= c.report.rho_l1_l2 - 1e-9);

  // deterministic given the seed
  const Combination again = build_combination(g1, g2, 3, 2000, 77);
  CHECK(again.report.pingpong_passed == c.report.pingpong_passed);
  CHECK(again.report.min_distance_over_words == c.report.min_distance_over_words);
}

TEST_CASE("word budget guards the enumeration") {
  const CFuchsianGroup g1 = regular_polygon_group(2);
  const CFuchsianGroup g2 = polygon_at_distance(5.0);
  CHECK_THROWS_AS(verify_distance_realization(g1, g2, 40, 1000), DepthTooLarge);
}

TEST_CASE("schottky axes separate by the offset") {
  const SchottkyExample a = schottky_example(8.0, 0.2, 400, 5);
  const SchottkyExample b = schottky_example(8.0, 0.1, 400, 5);
  CHECK(a.geodesic_gap > b.geodesic_gap);
  CHECK(b.geodesic_gap > 0.0);
  CHECK(b.geodesic_gap < 0.2);
  CHECK_THROWS_AS(schottky_example(1.0, 0.5, 400, 5), NeighborhoodConditionFailed);
  CHECK_THROWS_AS(schottky_example(8.0, 0.0, 400, 5), ParameterOutOfRange);
}

TEST_CASE("bisector membership and orientation") {
  const Bisector wall = Bisector::from_spine(kM, BoundaryPoint{{0, -1}, {0, 0}},
                                             BoundaryPoint{{0, 1}, {0, 0}});
  const BallPoint p{{0.3, 0}, {0.1, 0}};
  const auto side = bisector_membership(wall, p);
  CHECK(side.side == 1);
  CHECK(side.signed_distance ==
        doctest::Approx(std::asinh(0.6 / 0.91)).epsilon(1e-12));
  CHECK(bisector_membership(wall.reversed(), p).side == -1);
  const auto on = bisector_membership(wall, BallPoint{{0, 0.4}, {-0.2, 0.1}});
  CHECK(on.on);
  CHECK(on.side == 0);
  CHECK_THROWS_AS(
      Bisector::from_spine(kM, BoundaryPoint{{0, 0}, {1, 0}}, BoundaryPoint{{0, 1}, {0, 0}}),
      ParameterOutOfRange);
}

TEST_CASE("bisector projection radius") {
  const double d = 1.0;
  const double x = std::tanh(0.5 * d);
  const ComplexLine l = ComplexLine::from_polar({{1.0 / x, 0}, {0, 0}, {1, 0}});
  const Bisector wall = Bisector::from_spine(kM, BoundaryPoint{{0, -1}, {0, 0}},
                                             BoundaryPoint{{0, 1}, {0, 0}});
  CHECK(bisector_projection_radius(wall, l) ==
        doctest::Approx(verify::golden::s_of_1).epsilon(1e-9));
  CHECK_THROWS_AS(bisector_projection_radius(wall, kM), NotInGeneralPosition);
  // spine through the line itself: distance zero
  const Bisector touching = Bisector::from_spine(
      kM, BoundaryPoint{{-1, 0}, {0, 0}}, BoundaryPoint{{1, 0}, {0, 0}});
  CHECK_THROWS_AS(bisector_projection_radius(touching, kL1), NotInGeneralPosition);
}

TEST_CASE("stabilizer minimum holonomy") {
  const double d = 1.2;
  const double x = std::tanh(0.5 * d);
  const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0}, {0, 0}, {1, 0}});
  const double s = s_function(d);

  const CFuchsianGroup far = CFuchsianGroup::create(
      kL1, {normalized_loxodromic(Complex{0, std::tanh(0.5 * (s + 0.8))}, 0.7)});
  CHECK_FALSE(stabilizer_min_holonomy(far, l2, 2).has_value());

  const CFuchsianGroup near = CFuchsianGroup::create(
      kL1, {normalized_loxodromic(Complex{std::tanh(0.25 * s), 0}, 1.0)});
  const auto psi = stabilizer_min_holonomy(near, l2, 1);
  REQUIRE(psi.has_value());
  CHECK(*psi == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(stabilizer_min_holonomy(near, kM, 1), NotUltraparallel);
}

TEST_SUITE_END();
