#include "cxhyp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cxhyp/errors.hpp"
#include "cxhyp/groups.hpp"
#include "cxhyp/measure.hpp"
#include "cxhyp/normal_form.hpp"
#include "cxhyp/sampling.hpp"
#include "cxhyp/tubes.hpp"

namespace cxhyp::verify {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

struct Collector {
  SuiteResult result;

  // pass iff observed <= threshold
  void bound(const std::string& id, const std::string& formula, double observed,
             double threshold, const std::string& note = "") {
    result.checks.push_back({id, formula, observed <= threshold, observed, threshold, note});
  }
  void flag(const std::string& id, const std::string& formula, bool pass,
            const std::string& note = "", double observed = 0.0, double threshold = 0.0) {
    result.checks.push_back({id, formula, pass, observed, threshold, note});
  }
  SuiteResult finish() {
    result.all_pass = std::all_of(result.checks.begin(), result.checks.end(),
                                  [](const Check& c) { return c.pass; });
    return result;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------- metric --

SuiteResult suite_metric(std::uint64_t seed) {
  Collector out;
  out.result.suite = "metric";
  out.result.seed = seed;
  RngStream rng(seed, 1);

  const std::size_t n = 100000;
  bool symmetric = true;
  double min_slack = std::numeric_limits<double>::infinity();
  double zero_err = 0.0;
  double iso_err = 0.0;
  const Isometry mover = random_isometry(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const BallPoint p = random_ball_point(rng);
    const BallPoint q = random_ball_point(rng);
    const BallPoint r = random_ball_point(rng);
    const double dpq = bergman_distance(p, q);
    if (dpq != bergman_distance(q, p)) symmetric = false;
    min_slack = std::min(min_slack, dpq + bergman_distance(q, r) - bergman_distance(p, r));
    zero_err = std::max(zero_err, bergman_distance(p, p));
    iso_err = std::max(
        iso_err, std::abs(bergman_distance(apply_point(mover, p), apply_point(mover, q)) - dpq));
  }
  out.flag("bergman_symmetry", "rho(p,q) = rho(q,p) bitwise", symmetric);
  out.bound("triangle_inequality", "rho(p,r) <= rho(p,q) + rho(q,r) + 1e-12", -min_slack, 1e-12);
  out.bound("identity_of_indiscernibles", "rho(p,p) = 0", zero_err, 0.0);
  out.bound("isometry_invariance", "rho(g p, g q) = rho(p,q)", iso_err, 1e-10);

  // Restriction to a complex line vs the curvature -1 Poincare formula.
  // Mild conjugations keep the sampled points a few units from the origin,
  // where the 1e-12 absolute tolerance is meaningful in double precision.
  double poincare_err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Isometry mild = normalized_loxodromic(rng.disc(0.5), rng.uniform(-3.0, 3.0)) *
                          axis_translation(rng.uniform(0.05, 0.5)) *
                          rotation_in_line(rng.uniform(-3.0, 3.0));
    const ComplexLine line =
        apply_line(mild, ComplexLine::from_polar({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}));
    const LineFrame f = line_frame(line);
    const Complex z1 = rng.disc(0.9);
    const Complex z2 = rng.disc(0.9);
    const double rho = bergman_distance(line_point(f, z1), line_point(f, z2));
    const double t = std::abs((z1 - z2) / (1.0 - z1 * std::conj(z2)));
    const double rho_poincare = std::log1p(2.0 * t / (1.0 - t));
    poincare_err = std::max(poincare_err, std::abs(rho - rho_poincare));
  }
  out.bound("poincare_restriction", "rho on a complex line = log((1+t)/(1-t))", poincare_err,
            1e-12);
  return out.finish();
}

// ------------------------------------------------------------ projection --

SuiteResult suite_projection(std::uint64_t seed) {
  Collector out;
  out.result.suite = "projection";
  out.result.seed = seed;
  RngStream rng(seed, 2);

  // Sampled radius of the projected disc vs s(d) on random ultraparallel pairs.
  double radius_err = 0.0, overshoot = 0.0;
  const std::size_t pairs = 1000;
  for (std::size_t k = 0; k < pairs; ++k) {
    const LinePair pair = random_ultraparallel_pair(rng, 0.3, 4.0);
    const double s = s_function(pair.d);
    const ComplexLine perp = common_perpendicular(pair.l1, pair.l2);
    const BallPoint foot = line_intersection_point(pair.l1, perp);
    const LineFrame f2 = line_frame(pair.l2);
    double max_dist = 0.0;
    const std::size_t m = (k == 0) ? 10000 : 128;
    for (std::size_t i = 0; i < m; ++i) {
      // closure sample: ideal points of L2 realize the supremum
      const Complex dir = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
      const BallPoint edge = project_lift(pair.l1, f2.center + dir * f2.tangent);
      max_dist = std::max(max_dist, bergman_distance(foot, edge));
      const BallPoint inner =
          orthogonal_projection(pair.l1, line_point(f2, rng.disc(0.999)));
      const double di = bergman_distance(foot, inner);
      max_dist = std::max(max_dist, di);
      overshoot = std::max(overshoot, di - s);
    }
    radius_err = std::max(radius_err, std::abs(max_dist - s));
  }
  out.bound("projection_radius_sampled", "image of L2 in L1 is a disc of radius s(d)",
            radius_err, 1e-6);
  out.bound("projection_radius_from_below", "interior samples stay within s(d)", overshoot,
            1e-9);

  // Involution and monotonicity of s on a 1000-point grid.
  double inv_err = 0.0;
  bool decreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const double d = 0.01 + (10.0 - 0.01) * i / 999.0;
    const double s = s_function(d);
    inv_err = std::max(inv_err, std::abs(s_function(s) - d));
    if (s >= prev) decreasing = false;
    prev = s;
  }
  out.bound("s_involution", "s(s(d)) = d", inv_err, 1e-12);
  out.flag("s_decreasing", "s is strictly decreasing on (0, inf)", decreasing);

  // Projection lands on the line and is the nearest point of the line.
  double on_line = 0.0, not_nearest = 0.0, commute_err = 0.0;
  for (int k = 0; k < 200; ++k) {
    const LinePair pair = random_ultraparallel_pair(rng, 0.3, 3.0);
    const BallPoint p = random_ball_point(rng);
    const BallPoint proj = orthogonal_projection(pair.l1, p);
    on_line = std::max(on_line,
                       std::abs(hermitian_form(standard_lift(proj), pair.l1.polar())));
    const double dp = bergman_distance(p, proj);
    const LineFrame f = line_frame(pair.l1);
    for (int i = 0; i < 50; ++i)
      not_nearest =
          std::max(not_nearest, dp - bergman_distance(p, line_point(f, rng.disc(0.999))));
    // Stabilizer elements commute with the projection.
    const Isometry mover = normalize_line(pair.l1);
    const Isometry gamma = mover.inverse() *
                           normalized_loxodromic(rng.disc(0.8), rng.uniform(-3.0, 3.0)) * mover;
    const BallPoint lhs = orthogonal_projection(pair.l1, apply_point(gamma, p));
    const BallPoint rhs = apply_point(gamma, proj);
    commute_err = std::max(commute_err, bergman_distance(lhs, rhs));
  }
  out.bound("projection_on_line", "<proj(p), polar> = 0", on_line, 1e-9);
  out.bound("projection_nearest", "proj minimizes distance to the line", not_nearest, 1e-9);
  out.bound("projection_commutes", "proj_L(g p) = g proj_L(p) for g in Stab(L)", commute_err,
            1e-9);

  // Intersecting-pair projection radius.
  double isect_err = std::abs(projection_radius_intersecting(kPi / 2.0));
  isect_err = std::max(isect_err,
                       std::abs(projection_radius_intersecting(kPi / 3.0) - std::log(3.0)));
  bool isect_monotone = true;
  double last = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 50; ++i) {
    const double v = projection_radius_intersecting(i * (kPi / 2.0) / 50.0);
    if (v > last) isect_monotone = false;
    last = v;
  }
  out.bound("projection_radius_intersecting", "radius = log((1+|cos|)/(1-|cos|))", isect_err,
            1e-12);
  out.flag("projection_radius_intersecting_monotone", "radius decreases with the angle",
           isect_monotone);

  // Transversality is stable under polar perturbations.
  bool stable = true;
  {
    const ComplexLine l = ComplexLine::from_polar({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
    const ComplexLine m = ComplexLine::from_polar({{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
    stable = transversality_stability_check(l, m, 0.5, 10000, seed + 3);
    for (int k = 0; k < 5 && stable; ++k) {
      RngStream local(seed, 100 + k);
      LinePair pair = random_ultraparallel_pair(local, 0.3, 2.0);
      const ComplexLine probe = apply_line(random_isometry(local), pair.l1);
      const auto cls = classify_pair(pair.l1, probe);
      if (cls.kind != LinePairClass::Kind::Intersecting) continue;
      // push epsilon to just below its admissible supremum 1 - sqrt(N)
      const double eps = (1.0 - std::sqrt(n_invariant(pair.l1, probe))) - 1e-6;
      if (eps <= 0.0) continue;
      stable = transversality_stability_check(probe, pair.l1, eps, 10000, seed + 4 + k);
    }
  }
  out.flag("transversality_stable", "lines near M still meet L", stable);

  // N is an isometry invariant.
  double n_err = 0.0;
  for (int k = 0; k < 200; ++k) {
    const LinePair pair = random_ultraparallel_pair(rng, 0.3, 3.0);
    const Isometry g = random_isometry(rng);
    n_err = std::max(n_err, std::abs(n_invariant(apply_line(g, pair.l1), apply_line(g, pair.l2)) -
                                     n_invariant(pair.l1, pair.l2)));
  }
  out.bound("n_invariant_isometry", "N(gL, gM) = N(L, M)", n_err, 1e-9);
  return out.finish();
}

// -------------------------------------------------------------- holonomy --

SuiteResult suite_holonomy(std::uint64_t seed) {
  Collector out;
  out.result.suite = "holonomy";
  out.result.seed = seed;
  RngStream rng(seed, 3);

  const ComplexLine l1 = ComplexLine::from_polar({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});

  // Closed form for N(L2, g(L2)) under a normalized loxodromic.
  const std::size_t n = 100000;
  double id_err = 0.0;
  std::uint64_t disjoint_checked = 0, disjoint_violations = 0;
  std::string first_violation;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.05, 0.95);
    const double r = rng.uniform(0.01, 0.95);
    const double theta = rng.uniform(-kPi, kPi);
    const double psi = rng.uniform(-kPi, kPi);
    const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    const Isometry g = normalized_loxodromic(std::polar(r, theta), psi);
    const double n_val = n_invariant(l2, apply_line(g, l2));
    const double u2 = 1.0 - r * r;
    const double u = std::sqrt(u2);
    const double formula =
        (u2 - x * x * u * 2.0 * std::cos(psi) + x * x * x * x) / ((1.0 - x * x) * (1.0 - x * x) * u2);
    id_err = std::max(id_err, std::abs(n_val - formula));
    if (std::abs(psi) >= 1e-3 && r > 0.0) {
      ++disjoint_checked;
      if (!(n_val > 1.0)) {
        ++disjoint_violations;
        if (first_violation.empty())
          first_violation = "x=" + fmt(x) + " r=" + fmt(r) + " psi=" + fmt(psi) +
                            " N=" + fmt(n_val);
      }
    }
  }
  out.bound("hol_n_identity",
            "N(L2,gL2) = ((1-r^2) - 2 x^2 sqrt(1-r^2) cos(psi) + x^4) / ((1-x^2)^2 (1-r^2))",
            id_err, 1e-9);
  out.flag("nontrivial_holonomy_disjointness",
           "N(L2, gL2) > 1 whenever |psi| >= 1e-3 and r in (0,1)", disjoint_violations == 0,
           disjoint_violations == 0
               ? "holds on all " + std::to_string(disjoint_checked) + " filtered samples"
               : std::to_string(disjoint_violations) + "/" + std::to_string(disjoint_checked) +
                     " violations; nonzero twist does not separate overlapping translates "
                     "(disjointness additionally needs cos(psi) <= ((2-x^2)(1-r^2) + x^2)"
                     "/(2 sqrt(1-r^2))); first: " +
                     first_violation,
           double(disjoint_violations), 0.0);

  // Where the twist is at least a right angle, disjointness does hold.
  std::uint64_t safe_violations = 0;
  for (std::size_t i = 0; i < 20000; ++i) {
    const double x = rng.uniform(0.05, 0.95);
    const double r = rng.uniform(0.01, 0.95);
    const double psi = (rng.next_double() < 0.5 ? -1.0 : 1.0) * rng.uniform(kPi / 2.0, kPi);
    const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    const Isometry g = normalized_loxodromic(std::polar(r, rng.uniform(-kPi, kPi)), psi);
    if (!(n_invariant(l2, apply_line(g, l2)) > 1.0)) ++safe_violations;
  }
  out.flag("large_twist_disjointness", "N(L2, gL2) > 1 whenever |psi| >= pi/2",
           safe_violations == 0, "", double(safe_violations), 0.0);

  // Trivial-holonomy threshold r* = 2 sqrt(1-x^2) / (2-x^2) by bisection on N(r) = 1.
  double threshold_err = 0.0, twice_s_err = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = 0.05 + (0.95 - 0.05) * i / 99.0;
    const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    const auto n_of_r = [&](double r) {
      const Isometry g = normalized_loxodromic(Complex{r, 0.0}, 0.0);
      return n_invariant(l2, apply_line(g, l2));
    };
    const double r_star = 2.0 * std::sqrt(1.0 - x * x) / (2.0 - x * x);
    double lo = 0.9 * r_star, hi = 0.5 * (1.0 + r_star);
    if (!(n_of_r(lo) < 1.0 && n_of_r(hi) > 1.0)) {
      threshold_err = std::numeric_limits<double>::infinity();
      break;
    }
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (n_of_r(mid) < 1.0 ? lo : hi) = mid;
    }
    threshold_err = std::max(threshold_err, std::abs(0.5 * (lo + hi) - r_star));
    const double d = 2.0 * std::atanh(x);
    const double rho_star = std::log1p(2.0 * r_star / (1.0 - r_star));
    twice_s_err = std::max(twice_s_err, std::abs(rho_star - 2.0 * s_function(d)));
  }
  out.bound("trivial_holonomy_threshold", "N = 1 exactly at r* = 2 sqrt(1-x^2)/(2-x^2)",
            threshold_err, 1e-9);
  out.bound("threshold_is_twice_projection_radius", "rho(0, (0, r*)) = 2 s(d)", twice_s_err,
            1e-9);

  // Holonomy angle bound on admissible samples (d' >= d). Candidates are
  // drawn until 10^5 of them pass the admissibility filter.
  std::uint64_t admissible = 0;
  double angle_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; admissible < n && i < 20 * n; ++i) {
    const double d = rng.uniform(0.1, 4.0);
    const double x = std::tanh(0.5 * d);
    const double l = rng.uniform(1e-3, s_function(d));
    const double r = std::tanh(0.5 * l);
    const double psi = rng.uniform(-kPi, kPi);
    const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    const Isometry g = normalized_loxodromic(std::polar(r, rng.uniform(-kPi, kPi)), psi);
    const double n_val = n_invariant(l2, apply_line(g, l2));
    const double cosh2_half_d = 1.0 / (1.0 - x * x);
    if (n_val >= cosh2_half_d) { // rho(L2, gL2) >= d
      ++admissible;
      angle_excess = std::max(angle_excess, std::cos(psi) - holonomy_cos_bound(d));
    }
  }
  out.flag("holonomy_angle_bound", "cos(psi) <= (1 + tanh(d/2))/2 once rho(L2,gL2) >= d",
           admissible >= n && angle_excess <= 1e-9,
           std::to_string(admissible) + " admissible samples, worst excess " + fmt(angle_excess),
           angle_excess, 1e-9);

  // hol is a class function on products: hol(fg) = hol(gf).
  double comm_err = 0.0;
  for (int k = 0; k < 500; ++k) {
    const Isometry f = normalized_loxodromic(rng.disc(0.9), rng.uniform(-3.0, 3.0)) *
                       rotation_in_line(rng.uniform(-3.0, 3.0));
    const Isometry g = normalized_loxodromic(rng.disc(0.9), rng.uniform(-3.0, 3.0)) *
                       rotation_in_line(rng.uniform(-3.0, 3.0));
    double diff = holonomy_of(f * g, l1) - holonomy_of(g * f, l1);
    diff = std::remainder(diff, 2.0 * kPi);
    comm_err = std::max(comm_err, std::abs(diff));
  }
  out.bound("holonomy_product_commutes", "hol(fg) = hol(gf)", comm_err, 1e-10);

  // Normalized loxodromic: matrix vs coordinate action, image of 0, holonomy.
  double act_err = 0.0, hol_err = 0.0, img_err = 0.0;
  for (int k = 0; k < 500; ++k) {
    const Complex w = rng.disc(0.95);
    const double psi = rng.uniform(-3.0, 3.0);
    const double r = std::abs(w), theta = std::arg(w);
    const Isometry g = normalized_loxodromic(w, psi);
    const BallPoint p = random_ball_point(rng);
    const BallPoint gp = apply_point(g, p);
    const Complex denom = r * std::polar(1.0, -theta) * p.z2 + 1.0;
    const Complex want1 = std::sqrt(1.0 - r * r) * std::polar(1.0, psi) * p.z1 / denom;
    const Complex want2 = (p.z2 + w) / denom;
    act_err = std::max(act_err, std::abs(gp.z1 - want1) + std::abs(gp.z2 - want2));
    const BallPoint o = apply_point(g, BallPoint{});
    img_err = std::max(img_err, std::abs(o.z1) + std::abs(o.z2 - w));
    hol_err = std::max(hol_err,
                       std::abs(std::remainder(holonomy_of(g, l1) - psi, 2.0 * kPi)));
  }
  out.bound("loxodromic_coordinate_action",
            "(z1,z2) -> (sqrt(1-r^2) e^{i psi} z1, z2 + w) / (conj(w) z2 + 1)", act_err, 1e-9);
  out.bound("loxodromic_moves_origin", "g(0,0) = (0,w)", img_err, 1e-9);
  out.bound("loxodromic_holonomy", "hol(g^psi_w) = psi", hol_err, 1e-10);

  // Stabilizer reduction drops the rotation part.
  double red_err = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double x = rng.uniform(0.1, 0.9);
    const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    const Isometry gamma = normalized_loxodromic(rng.disc(0.9), rng.uniform(-3.0, 3.0)) *
                           rotation_in_line(rng.uniform(-3.0, 3.0));
    const Isometry g = reduce_stabilizer_element(gamma, l1, l2);
    const ComplexLine gl2 = apply_line(gamma, l2);
    const ComplexLine rl2 = apply_line(g, l2);
    red_err = std::max(red_err, std::abs(n_invariant(l2, gl2) - n_invariant(l2, rl2)));
    const BallPoint a = apply_point(gamma, BallPoint{});
    const BallPoint b = apply_point(g, BallPoint{});
    red_err = std::max(red_err, bergman_distance(a, b));
  }
  out.bound("stabilizer_reduction", "rho(L2, gamma L2) = rho(L2, g L2), gamma(0) = g(0)",
            red_err, 1e-10);

  // Translation along an axis: f_x moves the origin to (x, 0), length adds up.
  double fx_err = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double x = rng.uniform(0.05, 0.95);
    const Isometry f = axis_translation(x);
    const BallPoint img = apply_point(f, BallPoint{});
    fx_err = std::max(fx_err, std::abs(img.z1 - x) + std::abs(img.z2));
    const double d = std::log1p(2.0 * x / (1.0 - x));
    fx_err = std::max(fx_err, std::abs(bergman_distance(BallPoint{}, img) - d));
    const BallPoint img2 = apply_point(f * f, BallPoint{});
    fx_err = std::max(fx_err, std::abs(bergman_distance(BallPoint{}, img2) - 2.0 * d));
  }
  out.bound("axis_translation", "f_x(0) = (x,0), rho(0, f_x(0)) = log((1+x)/(1-x))", fx_err,
            1e-9);
  return out.finish();
}

// ---------------------------------------------------------------- volume --

SuiteResult suite_volume(std::uint64_t seed, unsigned threads) {
  Collector out;
  out.result.suite = "volume";
  out.result.seed = seed;

  struct Triple {
    double s, eps, psi;
  };
  const Triple triples[5] = {{1.0, 1.0, kPi},
                             {0.5, 0.3, 2.0 * kPi},
                             {2.0, 0.7, 1.0},
                             {0.8, 1.5, kPi / 2.0},
                             {1.5, 0.5, 4.0}};
  double worst_z = 0.0, worst_rel = 0.0;
  for (int i = 0; i < 5; ++i) {
    const WedgeParams w(triples[i].s, triples[i].eps, triples[i].psi);
    const McEstimate mc = mc_wedge_volume(w, 10000000, seed + i, threads);
    const double closed = wedge_volume(w);
    worst_z = std::max(worst_z, std::abs(mc.estimate - closed) / mc.std_error);
    worst_rel = std::max(worst_rel, mc.std_error / mc.estimate);
  }
  out.bound("mc_wedge_within_3_sigma",
            "Monte Carlo wedge volume matches psi (cosh^4(eps/2) - 1) 4 pi sinh^2(s/2)",
            worst_z, 3.0);
  out.bound("mc_relative_error", "std_error / estimate < 1%", worst_rel, 0.01);

  {
    const WedgeParams w(1.0, 1.0, kPi);
    const McEstimate a = mc_wedge_volume(w, 100000, seed + 17, 1);
    const McEstimate b = mc_wedge_volume(w, 100000, seed + 17, 1);
    const McEstimate c = mc_wedge_volume(w, 100000, seed + 17, 4);
    out.flag("mc_deterministic", "same seed gives a bit-identical estimate",
             a.estimate == b.estimate && a.std_error == b.std_error &&
                 a.estimate == c.estimate && a.std_error == c.std_error);
    const McEstimate big = mc_wedge_volume(w, 10000000, seed + 18, threads);
    const McEstimate small = mc_wedge_volume(w, 100000, seed + 18, threads);
    const double ratio = small.std_error / big.std_error;
    out.flag("mc_convergence_rate", "std_error scales as 1/sqrt(samples)",
             ratio > 10.0 / 1.5 && ratio < 10.0 * 1.5, "ratio " + fmt(ratio), ratio);
  }

  // Area of the half-radius projection disc.
  double half_err = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double d = 0.05 + (8.0 - 0.05) * i / 199.0;
    half_err = std::max(half_err,
                        std::abs(disc_area(0.5 * s_function(d)) - half_projection_disc_area(d)));
  }
  out.bound("half_projection_disc_area", "4 pi sinh^2(s(d)/4) = 4 pi / (e^d - 1)", half_err,
            1e-11);

  // Monotonicity and degenerate limits of the closed forms.
  bool monotone = true;
  double prev = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double v = wedge_volume(WedgeParams(0.1 * i, 0.7, 1.0));
    if (v <= prev) monotone = false;
    prev = v;
  }
  prev = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double v = wedge_volume(WedgeParams(1.0, 0.1 * i, 1.0));
    if (v <= prev) monotone = false;
    prev = v;
  }
  prev = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double v = wedge_volume(WedgeParams(1.0, 0.7, i * 2.0 * kPi / 41.0));
    if (v <= prev) monotone = false;
    prev = v;
  }
  out.flag("wedge_monotone", "wedge volume increases in each of s, eps, psi", monotone);

  double consistency = std::abs(wedge_volume(WedgeParams(1.3, 0.4, 2.0 * kPi)) -
                                tube_volume(disc_area(1.3), 0.4));
  consistency = std::max(consistency, std::abs(tube_volume(3.7, 0.0)));
  consistency = std::max(
      consistency, std::abs(wedge_volume(WedgeParams(1.0, 1.0, 1.0)) -
                            0.5 * wedge_volume(WedgeParams(1.0, 1.0, 2.0))));
  out.bound("tube_wedge_consistency", "wedge at psi = 2 pi equals the tube volume", consistency,
            1e-12);

  double disc_err = std::abs(disc_area(0.0));
  disc_err = std::max(disc_err, std::abs(disc_area(2.0 * std::asinh(1.0)) - 4.0 * kPi));
  disc_err = std::max(disc_err, std::abs(disc_area(1e-6) / (kPi * 1e-12) - 1.0));
  out.bound("disc_area", "Area(D_r) = 4 pi sinh^2(r/2)", disc_err, 1e-9);

  // Positivity of the sampled volume-form density over the wedge region.
  RngStream rng(seed, 4);
  bool positive = true;
  for (int i = 0; i < 100000; ++i) {
    const double rho2 = std::tanh(0.5 * 1.3) * std::sqrt(rng.next_double());
    const double f = std::sqrt(1.0 - rho2 * rho2) * std::tanh(0.5 * 0.9);
    const double r1 = f * std::sqrt(rng.next_double());
    if (!(1.0 - r1 * r1 - rho2 * rho2 > 0.0)) positive = false;
  }
  out.flag("volume_form_positive", "16 r / (1 - r^2 - |z2|^2)^3 > 0 inside the region",
           positive);
  return out.finish();
}

// ----------------------------------------------------------------- tubes --

SuiteResult suite_tubes(std::uint64_t seed) {
  Collector out;
  out.result.suite = "tubes";
  out.result.seed = seed;

  const auto rel = [](double got, double want) { return std::abs(got - want) / std::abs(want); };

  double golden_err = rel(collar_width_chi(-2), golden::collar_width_chi_m2);
  golden_err = std::max(golden_err, rel(volume_lower_bound(1, -2), golden::volume_lower_bound_1_m2));
  golden_err =
      std::max(golden_err, rel(eigenvalue_bound_explicit(100.0, -2), golden::eigenvalue_bound_100_m2));
  const auto bounds_m2 = tube_function_bounds(-2);
  golden_err = std::max(golden_err, rel(bounds_m2.first, golden::tube_bounds_lower_m2));
  golden_err = std::max(golden_err, rel(bounds_m2.second, golden::tube_bounds_upper_m2));
  golden_err = std::max(golden_err, rel(collar_width_area(2.0), golden::collar_width_area_2));
  golden_err =
      std::max(golden_err, rel(two_surface_width_area(2.0, 2.0), golden::two_surface_width_2_2));
  golden_err = std::max(golden_err, rel(s_function(1.0), golden::s_of_1));
  golden_err =
      std::max(golden_err, rel(tube_volume(1.0, 1.0), golden::tube_volume_area1_eps1));
  out.bound("golden_values", "closed forms match the 33-digit oracle to 12 significant digits",
            golden_err, 5e-12);

  // chi-form and area-form agree under A = 2 pi |chi|.
  double agree = 0.0;
  for (long long chi = -2; chi >= -20; --chi) {
    const double a = gauss_bonnet_area(chi);
    agree = std::max(agree, std::abs(collar_width_area(a) - collar_width_chi(chi)));
    agree = std::max(agree,
                     std::abs(two_surface_width_area(a, a) - two_surface_width_chi(chi, chi)));
    agree = std::max(agree, std::abs(volume_lower_bound_area(3, a) - volume_lower_bound(3, chi)));
  }
  out.bound("chi_area_agreement", "A = 2 pi |chi| identifies the two bound families", agree,
            1e-12);

  // Asymptotics of the optimal tube bounds.
  {
    const auto big = tube_function_bounds(-1000000);
    const double lower_scaled = big.first * 4.0 * kPi * 1e6;
    const double upper_scaled = big.second * std::sqrt(1e6) / (2.0 * std::sqrt(kPi));
    out.flag("tube_bound_asymptotics",
             "lower ~ 1/(4 pi |chi|), upper ~ 2 sqrt(pi)/sqrt(|chi|) as |chi| grows",
             lower_scaled >= 0.95 && lower_scaled <= 1.0 && upper_scaled >= 0.95 &&
                 upper_scaled <= 1.05,
             "lower*4pi|chi| = " + fmt(lower_scaled) + ", upper*sqrt(|chi|)/(2 sqrt(pi)) = " +
                 fmt(upper_scaled));
    const auto mid = tube_function_bounds(-1000);
    const double mid_scaled = mid.second * std::sqrt(1000.0) / (2.0 * std::sqrt(kPi));
    out.flag("tube_bound_asymptotics_1e3", "upper asymptotic already within 5% at |chi| = 1000",
             mid_scaled >= 0.95 && mid_scaled <= 1.05, fmt(mid_scaled));
  }

  // Monotonicity in the forced directions.
  bool monotone = true;
  for (long long chi = -2; chi >= -40; --chi) {
    if (!(collar_width_chi(chi - 1) < collar_width_chi(chi))) monotone = false;
    if (!(volume_lower_bound(2, chi) == 2.0 * volume_lower_bound(1, chi))) monotone = false;
  }
  for (int i = 1; i < 40; ++i) {
    if (!(eigenvalue_bound_general(10.0 + i + 1, 1.0, 0.5) <
          eigenvalue_bound_general(10.0 + i, 1.0, 0.5)))
      monotone = false;
  }
  out.flag("bound_monotonicity", "widths shrink with |chi|; volume bound is linear in n",
           monotone);

  // Case split in the width derivation.
  bool case_split = true;
  for (int i = 0; i < 600; ++i) {
    const double a = std::pow(10.0, -3.0 + 6.0 * i / 599.0);
    const double case1 = std::log1p(kPi / a);
    const double case2 = 0.5 * std::log1p(2.0 / a);
    if (std::min(case1, case2) != case2) case_split = false;
  }
  out.flag("width_case_split", "min(log(pi/A + 1), log(2/A + 1)/2) = log(2/A + 1)/2",
           case_split);

  // The sector-angle inequality reproduces the closed-form width by bisection.
  double bisect_err = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double a = std::pow(10.0, -2.0 + 4.0 * i / 49.0);
    const auto excess = [&](double d) {
      return a * std::expm1(d) - (1.0 - std::tanh(0.5 * d));
    };
    double lo = 1e-12, hi = 50.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    bisect_err = std::max(bisect_err, std::abs(0.5 * (lo + hi) - 0.5 * std::log1p(2.0 / a)));
  }
  out.bound("psi_inequality_bisection",
            "1 - tanh(d/2) = A (e^d - 1) solves to d = log(2/A + 1)/2", bisect_err, 1e-9);

  // Eigenvalue bound: explicit form equals the general form on its inputs.
  double eig_err = 0.0;
  for (long long chi = -2; chi >= -10; --chi) {
    const double c = collar_width_chi(chi);
    const double vn = tube_volume(gauss_bonnet_area(chi), c);
    eig_err = std::max(eig_err, std::abs(eigenvalue_bound_explicit(100.0, chi) -
                                         eigenvalue_bound_general(100.0, vn, c)));
  }
  out.bound("eigenvalue_explicit_consistency",
            "explicit bound = vol(N) / (c^2 (vol(X) - vol(N)))", eig_err, 1e-12);

  bool throws_ok = false;
  try {
    eigenvalue_bound_explicit(0.01, -2);
  } catch (const TubeExceedsManifold&) {
    throws_ok = true;
  }
  bool invalid_ok = false;
  try {
    tube_function_bounds(-3);
  } catch (const InvalidChi&) {
    invalid_ok = true;
  }
  out.flag("bound_domain_errors", "degenerate inputs are rejected", throws_ok && invalid_ok);

  // Holonomy angle bound endpoints (d = 30 stays strictly below 1 in doubles).
  const double near0 = holonomy_cos_bound(1e-9);
  const double far = holonomy_cos_bound(30.0);
  out.flag("holonomy_cos_bound_range", "(1 + tanh(d/2))/2 runs from 1/2 to 1",
           std::abs(near0 - 0.5) < 1e-9 && far < 1.0 && far > 1.0 - 1e-9);

  double rel_two = std::abs(two_surface_width_area(2.0, 5.0) - 0.5 * collar_width_area(5.0));
  rel_two = std::max(rel_two, std::abs(two_surface_width_area(5.0, 2.0) -
                                       two_surface_width_area(2.0, 5.0)));
  out.bound("two_surface_relations", "two-surface width is half the collar width of the max",
            rel_two, 1e-15);

  bool ordered = true;
  for (long long chi = -2; chi >= -30; chi -= 2) {
    const auto b = tube_function_bounds(chi);
    if (!(b.first < b.second)) ordered = false;
  }
  out.flag("tube_bounds_ordered", "lower bound < upper bound", ordered);
  (void)seed;
  return out.finish();
}

// ---------------------------------------------------------------- groups --

CFuchsianGroup translated_polygon_group(const CFuchsianGroup& base, double distance,
                                        double rotation) {
  const Isometry rot = rotation_in_line(rotation);
  const Isometry f = axis_translation(std::tanh(0.5 * distance));
  const Isometry mover = f * rot;
  std::vector<Isometry> gens;
  gens.reserve(base.generators().size());
  for (const Isometry& g : base.generators()) gens.push_back(mover * g * mover.inverse());
  return CFuchsianGroup::create(apply_line(mover, base.line()), std::move(gens));
}

SuiteResult suite_groups(std::uint64_t seed) {
  Collector out;
  out.result.suite = "groups";
  out.result.seed = seed;
  RngStream rng(seed, 5);

  // Free-product word reduction.
  {
    bool ok = true;
    for (int k = 0; k < 2000; ++k) {
      Word w;
      const int len = 1 + int(rng.next_u64() % 12);
      for (int i = 0; i < len; ++i)
        w.push_back({std::uint8_t(1 + (rng.next_u64() % 2)), std::uint16_t(rng.next_u64() % 3),
                     std::int8_t(rng.next_double() < 0.5 ? 1 : -1)});
      const Word r = reduce_word(w);
      if (r.size() > w.size()) ok = false;
      if (reduce_word(r) != r) ok = false;
      for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (is_inverse_pair(r[i], r[i + 1])) ok = false;
    }
    out.flag("word_reduction", "free reduction is idempotent and never grows", ok);
  }

  // Regular 4g-gon surface groups.
  double relation_resid = 0.0, hol_err = 0.0, stab_ok = true;
  for (int genus = 2; genus <= 3; ++genus) {
    const CFuchsianGroup grp = regular_polygon_group(genus);
    Isometry rel;
    for (int t = 0; t < genus; ++t) {
      const Isometry& a = grp.generators()[2 * t];
      const Isometry& b = grp.generators()[2 * t + 1];
      rel = rel * a * b * a.inverse() * b.inverse();
    }
    relation_resid =
        std::max(relation_resid, projectively_equal(rel, Isometry(), 1e-8) ? 0.0 : 1.0);
    for (const Isometry& g : grp.letter_maps()) {
      if (!projectively_equal(apply_line(g, grp.line()).polar(), grp.line().polar(), 1e-8))
        stab_ok = false;
      hol_err = std::max(hol_err, std::abs(holonomy_of(g, grp.line())));
    }
  }
  out.bound("polygon_relation", "[a1,b1]...[ag,bg] = 1", relation_resid, 1e-8);
  out.flag("polygon_stabilizes", "all 4g side-pairing maps stabilize the line", stab_ok);
  out.bound("polygon_trivial_holonomy", "every generator has holonomy 0", hol_err, 1e-10);

  // Injectivity radius of the genus-2 group at the center.
  const CFuchsianGroup genus2 = regular_polygon_group(2);
  const double inj3 = injectivity_radius(genus2, BallPoint{}, 3);
  const double inj1 = injectivity_radius(genus2, BallPoint{}, 1);
  out.bound("polygon_injectivity_radius", "inj(center) = arccosh(cot(pi/8)) = arccosh(1+sqrt 2)",
            std::abs(inj3 - golden::polygon_apothem_g2), 1e-8);
  out.flag("injectivity_depth_monotone", "depth-limited estimates never increase with depth",
           inj1 >= inj3 - 1e-12);
  {
    const Complex w = rng.disc(0.7);
    const CFuchsianGroup cyclic = CFuchsianGroup::create(
        genus2.line(), {normalized_loxodromic(w, 0.0)});
    const double want = 0.5 * bergman_distance(BallPoint{}, BallPoint{{0.0, 0.0}, w});
    out.bound("injectivity_single_generator", "<g> at 0 gives half the displacement",
              std::abs(injectivity_radius(cyclic, BallPoint{}, 2) - want), 1e-10);
  }

  // Combination pipeline at the critical spacing + 0.1.
  const double inj_center = golden::polygon_apothem_g2;
  const double crit = 2.0 * s_function(inj_center);
  {
    const CFuchsianGroup g2grp = translated_polygon_group(genus2, crit + 0.1, 0.0);
    const CombinationPrecondition pre = combination_precondition(genus2, g2grp, 2);
    out.bound("combination_margin", "margin = rho(L1,L2) - s(inj p1) - s(inj p2)",
              std::abs(pre.margin - 0.1), 1e-9);
    const Combination comb = build_combination(genus2, g2grp, 4, 10000, seed + 11);
    out.flag("combination_pingpong", "every sampled point obeys the wall inclusions",
             comb.report.pingpong_total > 0 &&
                 comb.report.pingpong_passed == comb.report.pingpong_total,
             std::to_string(comb.report.pingpong_passed) + "/" +
                 std::to_string(comb.report.pingpong_total));
    out.bound("combination_distance_realized", "min over words of rho(L1, w L2) = rho(L1, L2)",
              std::abs(comb.report.min_distance_over_words - comb.report.rho_l1_l2), 1e-9);
    double prev_min = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (int depth = 1; depth <= 3; ++depth) {
      const double m = verify_distance_realization(genus2, g2grp, depth);
      if (m > prev_min + 1e-12) monotone = false;
      if (m < comb.report.rho_l1_l2 - 1e-9) monotone = false;
      prev_min = m;
    }
    out.flag("distance_realization_monotone",
             "word minima never increase with depth, never dip below rho(L1,L2)", monotone);
    const Isometry gen2 = g2grp.generators()[0];
    const double single = [&] {
      const HVector ng = apply_line(gen2, g2grp.line()).polar();
      const double nn = std::norm(hermitian_form(ng, genus2.line().polar()));
      return nn > 1.0 ? 2.0 * std::asinh(std::sqrt(nn - 1.0)) : 0.0;
    }();
    out.flag("single_word_distance", "a G2 generator cannot bring L2 closer to L1",
             single >= comb.report.rho_l1_l2 - 1e-9);
  }

  // Below-threshold control: certificates must report failures. The spacing
  // sits far below the threshold; mild violations can still pass the sampled
  // wall checks (the precondition is sufficient, not necessary).
  {
    const CFuchsianGroup near = translated_polygon_group(genus2, 0.5, 0.0);
    bool precondition_failed = false;
    try {
      build_combination(genus2, near, 3, 4000, seed + 13);
    } catch (const PreconditionFailed&) {
      precondition_failed = true;
    }
    const Combination forced = build_combination(genus2, near, 3, 4000, seed + 13, true);
    out.flag("below_threshold_control",
             "a violated spacing fails the precondition and leaks ping-pong samples",
             precondition_failed && !forced.report.precondition_satisfied &&
                 forced.report.pingpong_passed < forced.report.pingpong_total,
             std::to_string(forced.report.pingpong_passed) + "/" +
                 std::to_string(forced.report.pingpong_total) + ", margin " +
                 fmt(forced.report.margin));
  }

  // Schottky pair: fixed translation lengths, shrinking axis offset.
  {
    const double offsets[4] = {0.2, 0.1, 0.05, 0.025};
    double gaps[4];
    bool monotone = true, lengths_fixed = true;
    for (int i = 0; i < 4; ++i) {
      const SchottkyExample ex = schottky_example(8.0, offsets[i], 1500, seed + 21);
      gaps[i] = ex.geodesic_gap;
      if (i > 0 && !(gaps[i] < gaps[i - 1])) monotone = false;
      const BallPoint axis_pt = apply_point(
          embed_in_perp(DiscIsometry::translate_to(Complex{0.0, std::tanh(0.5 * offsets[i])})),
          BallPoint{});
      const double disp = bergman_distance(axis_pt, apply_point(ex.gamma2, axis_pt));
      if (std::abs(disp - 8.0) > 1e-9) lengths_fixed = false;
    }
    out.flag("schottky_gap_shrinks",
             "axis offsets 0.2, 0.1, 0.05, 0.025 give strictly shrinking gaps, final < 0.05",
             monotone && gaps[3] < 0.05,
             "gaps " + fmt(gaps[0]) + ", " + fmt(gaps[1]) + ", " + fmt(gaps[2]) + ", " +
                 fmt(gaps[3]));
    out.flag("schottky_lengths_fixed", "pushing the axis keeps the translation length",
             lengths_fixed);
    bool fails = false;
    try {
      schottky_example(1.0, 0.5, 500, seed + 22);
    } catch (const NeighborhoodConditionFailed&) {
      fails = true;
    }
    out.flag("schottky_short_length_fails",
             "short translation lengths break the neighborhood condition", fails);
  }

  // Bisector membership, orientation, and transport.
  {
    const ComplexLine m = ComplexLine::from_polar({{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
    const Bisector b = Bisector::from_spine(m, BoundaryPoint{{0.0, -1.0}, {0.0, 0.0}},
                                            BoundaryPoint{{0.0, 1.0}, {0.0, 0.0}});
    const auto cls = bisector_membership(b, BallPoint{{0.3, 0.0}, {0.1, 0.0}});
    const double want_sd = std::asinh(2.0 * 0.3 / (1.0 - 0.09));
    const auto flipped = bisector_membership(b.reversed(), BallPoint{{0.3, 0.0}, {0.1, 0.0}});
    const auto on_wall = bisector_membership(b, BallPoint{{0.0, 0.2}, {0.15, 0.0}});
    out.flag("bisector_membership",
             "side is the sign of the signed distance of the carrier projection to the spine",
             cls.side == +1 && std::abs(cls.signed_distance - want_sd) < 1e-12 &&
                 flipped.side == -1 && on_wall.on && on_wall.side == 0);

    double transport_err = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Isometry g = random_isometry(rng);
      const Bisector gb = apply_bisector(g, b);
      const double tau = rng.uniform(-2.0, 2.0);
      const BallPoint sp = spine_point(b, tau);
      // fiber points over the spine stay on the wall
      const ComplexLine fiber = carrier_fiber(m, sp);
      const LineFrame ff = line_frame(fiber);
      const BallPoint wall_pt = line_point(ff, rng.disc(0.9));
      transport_err = std::max(
          transport_err, std::abs(bisector_membership(gb, apply_point(g, wall_pt)).signed_distance));
    }
    out.bound("bisector_transport", "g maps wall points to wall points of the moved wall",
              transport_err, 1e-8);
  }

  // Projection radius of a wall into an orthogonal line.
  {
    const double d = 1.0;
    const double x = std::tanh(0.5 * d);
    const ComplexLine l = ComplexLine::from_polar({{1.0 / x, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    const ComplexLine m = ComplexLine::from_polar({{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
    // spine through the origin, perpendicular to the real axis of m
    const Bisector b = Bisector::from_spine(m, BoundaryPoint{{0.0, -1.0}, {0.0, 0.0}},
                                            BoundaryPoint{{0.0, 1.0}, {0.0, 0.0}});
    const double radius = bisector_projection_radius(b, l);
    out.bound("bisector_projection_radius", "the wall projects into L as a disc of radius s(d)",
              std::abs(radius - s_function(d)), 1e-9);

    const BallPoint foot = line_intersection_point(l, m);
    double sup = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double tau = 0.12 * (i - 50); // grid through the closest point
      const BallPoint sp = spine_point(b, tau);
      const ComplexLine fiber = carrier_fiber(m, sp);
      const LineFrame ff = line_frame(fiber);
      for (int j = 0; j < 100; ++j) {
        const Complex dir = std::polar(1.0, 2.0 * kPi * j / 100.0);
        const BallPoint img = project_lift(l, ff.center + dir * ff.tangent);
        sup = std::max(sup, bergman_distance(foot, img));
      }
    }
    out.bound("bisector_projection_radius_sampled",
              "sampled wall points project within s(d) of the foot and reach it",
              std::abs(sup - radius), 1e-3);
  }

  // Minimum holonomy over the small-displacement stabilizer set.
  {
    const double d = 1.2;
    const double x = std::tanh(0.5 * d);
    const ComplexLine l1 = genus2.line();
    const ComplexLine l2 = ComplexLine::from_polar({{1.0 / x, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    const double s = s_function(d);
    // Far generator: displacement beyond s(d) keeps the set empty.
    const CFuchsianGroup far = CFuchsianGroup::create(
        l1, {normalized_loxodromic(Complex{0.0, std::tanh(0.5 * (s + 1.0))}, 0.4)});
    const auto none = stabilizer_min_holonomy(far, l2, 3);
    // Near generator with twist 1.0 lands in the set.
    const CFuchsianGroup close = CFuchsianGroup::create(
        l1, {normalized_loxodromic(Complex{std::tanh(0.25 * s), 0.0}, 1.0)});
    const auto one = stabilizer_min_holonomy(close, l2, 1);
    bool ok = !none.has_value() && one.has_value() && std::abs(*one - 1.0) < 1e-12;
    // Admissible constructed sets obey the holonomy angle bound.
    for (int k = 0; k < 50 && ok; ++k) {
      const double psi = rng.uniform(1.2, kPi);
      const double l = rng.uniform(0.05, 0.9) * s;
      const CFuchsianGroup g = CFuchsianGroup::create(
          l1, {normalized_loxodromic(std::polar(std::tanh(0.5 * l), rng.uniform(-kPi, kPi)), psi)});
      const auto got = stabilizer_min_holonomy(g, l2, 1);
      if (!got) continue;
      const double n_val =
          n_invariant(l2, apply_line(g.generators()[0], l2));
      if (n_val >= 1.0 / (1.0 - x * x)) { // rho(L2, gamma L2) >= d
        if (std::cos(*got) > holonomy_cos_bound(d) + 1e-9) ok = false;
      }
    }
    out.flag("stabilizer_min_holonomy",
             "empty set when displacements exceed s(d); admissible minima obey the angle bound",
             ok);
  }
  return out.finish();
}

} // namespace

std::vector<std::string> suite_names() {
  return {"metric", "projection", "holonomy", "volume", "tubes", "groups"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, unsigned threads) {
  if (name == "metric") return suite_metric(seed);
  if (name == "projection") return suite_projection(seed);
  if (name == "holonomy") return suite_holonomy(seed);
  if (name == "volume") return suite_volume(seed, threads);
  if (name == "tubes") return suite_tubes(seed);
  if (name == "groups") return suite_groups(seed);
  throw ConfigError("unknown suite: " + name);
}

std::vector<SuiteResult> run_all(std::uint64_t seed, unsigned threads) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, seed, threads));
  return out;
}

} // namespace cxhyp::verify
