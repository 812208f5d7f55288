#include "cxhyp/groups.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "cxhyp/errors.hpp"
#include "cxhyp/normal_form.hpp"
#include "cxhyp/sampling.hpp"
#include "cxhyp/tolerances.hpp"

namespace cxhyp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Visits every freely reduced nonempty word of length <= depth over the given
// letter maps (letter i inverse to letter i + half). `visit` returns false to
// stop the walk.
void walk_reduced_words(const std::vector<Isometry>& letters, int depth,
                        const std::function<bool(const Isometry&, int)>& visit) {
  const int n = static_cast<int>(letters.size());
  const int half = n / 2;
  struct Frame {
    Isometry value;
    int last;
    int len;
  };
  std::vector<Frame> stack;
  stack.reserve(64);
  for (int i = 0; i < n; ++i) stack.push_back({letters[i], i, 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (!visit(f.value, f.len)) return;
    if (f.len >= depth) continue;
    const int banned = (f.last + half) % n;
    for (int i = 0; i < n; ++i) {
      if (i == banned) continue;
      stack.push_back({f.value * letters[i], i, f.len + 1});
    }
  }
}

double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters) {
  const double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (x1 + x2);
}

struct OrthogeodesicData {
  ComplexLine perp;
  BallPoint p1, p2;
  double rho;
};

OrthogeodesicData orthogeodesic(const ComplexLine& l1, const ComplexLine& l2) {
  const auto cls = classify_pair(l1, l2);
  if (cls.kind != LinePairClass::Kind::Ultraparallel)
    throw NotUltraparallel("orthogeodesic: lines are not ultraparallel");
  const ComplexLine perp = common_perpendicular(l1, l2);
  return {perp, line_intersection_point(l1, perp), line_intersection_point(l2, perp), cls.value};
}

// Wall through the orthogeodesic point at distance t from L1, in the chart of
// normalize_pair: carrier {(z,0)}, spine perpendicular to the real axis.
Bisector wall_at(const Isometry& mover_inv, double t) {
  const double u = std::tanh(0.5 * t);
  const double beta = std::acos(2.0 * u / (1.0 + u * u)); // = acos(tanh t)
  const ComplexLine m_std =
      ComplexLine::from_polar({{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}});
  const BoundaryPoint a{std::polar(1.0, beta), {0.0, 0.0}};
  const BoundaryPoint b{std::polar(1.0, -beta), {0.0, 0.0}};
  return apply_bisector(mover_inv, Bisector::from_spine(m_std, a, b));
}

} // namespace

CFuchsianGroup CFuchsianGroup::create(const ComplexLine& line, std::vector<Isometry> generators) {
  for (const Isometry& g : generators) {
    if (!projectively_equal(apply_line(g, line).polar(), line.polar(), 1e3 * tol::alg))
      throw NotStabilizing("CFuchsianGroup: generator does not stabilize the line");
  }
  return CFuchsianGroup(line, std::move(generators));
}

std::vector<Isometry> CFuchsianGroup::letter_maps() const {
  std::vector<Isometry> maps = generators_;
  maps.reserve(2 * generators_.size());
  for (const Isometry& g : generators_) maps.push_back(g.inverse());
  return maps;
}

double regular_polygon_circumradius(int genus) {
  if (genus < 2) throw GenusTooSmall("regular polygon: genus must be >= 2");
  const double cotv = 1.0 / std::tan(kPi / (4.0 * genus));
  return std::acosh(cotv * cotv);
}

double regular_polygon_apothem(int genus) {
  if (genus < 2) throw GenusTooSmall("regular polygon: genus must be >= 2");
  return std::acosh(1.0 / std::tan(kPi / (4.0 * genus)));
}

CFuchsianGroup regular_polygon_group(int genus) {
  if (genus < 2) throw GenusTooSmall("regular_polygon_group: genus must be >= 2");
  const int n = 4 * genus;
  const double re = std::tanh(0.5 * regular_polygon_circumradius(genus));

  // Vertices of side j (counterclockwise): start at angle (2j-1) pi / n,
  // end at (2j+1) pi / n. The boundary word reads a1 b1 a1^-1 b1^-1 ... along
  // sides 0, 1, 2, 3, ...; the pairing of side 4t+2 onto side 4t (and 4t+3
  // onto 4t+1) matches start-to-end, which glues the directed edges.
  const auto vertex = [&](int j, int off) {
    return std::polar(re, (2.0 * j + off) * kPi / n);
  };
  std::vector<DiscIsometry> pair_a(genus), pair_b(genus);
  for (int t = 0; t < genus; ++t) {
    pair_a[t] = map_two_points(vertex(4 * t + 2, -1), vertex(4 * t + 2, +1),
                               vertex(4 * t, +1), vertex(4 * t, -1));
    pair_b[t] = map_two_points(vertex(4 * t + 3, -1), vertex(4 * t + 3, +1),
                               vertex(4 * t + 1, +1), vertex(4 * t + 1, -1));
  }

  // Vertex-cycle order: [B_g^-1, A_g] ... [B_1^-1, A_1] = 1. Relabeling
  // t -> g+1-t presents it as [a1,b1]...[ag,bg] = 1.
  const auto positive_trace = [](const DiscIsometry& d) {
    return d.a.real() >= 0.0 ? d : DiscIsometry{-d.a, -d.b};
  };
  std::vector<Isometry> gens;
  gens.reserve(2 * genus);
  for (int t = 1; t <= genus; ++t) {
    // Hyperbolic blocks embed with positive trace so the holonomy vanishes.
    gens.push_back(embed_in_line(positive_trace(pair_b[genus - t].inverse())));
    gens.push_back(embed_in_line(positive_trace(pair_a[genus - t])));
  }
  const ComplexLine l1 = ComplexLine::from_polar({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  return CFuchsianGroup::create(l1, std::move(gens));
}

double injectivity_radius(const CFuchsianGroup& g, const BallPoint& p, int depth) {
  const BallPoint foot = orthogonal_projection(g.line(), p);
  if (bergman_distance(p, foot) > tol::geo)
    throw PointOffLine("injectivity_radius: point is not on the invariant line");
  const std::vector<Isometry> letters = g.letter_maps();
  double min_disp = std::numeric_limits<double>::infinity();
  walk_reduced_words(letters, depth, [&](const Isometry& w, int) {
    if (is_projective_identity(w, 1e-9)) return true;
    const double d = bergman_distance(p, apply_point(w, p));
    if (d < min_disp) min_disp = d;
    return true;
  });
  return 0.5 * min_disp;
}

CombinationPrecondition combination_precondition(const CFuchsianGroup& g1,
                                                 const CFuchsianGroup& g2, int depth) {
  const OrthogeodesicData geo = orthogeodesic(g1.line(), g2.line());
  const double inj1 = injectivity_radius(g1, geo.p1, depth);
  const double inj2 = injectivity_radius(g2, geo.p2, depth);
  const double margin = geo.rho - s_function(inj1) - s_function(inj2);
  return {margin > 0.0, margin, geo.rho, inj1, inj2, geo.p1, geo.p2, depth};
}

Combination build_combination(const CFuchsianGroup& g1, const CFuchsianGroup& g2, int depth,
                              std::uint64_t samples, std::uint64_t seed, bool force) {
  const CombinationPrecondition pre = combination_precondition(g1, g2, depth);
  if (!pre.ok && !force)
    throw PreconditionFailed("build_combination: s(inj(p1)) + s(inj(p2)) >= rho(L1, L2)");

  const NormalizedPair np = normalize_pair(g1.line(), g2.line());
  const Isometry back = np.mover.inverse();
  const double d = pre.rho;
  const double t1 = s_function(pre.inj1);
  const double t2 = d - s_function(pre.inj2);
  const double tq = 0.5 * (t1 + t2);

  std::vector<Isometry> combined = g1.generators();
  combined.insert(combined.end(), g2.generators().begin(), g2.generators().end());
  Combination c{std::move(combined), wall_at(back, t1), wall_at(back, tq), wall_at(back, t2),
                {}};
  c.report.precondition_satisfied = pre.ok;
  c.report.margin = pre.margin;
  c.report.rho_l1_l2 = pre.rho;
  c.report.inj_p1 = pre.inj1;
  c.report.inj_p2 = pre.inj2;
  c.report.depth = depth;
  c.report.samples = samples;
  c.report.seed = seed;
  const auto counts = pingpong_check(g1, g2, c, samples, seed);
  c.report.pingpong_passed = counts.first;
  c.report.pingpong_total = counts.second;
  c.report.min_distance_over_words = verify_distance_realization(g1, g2, depth);
  return c;
}

std::pair<std::uint64_t, std::uint64_t> pingpong_check(const CFuchsianGroup& g1,
                                                       const CFuchsianGroup& g2,
                                                       const Combination& c,
                                                       std::uint64_t samples,
                                                       std::uint64_t seed) {
  const OrthogeodesicData geo = orthogeodesic(g1.line(), g2.line());
  const int side_v1 = bisector_membership(c.middle, geo.p1).side;
  const int side_v2 = bisector_membership(c.middle, geo.p2).side;
  const int side_u1 = bisector_membership(c.near_l1, geo.p1).side;
  const int side_u2 = bisector_membership(c.near_l2, geo.p2).side;

  const std::vector<Isometry> letters1 = g1.letter_maps();
  const std::vector<Isometry> letters2 = g2.letter_maps();

  RngStream rng(seed, 0x5050);
  std::uint64_t passed = 0, total = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const BallPoint p = random_ball_point(rng, 0.995);
    const auto side = bisector_membership(c.middle, p);
    if (side.on) continue;
    if (side.side == side_v2) {
      // Non-trivial elements of the L1 group must pull V2 into U1.
      for (const Isometry& g : letters1) {
        ++total;
        if (bisector_membership(c.near_l1, apply_point(g, p)).side == side_u1) ++passed;
      }
    } else if (side.side == side_v1) {
      for (const Isometry& g : letters2) {
        ++total;
        if (bisector_membership(c.near_l2, apply_point(g, p)).side == side_u2) ++passed;
      }
    }
  }
  return {passed, total};
}

double verify_distance_realization(const CFuchsianGroup& g1, const CFuchsianGroup& g2, int depth,
                                   std::uint64_t word_budget) {
  std::vector<Isometry> letters = g1.letter_maps();
  const std::vector<Isometry> letters2 = g2.letter_maps();
  // Interleave so that letter i and i + half stay inverse to each other.
  const std::size_t h1 = g1.generators().size(), h2 = g2.generators().size();
  std::vector<Isometry> all;
  all.reserve(2 * (h1 + h2));
  for (std::size_t i = 0; i < h1; ++i) all.push_back(letters[i]);
  for (std::size_t i = 0; i < h2; ++i) all.push_back(letters2[i]);
  for (std::size_t i = 0; i < h1; ++i) all.push_back(letters[h1 + i]);
  for (std::size_t i = 0; i < h2; ++i) all.push_back(letters2[h2 + i]);

  if (count_reduced_words(all.size(), static_cast<std::uint64_t>(depth)) > word_budget)
    throw DepthTooLarge("verify_distance_realization: word count exceeds the budget");

  const HVector n1 = g1.line().polar();
  const HVector n2 = g2.line().polar();
  // Walk the orbit of the unit polar vector itself rather than accumulating
  // word matrices: the vectors stay small exactly where the minimum lives, so
  // the pairing keeps full precision without renormalizing.
  const auto rho_to_vector = [&](const HVector& v) {
    const double denom = hermitian_form(v, v).real();
    const double num = std::norm(hermitian_form(v, n1));
    if (!(denom > 0.0) || num <= denom) return 0.0; // meet or asymptotic
    return 2.0 * std::asinh(std::sqrt(num / denom - 1.0));
  };

  double min_d = rho_to_vector(n2); // empty word
  const int letter_count = static_cast<int>(all.size());
  const int half = letter_count / 2;
  struct Frame {
    HVector v;
    int last;
    int len;
  };
  std::vector<Frame> stack;
  stack.reserve(256);
  for (int i = 0; i < letter_count; ++i) stack.push_back({all[i].matrix() * n2, i, 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const double d = rho_to_vector(f.v);
    if (d < min_d) min_d = d;
    if (f.len >= depth) continue;
    const int banned = (f.last + half) % letter_count;
    for (int i = 0; i < letter_count; ++i) {
      if (i == banned) continue;
      stack.push_back({all[i].matrix() * f.v, i, f.len + 1});
    }
  }
  return min_d;
}

SchottkyExample schottky_example(double translation_length, double axis_offset,
                                 std::uint64_t boundary_samples, std::uint64_t seed) {
  if (!(translation_length > 0.0) || !(axis_offset > 0.0))
    throw ParameterOutOfRange("schottky_example: lengths must be positive");

  const Isometry gamma1 = embed_in_perp(DiscIsometry::axis_translation(translation_length));
  const Isometry push = embed_in_perp(
      DiscIsometry::translate_to(Complex{0.0, std::tanh(0.5 * axis_offset)}));
  const Isometry gamma2_axis0 =
      embed_in_line(DiscIsometry::axis_translation(translation_length));
  const Isometry gamma2 = push * gamma2_axis0 * push.inverse();

  // Axis endpoints: gamma1 runs (-1,0) -> (1,0); gamma2's axis is the pushed
  // copy of (0,-1) -> (0,1).
  const BoundaryPoint rep1{{-1.0, 0.0}, {0.0, 0.0}};
  const BoundaryPoint att1{{1.0, 0.0}, {0.0, 0.0}};
  const BoundaryPoint rep2 = apply_boundary(push, BoundaryPoint{{0.0, 0.0}, {-1.0, 0.0}});
  const BoundaryPoint att2 = apply_boundary(push, BoundaryPoint{{0.0, 0.0}, {1.0, 0.0}});

  const auto chordal = [](const BoundaryPoint& a, const BoundaryPoint& b) {
    return std::sqrt(std::norm(a.z1 - b.z1) + std::norm(a.z2 - b.z2));
  };
  const double cap = 0.35;

  struct Rule {
    const Isometry* map;
    const BoundaryPoint* repel;
    const BoundaryPoint* attract;
  };
  const Isometry inv1 = gamma1.inverse(), inv2 = gamma2.inverse();
  const Rule rules[4] = {{&gamma1, &rep1, &att1},
                         {&inv1, &att1, &rep1},
                         {&gamma2, &rep2, &att2},
                         {&inv2, &att2, &rep2}};

  RngStream rng(seed, 0x5c07);
  for (std::uint64_t i = 0; i < boundary_samples; ++i) {
    double g[4];
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (double& v : g) {
        v = rng.gaussian();
        n2 += v * v;
      }
    } while (n2 == 0.0);
    const double inv = 1.0 / std::sqrt(n2);
    const BoundaryPoint p{{g[0] * inv, g[1] * inv}, {g[2] * inv, g[3] * inv}};
    for (const Rule& r : rules) {
      if (chordal(p, *r.repel) <= cap) continue; // inside the excluded cap
      const BoundaryPoint q = apply_boundary(*r.map, p);
      if (chordal(q, *r.attract) >= cap) {
        throw NeighborhoodConditionFailed(
            "schottky_example: sampled point (" + std::to_string(p.z1.real()) + "," +
            std::to_string(p.z1.imag()) + "," + std::to_string(p.z2.real()) + "," +
            std::to_string(p.z2.imag()) +
            ") escapes the attracting neighborhood; increase the translation length");
      }
    }
  }

  // Distance between the two axes, minimized jointly over both parameters.
  const auto axis1_point = [](double t) { return BallPoint{{std::tanh(0.5 * t), 0.0}, {0.0, 0.0}}; };
  const auto axis2_point = [&](double t) {
    return apply_point(push, BallPoint{{0.0, 0.0}, {std::tanh(0.5 * t), 0.0}});
  };
  double s = 0.0, u = 0.0;
  for (int round = 0; round < 60; ++round) {
    s = golden_min([&](double v) { return bergman_distance(axis1_point(v), axis2_point(u)); },
                   -20.0, 20.0, 90);
    u = golden_min([&](double v) { return bergman_distance(axis1_point(s), axis2_point(v)); },
                   -20.0, 20.0, 90);
  }
  const double gap = bergman_distance(axis1_point(s), axis2_point(u));
  return {gamma1, gamma2, gap, translation_length, axis_offset};
}

std::optional<double> stabilizer_min_holonomy(const CFuchsianGroup& g, const ComplexLine& l2,
                                              int depth) {
  const OrthogeodesicData geo = orthogeodesic(g.line(), l2);
  const double s = s_function(geo.rho);
  const std::vector<Isometry> letters = g.letter_maps();
  std::optional<double> best;
  walk_reduced_words(letters, depth, [&](const Isometry& w, int) {
    if (is_projective_identity(w, 1e-9)) return true;
    const double disp = bergman_distance(geo.p1, apply_point(w, geo.p1));
    // Two radius-s/2 discs overlap (tangency included) when the centers are
    // within s + tol::geo.
    if (disp < s + tol::geo) {
      const double psi = std::abs(holonomy_of(w, g.line()));
      if (!best || psi < *best) best = psi;
    }
    return true;
  });
  return best;
}

} // namespace cxhyp
