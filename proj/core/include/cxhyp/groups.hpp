#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cxhyp/bisector.hpp"
#include "cxhyp/isometry.hpp"
#include "cxhyp/words.hpp"

namespace cxhyp {

// A complex line together with generators stabilizing it. The word machinery
// treats the list as primary generators; letters range over them and their
// inverses.
class CFuchsianGroup {
 public:
  static CFuchsianGroup create(const ComplexLine& line, std::vector<Isometry> generators);

  const ComplexLine& line() const { return line_; }
  const std::vector<Isometry>& generators() const { return generators_; }

  // Generator maps and their inverses, indexed so that letter i and
  // letter i + generators().size() are mutually inverse.
  std::vector<Isometry> letter_maps() const;

 private:
  CFuchsianGroup(const ComplexLine& line, std::vector<Isometry> gens)
      : line_(line), generators_(std::move(gens)) {}
  ComplexLine line_;
  std::vector<Isometry> generators_;
};

// Genus-g surface group acting on {(0,w)}: side pairings of the regular
// 4g-gon with vertex angle 2 pi / 4g centered at the origin, embedded with
// trivial holonomy. Generators come in the order a1, b1, ..., ag, bg with
// [a1,b1]...[ag,bg] = 1.
CFuchsianGroup regular_polygon_group(int genus);

// Circumradius / apothem of that polygon.
double regular_polygon_circumradius(int genus);
double regular_polygon_apothem(int genus);

// Depth-limited upper bound on the injectivity radius at p (half the minimal
// displacement over freely reduced nonempty words of length <= depth).
double injectivity_radius(const CFuchsianGroup& g, const BallPoint& p, int depth);

struct CombinationPrecondition {
  bool ok;
  double margin;       // rho(L1, L2) - s(inj(p1)) - s(inj(p2))
  double rho;          // rho(L1, L2)
  double inj1, inj2;   // depth-limited estimates at the orthogeodesic feet
  BallPoint p1, p2;    // orthogeodesic feet on L1, L2
  int depth;
};

CombinationPrecondition combination_precondition(const CFuchsianGroup& g1,
                                                 const CFuchsianGroup& g2, int depth);

struct DiscretenessReport {
  bool precondition_satisfied = false;
  double margin = 0.0;
  double rho_l1_l2 = 0.0;
  double inj_p1 = 0.0, inj_p2 = 0.0;
  std::uint64_t pingpong_passed = 0, pingpong_total = 0;
  double min_distance_over_words = 0.0;
  int depth = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct Combination {
  std::vector<Isometry> combined_generators; // G1's generators followed by G2's
  Bisector near_l1; // wall at distance s(inj(p1)) from L1
  Bisector middle;  // wall at the midpoint of the admissible interval
  Bisector near_l2; // wall at distance s(inj(p2)) from L2
  DiscretenessReport report;
};

// Builds the three walls along the orthogeodesic and runs both certificates.
// Throws PreconditionFailed when the margin is not positive, unless `force`
// is set (diagnostic runs on violated configurations).
Combination build_combination(const CFuchsianGroup& g1, const CFuchsianGroup& g2, int depth,
                              std::uint64_t samples, std::uint64_t seed, bool force = false);

// Sampled wall check: points on L2's side of the middle wall must be carried
// by every G1 letter to L1's side of the near-L1 wall, and symmetrically.
std::pair<std::uint64_t, std::uint64_t> pingpong_check(const CFuchsianGroup& g1,
                                                       const CFuchsianGroup& g2,
                                                       const Combination& c,
                                                       std::uint64_t samples,
                                                       std::uint64_t seed);

// Minimum of rho(L1, w(L2)) over reduced free-product words of length <= depth
// (including the empty word). Throws DepthTooLarge past the word budget.
double verify_distance_realization(const CFuchsianGroup& g1, const CFuchsianGroup& g2, int depth,
                                   std::uint64_t word_budget = 1000000);

struct SchottkyExample {
  Isometry gamma1, gamma2;
  double geodesic_gap;
  double translation_length;
  double axis_offset;
};

// Two loxodromics on intersecting real geodesics, the second axis pushed off
// by `axis_offset`; checks the sampled ping-pong neighborhood condition and
// returns the distance between the two axes.
SchottkyExample schottky_example(double translation_length, double axis_offset,
                                 std::uint64_t boundary_samples = 2000, std::uint64_t seed = 1);

// Minimum |holonomy| over words of length <= depth whose translate of the
// half-projection disc around the orthogeodesic foot meets the disc; empty
// set reported as nullopt.
std::optional<double> stabilizer_min_holonomy(const CFuchsianGroup& g, const ComplexLine& l2,
                                              int depth);

} // namespace cxhyp
