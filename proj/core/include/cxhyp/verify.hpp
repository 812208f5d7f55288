#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cxhyp::verify {

struct Check {
  std::string id;
  std::string formula; // the identity or bound under test, as plain text
  bool pass = false;
  double observed = 0.0;  // worst error / margin seen
  double threshold = 0.0; // tolerance it was compared against
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  bool all_pass = false;
  std::vector<Check> checks;
};

// Available suites: metric, projection, holonomy, volume, tubes, groups.
std::vector<std::string> suite_names();

// Runs one suite at full acceptance sizes. Throws ConfigError for unknown
// names. Deterministic given (name, seed); `threads` only parallelizes the
// Monte Carlo shards and never changes results.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, unsigned threads = 1);

std::vector<SuiteResult> run_all(std::uint64_t seed, unsigned threads = 1);

// Frozen reference values produced by the golden-oracle tool
// (tests/data/golden_values.txt carries the full 33-digit output).
namespace golden {
inline constexpr double collar_width_chi_m2 = 3.692281057514334689e-02;
inline constexpr double volume_lower_bound_1_m2 = 1.345612729772170093e-02;
inline constexpr double eigenvalue_bound_100_m2 = 3.951090306046779303e-01;
inline constexpr double tube_bounds_lower_m2 = 3.692281057514334689e-02;
inline constexpr double tube_bounds_upper_m2 = 2.018090635334606782e+00;
inline constexpr double collar_width_area_2 = 1.732867951399863274e-01;
inline constexpr double two_surface_width_2_2 = 8.664339756999316368e-02;
inline constexpr double s_of_1 = 2.813658227494590506e+00;
inline constexpr double s_fixed_point = 1.762747174039086050e+00;
inline constexpr double tube_volume_area1_eps1 = 3.875561555363880789e+00;
inline constexpr double polygon_apothem_g2 = 1.528570919480998161e+00;
} // namespace golden

} // namespace cxhyp::verify
