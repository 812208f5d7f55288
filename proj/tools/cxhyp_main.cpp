// Command-line surface of the toolkit. Every command prints one Report
// (json, csv, or text) and exits with: 0 success, 2 usage error,
// 3 precondition/certificate failure, 4 numeric failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cxhyp/config.hpp"
#include "cxhyp/errors.hpp"
#include "cxhyp/groups.hpp"
#include "cxhyp/measure.hpp"
#include "cxhyp/report.hpp"
#include "cxhyp/tubes.hpp"
#include "cxhyp/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCertificate = 3;
constexpr int kExitNumeric = 4;

struct GlobalOpts {
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  unsigned threads = 1;
};

std::uint64_t default_seed(const GlobalOpts& g) {
  if (g.seed_set) return g.seed;
  if (const char* env = std::getenv("CXHYP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw cxhyp::ConfigError("CXHYP_SEED is not an unsigned integer");
    }
  }
  return 0;
}

int emit(const cxhyp::Report& report, const GlobalOpts& g) {
  const std::string text = report.render(cxhyp::parse_report_format(g.format));
  if (g.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out_path);
    if (!out) throw cxhyp::ConfigError("cannot open output file: " + g.out_path);
    out << text;
  }
  return kExitOk;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

int cmd_tube_width(const GlobalOpts& g, std::optional<long long> chi,
                   std::optional<double> area) {
  Stopwatch timer;
  cxhyp::Report report("tube-width");
  report.seed(default_seed(g));
  const cxhyp::SurfaceData surface =
      chi ? cxhyp::SurfaceData::from_chi(*chi) : cxhyp::SurfaceData::from_area(*area);
  if (chi) report.input("chi", std::int64_t(*chi));
  if (area) report.input("area", *area);
  report.output("area", surface.area());
  report.output("collar_width", cxhyp::collar_width_area(surface.area()));
  report.output("two_surface_width",
                cxhyp::two_surface_width_area(surface.area(), surface.area()));
  if (surface.has_chi()) {
    report.output("collar_width_chi_form", cxhyp::collar_width_chi(surface.chi()));
    report.provenance("c(|chi|) = (1/4) log(1/(pi |chi|) + 1)");
  }
  report.provenance("c(A) = (1/4) log(2/A + 1)");
  report.provenance("two-surface width = (1/8) log(2/max(A1,A2) + 1)");
  report.provenance("A = 2 pi |chi| (Gauss-Bonnet, curvature -1)");
  report.wall_clock_seconds(timer.seconds());
  return emit(report, g);
}

int cmd_volume_bound(const GlobalOpts& g, long long n, long long chi) {
  Stopwatch timer;
  cxhyp::Report report("volume-bound");
  report.seed(default_seed(g));
  report.input("n", std::int64_t(n));
  report.input("chi", std::int64_t(chi));
  report.output("volume_lower_bound", cxhyp::volume_lower_bound(n, chi));
  report.output("area", cxhyp::gauss_bonnet_area(chi));
  report.provenance(
      "vol(X) >= 4 pi^2 n |chi| [cosh^4((1/16) log(1/(pi |chi|) + 1)) - 1]");
  report.wall_clock_seconds(timer.seconds());
  return emit(report, g);
}

int cmd_eigenvalue_bound(const GlobalOpts& g, double vol, long long chi) {
  Stopwatch timer;
  cxhyp::Report report("eigenvalue-bound");
  report.seed(default_seed(g));
  report.input("volume", vol);
  report.input("chi", std::int64_t(chi));
  const double c = cxhyp::collar_width_chi(chi);
  const double vol_n = cxhyp::tube_volume(cxhyp::gauss_bonnet_area(chi), c);
  report.output("eigenvalue_upper_bound", cxhyp::eigenvalue_bound_explicit(vol, chi));
  report.output("collar_width", c);
  report.output("tube_volume", vol_n);
  report.provenance("lambda(X) <= vol(N) / (c^2 [vol(X) - vol(N)])");
  report.provenance("vol(N) = 2 pi [cosh^4(c/2) - 1] * 2 pi |chi|");
  report.wall_clock_seconds(timer.seconds());
  return emit(report, g);
}

int cmd_tube_bounds(const GlobalOpts& g, long long chi) {
  Stopwatch timer;
  cxhyp::Report report("tube-bounds");
  report.seed(default_seed(g));
  report.input("chi", std::int64_t(chi));
  const auto [lower, upper] = cxhyp::tube_function_bounds(chi);
  report.output("lower", lower);
  report.output("upper", upper);
  report.provenance("(1/4) log(1/(pi |chi|) + 1) <= d_chi");
  report.provenance("d_chi <= s(arccosh(cot((pi/2)/(|chi| + 2))))");
  report.provenance("s(x) = 2 arcsinh(1/sinh(x/2))");
  report.wall_clock_seconds(timer.seconds());
  return emit(report, g);
}

int cmd_wedge_volume(const GlobalOpts& g, double s, double eps, double psi,
                     std::optional<std::uint64_t> mc_samples) {
  Stopwatch timer;
  cxhyp::Report report("wedge-volume");
  const cxhyp::WedgeParams w(s, eps, psi);
  report.seed(default_seed(g));
  report.input("anchor_radius", s);
  report.input("width", eps);
  report.input("angle", psi);
  report.output("wedge_volume", cxhyp::wedge_volume(w));
  report.provenance("vol(W(s, eps, psi)) = psi [cosh^4(eps/2) - 1] * 4 pi sinh^2(s/2)");
  if (mc_samples) {
    const cxhyp::McEstimate mc = cxhyp::mc_wedge_volume(w, *mc_samples, default_seed(g), g.threads);
    report.input("mc_samples", std::uint64_t(*mc_samples));
    report.output("mc_estimate", mc.estimate);
    report.output("mc_std_error", mc.std_error);
    report.provenance("dvol = 16 r / (1 - r^2 - |z2|^2)^3 dr dtheta dx2 dy2");
  }
  report.wall_clock_seconds(timer.seconds());
  return emit(report, g);
}

int cmd_combine(const GlobalOpts& g, const std::string& config_path, int depth,
                std::uint64_t samples) {
  Stopwatch timer;
  cxhyp::Report report("combine");
  const std::uint64_t seed = default_seed(g);
  report.seed(seed);
  report.input("config", config_path);
  report.input("depth", std::int64_t(depth));
  report.input("samples", std::uint64_t(samples));

  const cxhyp::Config cfg = cxhyp::parse_config_file(config_path);
  const cxhyp::CombineSetup setup = cxhyp::build_combine_setup(cfg);
  report.input("distance", setup.distance);
  report.input("rotation", setup.rotation);

  bool precondition_ok = true;
  try {
    cxhyp::build_combination(setup.group1, setup.group2, depth, 1, seed);
  } catch (const cxhyp::PreconditionFailed&) {
    precondition_ok = false;
  }
  // Forced run: on violated configurations the certificates report failures
  // instead of refusing to produce a report.
  const cxhyp::Combination comb =
      cxhyp::build_combination(setup.group1, setup.group2, depth, samples, seed, true);
  const cxhyp::DiscretenessReport& r = comb.report;
  report.output("precondition_satisfied", r.precondition_satisfied);
  report.output("margin", r.margin);
  report.output("rho_l1_l2", r.rho_l1_l2);
  report.output("inj_p1", r.inj_p1);
  report.output("inj_p2", r.inj_p2);
  report.output("injectivity_note",
                std::string("depth-limited upper bounds at word length <= ") +
                    std::to_string(depth));
  report.output("pingpong_passed", r.pingpong_passed);
  report.output("pingpong_total", r.pingpong_total);
  report.output("min_distance_over_words", r.min_distance_over_words);
  report.output("distance_realized",
                std::abs(r.min_distance_over_words - r.rho_l1_l2) <= 1e-9);
  report.provenance("discreteness precondition: s(inj(p1)) + s(inj(p2)) < rho(L1, L2)");
  report.provenance("walls: fibers of the perpendicular-line projection over spine geodesics");
  report.provenance("distance realization: rho(L1, L2) <= rho(L1, w L2) for every word w");
  report.wall_clock_seconds(timer.seconds());
  const int rc = emit(report, g);
  if (rc != kExitOk) return rc;
  const bool certified = precondition_ok && r.pingpong_passed == r.pingpong_total &&
                         std::abs(r.min_distance_over_words - r.rho_l1_l2) <= 1e-9;
  return certified ? kExitOk : kExitCertificate;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
  Stopwatch timer;
  cxhyp::Report report("verify");
  const std::uint64_t seed = default_seed(g);
  report.seed(seed);
  report.input("suite", suite);

  std::vector<cxhyp::verify::SuiteResult> results;
  if (suite == "all") {
    results = cxhyp::verify::run_all(seed, g.threads);
  } else {
    results.push_back(cxhyp::verify::run_suite(suite, seed, g.threads));
  }
  bool all_pass = true;
  std::uint64_t checks = 0, failures = 0;
  for (const auto& sr : results) {
    all_pass = all_pass && sr.all_pass;
    for (const auto& c : sr.checks) {
      ++checks;
      if (!c.pass) ++failures;
      const std::string key = sr.suite + "." + c.id;
      report.output(key, std::string(c.pass ? "pass" : "FAIL") +
                             (c.note.empty() ? "" : " (" + c.note + ")"));
      report.provenance(c.formula);
    }
  }
  report.output("checks_run", checks);
  report.output("checks_failed", failures);
  report.output("all_pass", all_pass);
  report.wall_clock_seconds(timer.seconds());
  const int rc = emit(report, g);
  if (rc != kExitOk) return rc;
  return all_pass ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational toolkit for the ball model of complex hyperbolic 2-space"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format: json, csv, text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out_path, "write the report to a file instead of stdout");
  app.add_option("--seed", g.seed, "seed for sampled checks (overrides CXHYP_SEED)")
      ->each([&g](const std::string&) { g.seed_set = true; });
  app.add_option("--threads", g.threads, "worker threads for Monte Carlo shards")
      ->check(CLI::Range(1u, 64u));

  auto* tube_width = app.add_subcommand("tube-width", "collar and two-surface widths");
  tube_width->fallthrough();
  std::optional<long long> tw_chi;
  std::optional<double> tw_area;
  tube_width->add_option("--chi", tw_chi, "Euler characteristic (negative integer)");
  tube_width->add_option("--area", tw_area, "hyperbolic area (positive)");

  auto* volume_bound = app.add_subcommand("volume-bound", "volume lower bound");
  volume_bound->fallthrough();
  long long vb_n = 1, vb_chi = 0;
  volume_bound->add_option("--n", vb_n, "number of pairwise disjoint surfaces")->required();
  volume_bound->add_option("--chi", vb_chi, "largest |Euler characteristic|")->required();

  auto* eig = app.add_subcommand("eigenvalue-bound", "first-eigenvalue upper bound");
  eig->fallthrough();
  double eig_vol = 0.0;
  long long eig_chi = 0;
  eig->add_option("--volume", eig_vol, "volume of the closed manifold")->required();
  eig->add_option("--chi", eig_chi, "Euler characteristic of the surface")->required();

  auto* tb = app.add_subcommand("tube-bounds", "bounds on the optimal tube width");
  tb->fallthrough();
  long long tb_chi = 0;
  tb->add_option("--chi", tb_chi, "even Euler characteristic <= -2")->required();

  auto* wv = app.add_subcommand("wedge-volume", "closed-form and Monte Carlo wedge volume");
  wv->fallthrough();
  double wv_s = 0.0, wv_eps = 0.0, wv_psi = 0.0;
  std::optional<std::uint64_t> wv_mc;
  wv->add_option("--anchor-radius", wv_s, "anchor disc radius s")->required();
  wv->add_option("--width", wv_eps, "wedge width eps")->required();
  wv->add_option("--angle", wv_psi, "sector angle psi in (0, 2 pi]")->required();
  wv->add_option("--mc", wv_mc, "also run Monte Carlo with this many samples");

  auto* combine = app.add_subcommand("combine", "combination certificates for two groups");
  combine->fallthrough();
  std::string combine_config;
  int combine_depth = 4;
  std::uint64_t combine_samples = 10000;
  combine->add_option("--config", combine_config, "group configuration file")->required();
  combine->add_option("--depth", combine_depth, "word depth for the certificates");
  combine->add_option("--samples", combine_samples, "ping-pong sample count");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->fallthrough();
  std::string verify_suite;
  verify
      ->add_option("--suite", verify_suite,
                   "metric, projection, holonomy, volume, tubes, groups, or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (tube_width->parsed()) {
      if (tw_chi.has_value() == tw_area.has_value())
        throw cxhyp::ConfigError("tube-width needs exactly one of --chi or --area");
      if (tw_chi && *tw_chi >= 0) throw cxhyp::ConfigError("--chi must be a negative integer");
      if (tw_area && *tw_area <= 0.0) throw cxhyp::ConfigError("--area must be positive");
      return cmd_tube_width(g, tw_chi, tw_area);
    }
    if (volume_bound->parsed()) {
      if (vb_n < 1) throw cxhyp::ConfigError("--n must be at least 1");
      if (vb_chi >= 0) throw cxhyp::ConfigError("--chi must be a negative integer");
      return cmd_volume_bound(g, vb_n, vb_chi);
    }
    if (eig->parsed()) {
      if (eig_chi >= 0) throw cxhyp::ConfigError("--chi must be a negative integer");
      if (eig_vol <= 0.0) throw cxhyp::ConfigError("--volume must be positive");
      return cmd_eigenvalue_bound(g, eig_vol, eig_chi);
    }
    if (tb->parsed()) {
      if (tb_chi > -2 || tb_chi % 2 != 0)
        throw cxhyp::ConfigError("--chi must be an even integer <= -2");
      return cmd_tube_bounds(g, tb_chi);
    }
    if (wv->parsed()) return cmd_wedge_volume(g, wv_s, wv_eps, wv_psi, wv_mc);
    if (combine->parsed()) return cmd_combine(g, combine_config, combine_depth, combine_samples);
    if (verify->parsed()) {
      const auto names = cxhyp::verify::suite_names();
      if (verify_suite != "all" &&
          std::find(names.begin(), names.end(), verify_suite) == names.end())
        throw cxhyp::ConfigError("unknown suite: " + verify_suite);
      return cmd_verify(g, verify_suite);
    }
  } catch (const cxhyp::PreconditionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const cxhyp::TubeExceedsManifold& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const cxhyp::NeighborhoodConditionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const cxhyp::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cxhyp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
