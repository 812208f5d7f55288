#include <benchmark/benchmark.h>

#include "cxhyp/groups.hpp"
#include "cxhyp/measure.hpp"
#include "cxhyp/normal_form.hpp"
#include "cxhyp/sampling.hpp"

using namespace cxhyp;

namespace {

void BM_BergmanDistance(benchmark::State& state) {
  RngStream rng(1);
  const BallPoint p = random_ball_point(rng);
  const BallPoint q = random_ball_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(bergman_distance(p, q));
}
BENCHMARK(BM_BergmanDistance);

void BM_Compose(benchmark::State& state) {
  RngStream rng(2);
  const Isometry a = random_isometry(rng);
  const Isometry b = random_isometry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Compose);

void BM_ApplyLine(benchmark::State& state) {
  RngStream rng(3);
  const Isometry g = random_isometry(rng);
  const LinePair pair = random_ultraparallel_pair(rng, 0.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(apply_line(g, pair.l1));
}
BENCHMARK(BM_ApplyLine);

void BM_NormalizePair(benchmark::State& state) {
  RngStream rng(4);
  const LinePair pair = random_ultraparallel_pair(rng, 0.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(normalize_pair(pair.l1, pair.l2));
}
BENCHMARK(BM_NormalizePair);

void BM_McWedgeVolume(benchmark::State& state) {
  const WedgeParams w(1.0, 1.0, 3.14159265358979);
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_wedge_volume(w, state.range(0), 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McWedgeVolume)->Arg(1 << 14)->Arg(1 << 17);

void BM_BisectorMembership(benchmark::State& state) {
  const ComplexLine m = ComplexLine::from_polar({{0, 0}, {1, 0}, {0, 0}});
  const Bisector wall = Bisector::from_spine(m, BoundaryPoint{{0, -1}, {0, 0}},
                                             BoundaryPoint{{0, 1}, {0, 0}});
  RngStream rng(5);
  const BallPoint p = random_ball_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(bisector_membership(wall, p));
}
BENCHMARK(BM_BisectorMembership);

void BM_InjectivityRadius(benchmark::State& state) {
  const CFuchsianGroup grp = regular_polygon_group(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(injectivity_radius(grp, BallPoint{}, state.range(0)));
}
BENCHMARK(BM_InjectivityRadius)->Arg(2)->Arg(3);

void BM_DistanceRealization(benchmark::State& state) {
  const CFuchsianGroup g1 = regular_polygon_group(2);
  const Isometry f = axis_translation(std::tanh(0.5 * 4.2));
  std::vector<Isometry> gens;
  for (const Isometry& g : g1.generators()) gens.push_back(f * g * f.inverse());
  const CFuchsianGroup g2 = CFuchsianGroup::create(apply_line(f, g1.line()), gens);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_distance_realization(g1, g2, state.range(0)));
}
BENCHMARK(BM_DistanceRealization)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
