// Microbenchmarks for the expensive pipeline stages. Inputs are the linear
// quivers and the three-subspace quiver; sizes are small because the library
// targets representation-finite algebras only.

#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "tiltlab/quiver.hpp"
#include "tiltlab/tilting.hpp"
#include "tiltlab/translate.hpp"
#include "tiltlab/transport.hpp"

namespace {

tiltlab::Quiver linear_quiver(int n) {
  std::ostringstream os;
  os << "vertices " << n << "\n";
  for (int i = 1; i < n; ++i) os << "arrow a" << i << " " << i << " " << (i + 1) << "\n";
  return tiltlab::parse_quiver(os.str());
}

tiltlab::Quiver subspace_quiver() {
  return tiltlab::parse_quiver(
      "vertices 4\n"
      "arrow a 1 4\n"
      "arrow b 2 4\n"
      "arrow c 3 4\n");
}

void bm_knit(benchmark::State& state) {
  tiltlab::Quiver q = linear_quiver(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tiltlab::knit_indecomposables(q));
}

void bm_ind_table(benchmark::State& state) {
  tiltlab::Quiver q = linear_quiver(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tiltlab::build_ind_table(q));
}

void bm_enumerate_tilting(benchmark::State& state) {
  tiltlab::IndTable tbl = tiltlab::build_ind_table(linear_quiver(int(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(tiltlab::enumerate_tilting(tbl));
}

void bm_hasse(benchmark::State& state) {
  tiltlab::IndTable tbl = tiltlab::build_ind_table(linear_quiver(int(state.range(0))));
  std::vector<tiltlab::ModuleSet> tilts = tiltlab::enumerate_tilting(tbl);
  for (auto _ : state) benchmark::DoNotOptimize(tiltlab::hasse(tbl, tilts));
}

void bm_b_hasse(benchmark::State& state) {
  tiltlab::IndTable tbl = tiltlab::build_ind_table(linear_quiver(int(state.range(0))));
  tiltlab::BBTiltData d = tiltlab::make_bb_tilt(tbl, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tiltlab::b_hasse(d));
}

void bm_transport(benchmark::State& state) {
  tiltlab::IndTable tbl = tiltlab::build_ind_table(linear_quiver(int(state.range(0))));
  tiltlab::BBTiltData d = tiltlab::make_bb_tilt(tbl, 2);
  tiltlab::TiltingQuiver k = tiltlab::hasse(tbl, tiltlab::enumerate_tilting(tbl));
  for (auto _ : state) benchmark::DoNotOptimize(tiltlab::transport_construct(d, k));
}

void bm_subspace_pipeline(benchmark::State& state) {
  tiltlab::Quiver q = subspace_quiver();
  for (auto _ : state) {
    tiltlab::IndTable tbl = tiltlab::build_ind_table(q);
    tiltlab::BBTiltData d = tiltlab::make_bb_tilt(tbl, 4);
    benchmark::DoNotOptimize(tiltlab::b_hasse(d));
  }
}

BENCHMARK(bm_knit)->Arg(4)->Arg(5);
BENCHMARK(bm_ind_table)->Arg(4)->Arg(5);
BENCHMARK(bm_enumerate_tilting)->Arg(4)->Arg(5);
BENCHMARK(bm_hasse)->Arg(4)->Arg(5);
BENCHMARK(bm_b_hasse)->Arg(4)->Arg(5);
BENCHMARK(bm_transport)->Arg(4)->Arg(5);
BENCHMARK(bm_subspace_pipeline);

}  // namespace

BENCHMARK_MAIN();
