#include <benchmark/benchmark.h>

#include "liespec/rootsys.hpp"

using namespace liespec::rootsys;

static void BM_BuildE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(Label::E8, 8).roots.size());
}
BENCHMARK(BM_BuildE8)->Unit(benchmark::kMillisecond);

static void BM_BuildAn(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_root_system(Label::A, static_cast<int>(state.range(0))).roots.size());
}
BENCHMARK(BM_BuildAn)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_DominantE7(benchmark::State& state) {
  auto rs = build_root_system(Label::E7, 7);
  liespec::RatVec v = liespec::zeros(8);
  for (int i = 0; i < 6; ++i) v[i] = (i % 2 ? -1 : 1) * (i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(dominant_representative(rs, v));
}
BENCHMARK(BM_DominantE7);

static void BM_CenterD8(benchmark::State& state) {
  auto rs = build_root_system(Label::D, 8);
  for (auto _ : state) benchmark::DoNotOptimize(center_structure(rs).group.order());
}
BENCHMARK(BM_CenterD8);
