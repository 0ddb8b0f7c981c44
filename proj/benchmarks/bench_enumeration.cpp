#include <benchmark/benchmark.h>

#include "liespec/lattice.hpp"
#include "liespec/symspec.hpp"

using namespace liespec;

static void BM_EnumerateE8(benchmark::State& state) {
  auto rs = rootsys::build_root_system(rootsys::Label::E8, 8);
  auto lat = lattice::coroot_lattice(rs);
  RatMat eye;
  for (int i = 0; i < 8; ++i) eye.push_back(unit(8, i));
  auto q = lattice::restrict_form(lat, eye);
  Q bound(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) {
    lattice::Enumerator en(q, bound);
    n = 0;
    en.run([&](const std::vector<std::int64_t>&, std::int64_t) { ++n; });
    benchmark::DoNotOptimize(n);
  }
  state.counters["vectors"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateE8)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SpectrumSp3(benchmark::State& state) {
  symspec::SymmetricSpaceSpec sp;
  sp.factors.push_back(symspec::group_factor(rootsys::Label::C, 3));
  auto mt = symspec::MetricSpec::standard(sp);
  for (auto _ : state) benchmark::DoNotOptimize(symspec::enumerate_spectrum(sp, mt, Q(state.range(0))).size());
}
BENCHMARK(BM_SpectrumSp3)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
