#include <benchmark/benchmark.h>

#include "liespec/oracle.hpp"

using namespace liespec;

static void BM_EulerFlow(benchmark::State& state) {
  auto g = SO3Metric::make(Surd(1), Surd(Q(1, 2)));
  oracle::FlowState s;
  s.body_velocity = oracle::type3_data(g, {1, 2}).velocity();
  double L = type3_length(g, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::euler_flow(g, s, L).attitude(0, 0));
}
BENCHMARK(BM_EulerFlow)->Unit(benchmark::kMillisecond);

static void BM_Monodromy(benchmark::State& state) {
  auto g = SO3Metric::make(Surd(1), Surd(Q(2, 3)));
  FixComponent c;
  c.type = GeodesicType::TypeII;
  c.dim = 3;
  auto v = oracle::representative(g, c).velocity();
  double tau = length_from_coeff(Surd(6));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::monodromy_fixed_dim(g, v, tau).fixed_dim);
}
BENCHMARK(BM_Monodromy)->Unit(benchmark::kMillisecond);

static void BM_ConjugateScan(benchmark::State& state) {
  auto g = SO3Metric::make(Surd(1), Surd(Q(1, 2)));
  auto v = oracle::type3_data(g, {1, 2}).velocity();
  double L = type3_length(g, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::numeric_conjugate_count(g, v, L).count);
}
BENCHMARK(BM_ConjugateScan)->Unit(benchmark::kMillisecond);
