#include "wha/algebroid.hpp"
#include "wha/groupoid.hpp"
#include "wha/twist.hpp"

#include <benchmark/benchmark.h>

using namespace wha;

namespace {

// 0: P2, 1: P3, 2: P2xZ3 (dim 12)
FiniteGroupoid groupoid(int which) {
  switch (which) {
    case 0: return FiniteGroupoid::pair(2);
    case 1: return FiniteGroupoid::pair(3);
    default: return FiniteGroupoid::product(FiniteGroupoid::pair(2), FiniteGroupoid::cyclic(3));
  }
}

TwistElements spread_twist(const FiniteGroupoid& g) {
  std::vector<Scalar> l;
  for (std::size_t x = 0; x < g.objects().size(); ++x) l.emplace_back(static_cast<long>(x + 2), 1L);
  return diagonal_twist_pair(g, l);
}

void BM_Analyze(benchmark::State& state) {
  WeakHopfSpec s = groupoid_algebra(groupoid(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(s));
  state.counters["dim"] = static_cast<double>(s.dim());
}
BENCHMARK(BM_Analyze)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyWeakHopf(benchmark::State& state) {
  WeakHopfData d = analyze(groupoid_algebra(groupoid(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_weak_hopf(d));
}
BENCHMARK(BM_VerifyWeakHopf)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyTwist(benchmark::State& state) {
  FiniteGroupoid g = groupoid(static_cast<int>(state.range(0)));
  WeakHopfData d = analyze(groupoid_algebra(g));
  TwistElements t = spread_twist(g);
  for (auto _ : state) benchmark::DoNotOptimize(verify_twist(d, t.u, t.v));
}
BENCHMARK(BM_VerifyTwist)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Algebroid(benchmark::State& state) {
  FiniteGroupoid g = groupoid(static_cast<int>(state.range(0)));
  WeakHopfData d = analyze(groupoid_algebra(g));
  TwistElements t = spread_twist(g);
  for (auto _ : state) benchmark::DoNotOptimize(algebroid_report(d, t.u, t.v));
}
BENCHMARK(BM_Algebroid)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SolveTwistPairs(benchmark::State& state) {
  WeakHopfData d = analyze(groupoid_algebra(groupoid(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_twist_pairs(d));
}
BENCHMARK(BM_SolveTwistPairs)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_RecoverAntipode(benchmark::State& state) {
  WeakHopfSpec s = groupoid_algebra(groupoid(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(recover_antipode(s.algebra, s.coproduct));
}
BENCHMARK(BM_RecoverAntipode)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_KernelT1(benchmark::State& state) {
  WeakHopfData d = analyze(groupoid_algebra(groupoid(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(kernel(d.T.T1));
}
BENCHMARK(BM_KernelT1)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_RandomInstance(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_instance(seed++));
}
BENCHMARK(BM_RandomInstance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
