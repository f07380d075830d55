#include <benchmark/benchmark.h>

#include "trio/hp/special.hpp"
#include "trio/li.hpp"
#include "trio/pseudochar.hpp"
#include "trio/ramanujan.hpp"

namespace {

using trio::hp::Precision;

void BM_ZetaReal(benchmark::State& state) {
  const auto p = static_cast<Precision>(state.range(0));
  const trio::hp::Real s = trio::hp::Real::parse("3.5", p);
  for (auto _ : state) benchmark::DoNotOptimize(trio::hp::zeta(s, p));
}
BENCHMARK(BM_ZetaReal)->Arg(128)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_ZetaCriticalLine(benchmark::State& state) {
  const auto p = static_cast<Precision>(state.range(0));
  const trio::hp::Complex s = trio::hp::parse_complex("0.5,14.134725", p);
  for (auto _ : state) benchmark::DoNotOptimize(trio::hp::zeta(s, p));
}
BENCHMARK(BM_ZetaCriticalLine)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_LiTaylor(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trio::li::taylor_a(n, 256));
}
BENCHMARK(BM_LiTaylor)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_RootAtlas(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trio::ramanujan::root_atlas(r, 256));
}
BENCHMARK(BM_RootAtlas)->Arg(11)->Arg(31)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_PseudoInequalities(benchmark::State& state) {
  const auto s_max = static_cast<unsigned>(state.range(0));
  const Precision p = trio::pseudo::inequality_required_precision(s_max);
  for (auto _ : state) benchmark::DoNotOptimize(trio::pseudo::verify_inequalities(17, s_max, p));
}
BENCHMARK(BM_PseudoInequalities)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
