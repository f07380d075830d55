#include <benchmark/benchmark.h>

#include <random>

#include "trio/bernoulli.hpp"
#include "trio/mcl.hpp"
#include "trio/ramanujan.hpp"
#include "trio/zetafam.hpp"

namespace {

// The Bernoulli tables are memoized process-wide, so only the first
// iteration pays for the recurrence; verify_trio rebuilds its series.
void BM_BernoulliTrio(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trio::bernoulli::verify_trio(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BernoulliTrio)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_MclRecurrence(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto h = trio::mcl::random_sequence(rng, s);
  for (auto _ : state) benchmark::DoNotOptimize(trio::mcl::delta<trio::Rational>(h, s));
}
BENCHMARK(BM_MclRecurrence)->RangeMultiplier(2)->Range(8, 128);

void BM_MclLiteralDeterminant(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto s = static_cast<unsigned>(state.range(0));
  const auto h = trio::mcl::random_sequence(rng, s);
  for (auto _ : state) benchmark::DoNotOptimize(trio::mcl::delta_naive(h, s));
}
BENCHMARK(BM_MclLiteralDeterminant)->DenseRange(4, 12, 4);

void BM_MclCompositions(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const auto s = static_cast<unsigned>(state.range(0));
  const auto h = trio::mcl::random_sequence(rng, s);
  for (auto _ : state) benchmark::DoNotOptimize(trio::mcl::delta_by_compositions<trio::Rational>(h, s));
}
BENCHMARK(BM_MclCompositions)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_ZetaFourway(benchmark::State& state) {
  const auto s = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trio::zeta::fourway(s, trio::zeta::Scaled::zeta));
}
BENCHMARK(BM_ZetaFourway)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_RamanujanVerify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trio::ramanujan::verify_all(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_RamanujanVerify)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
