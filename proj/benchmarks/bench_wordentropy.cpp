#include <benchmark/benchmark.h>

#include <vector>

#include "wordentropy/characteristic.hpp"
#include "wordentropy/complexity.hpp"
#include "wordentropy/gaplang.hpp"
#include "wordentropy/prefix_source.hpp"
#include "wordentropy/renorm.hpp"

namespace we = wordentropy;

namespace {

void profile_backend(benchmark::State& state, we::CountingBackend backend) {
  const auto length = static_cast<std::size_t>(state.range(0));
  const we::Word w = we::PrefixSource::parse("sturmian:2,1,3").generate(length);
  const std::size_t horizon = we::witness_horizon(length) < 256 ? we::witness_horizon(length) : 256;
  for (auto _ : state) benchmark::DoNotOptimize(we::complexity_profile(w, horizon, backend));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * length));
}

void BM_ProfileWindowScan(benchmark::State& state) {
  profile_backend(state, we::CountingBackend::window_scan);
}
BENCHMARK(BM_ProfileWindowScan)->RangeMultiplier(10)->Range(1'000, 100'000);

void BM_ProfileSuffixAutomaton(benchmark::State& state) {
  profile_backend(state, we::CountingBackend::suffix_automaton);
}
BENCHMARK(BM_ProfileSuffixAutomaton)->RangeMultiplier(10)->Range(1'000, 1'000'000);

void BM_QkTable(benchmark::State& state) {
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(we::qk_table(8, horizon));
}
BENCHMARK(BM_QkTable)->RangeMultiplier(4)->Range(256, 16'384);

void BM_Renormalize(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  we::PrefixSource source(we::SturmianFamily{{1, 2, 1, 3}});
  const std::size_t length =
      std::max(we::min_renorm_length(k), source.witness_length(k + 1));
  const we::Word w = source.generate(length);
  for (auto _ : state) benchmark::DoNotOptimize(we::renormalize(w, k));
  state.counters["prefix"] = static_cast<double>(length);
}
BENCHMARK(BM_Renormalize)->RangeMultiplier(4)->Range(4, 256);

void BM_SolveCharacteristic(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const std::vector<std::uint64_t> gaps = we::extremal_gaps(k, 0.125);
  for (auto _ : state) benchmark::DoNotOptimize(we::solve_characteristic(gaps, k));
  state.counters["gaps"] = static_cast<double>(gaps.size());
}
BENCHMARK(BM_SolveCharacteristic)->RangeMultiplier(100)->Range(100, 1'000'000);

}  // namespace
BENCHMARK_MAIN();
