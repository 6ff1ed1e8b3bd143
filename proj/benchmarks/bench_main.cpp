#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "repsat/attractor.hpp"
#include "repsat/bms.hpp"
#include "repsat/measure.hpp"
#include "repsat/slp.hpp"
#include "repsat/text.hpp"
#include "repsat/words.hpp"

using namespace repsat;

namespace {

Text random_text(int n, int sigma, unsigned seed) {
  std::mt19937 rng(seed);
  std::string s(n, 'a');
  for (char& c : s) c = static_cast<char>('a' + rng() % sigma);
  return Text(std::move(s));
}

void BM_MinimalSubstrings(benchmark::State& state) {
  const Text t = random_text(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_substrings(t));
  state.SetBytesProcessed(state.iterations() * t.size());
}
BENCHMARK(BM_MinimalSubstrings)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_MinimalSubstringStats(benchmark::State& state) {
  const Text t = random_text(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_substring_stats(t));
  state.SetBytesProcessed(state.iterations() * t.size());
}
BENCHMARK(BM_MinimalSubstringStats)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond);

void BM_EncodeAttractor(benchmark::State& state) {
  const Text t(thue_morse_word(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(encode_attractor(t));
}
BENCHMARK(BM_EncodeAttractor)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_EncodeBms(benchmark::State& state) {
  const Text t(thue_morse_word(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(encode_bms(t));
}
BENCHMARK(BM_EncodeBms)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_EncodeSlp(benchmark::State& state) {
  const Text t(thue_morse_word(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(encode_slp(t));
}
BENCHMARK(BM_EncodeSlp)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SolveGamma(benchmark::State& state) {
  const Text t = random_text(static_cast<int>(state.range(0)), 4, 2);
  for (auto _ : state) {
    const MeasureResult r = compute_measure(Measure::Gamma, t);
    if (!r.ok()) state.SkipWithError(r.message.c_str());
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SolveGamma)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_SolveMorphic(benchmark::State& state, Measure m, const char* word) {
  const Text t(*morphic_word(word));
  for (auto _ : state) {
    const MeasureResult r = compute_measure(m, t);
    if (!r.ok()) state.SkipWithError(r.message.c_str());
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK_CAPTURE(BM_SolveMorphic, b_thuemorse05, Measure::B, "thuemorse.05")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveMorphic, b_perioddoubling05, Measure::B, "perioddoubling.05")
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);
BENCHMARK_CAPTURE(BM_SolveMorphic, g_paperfold04, Measure::G, "paperfold.04")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SolveMorphic, g_thuemorse06, Measure::G, "thuemorse.06")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
