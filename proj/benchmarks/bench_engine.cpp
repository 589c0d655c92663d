#include <benchmark/benchmark.h>

#include "geobracket/bracket.hpp"
#include "geobracket/engine.hpp"
#include "geobracket/surface.hpp"
#include "geobracket/word.hpp"

namespace {

using namespace geobracket;

void BM_ConjugatesUpTo(benchmark::State& state) {
  Word w = parse_word("aB");
  int radius = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conjugates_up_to(w, radius, 2));
}
BENCHMARK(BM_ConjugatesUpTo)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

// A fresh engine per iteration so the lift cache does not hide enumeration.
void BM_SelfCrossingsCold(benchmark::State& state) {
  SurfaceSpec s = builtin("pants");
  CyclicWord x = canonical_class(parse_word("aabAB"));
  for (auto _ : state) {
    Engine e(s, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(e.crossings(x, x));
  }
}
BENCHMARK(BM_SelfCrossingsCold)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CrossingsWarm(benchmark::State& state) {
  Engine e(builtin("holed-torus"), 8);
  CyclicWord x = canonical_class(parse_word("abAB"));
  CyclicWord y = canonical_class(parse_word("aab"));
  e.crossings(x, y);
  for (auto _ : state) benchmark::DoNotOptimize(e.crossings(x, y));
}
BENCHMARK(BM_CrossingsWarm)->Unit(benchmark::kMicrosecond);

void BM_BracketBar(benchmark::State& state) {
  Engine e(builtin("pants"), 8);
  CyclicWord x = canonical_class(parse_word("aaBaB"));
  bracket_bar(e, x);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_bar(e, x));
}
BENCHMARK(BM_BracketBar)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
