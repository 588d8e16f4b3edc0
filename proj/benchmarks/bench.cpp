// Timings for the hot paths: string enumeration, both lattice routes, the
// full verification bundle, and corpus generation.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "colocal/analysis.hpp"
#include "colocal/corpus.hpp"
#include "colocal/lattice.hpp"
#include "colocal/quiver.hpp"
#include "colocal/strings.hpp"

using namespace colocal;

namespace {

const char* kLoopTail =
    "vertices: 1 2\n"
    "arrow a: 2 -> 2\n"
    "arrow b: 1 -> 2\n"
    "relation a a\n";

// two chains into a shared sink; the sink factor is Y^{3,3}
const char* kDoubleChain =
    "vertices: 1 2 3 4 5\n"
    "arrow a: 1 -> 2\n"
    "arrow b: 2 -> 5\n"
    "arrow c: 3 -> 4\n"
    "arrow d: 4 -> 5\n";

// a long zero-relation chain: many strings, large brute poset
std::string chain_text(int n) {
  std::string out = "vertices:";
  for (int i = 1; i <= n; ++i) out += " " + std::to_string(i);
  out += "\n";
  for (int i = 1; i < n; ++i)
    out += "arrow x" + std::to_string(i) + ": " + std::to_string(i) +
           " -> " + std::to_string(i + 1) + "\n";
  return out;
}

}  // namespace

static void BM_parse(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_quiver_spec(kDoubleChain));
}
BENCHMARK(BM_parse);

static void BM_enumerate_strings(benchmark::State& state) {
  auto qa = parse_quiver_spec(chain_text(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_strings(qa));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_enumerate_strings)->Arg(4)->Arg(8)->Arg(12)->Complexity();

static void BM_analyze(benchmark::State& state) {
  auto qa = parse_quiver_spec(kDoubleChain);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(qa));
}
BENCHMARK(BM_analyze);

static void BM_brute_lattice(benchmark::State& state) {
  auto qa = parse_quiver_spec(chain_text(static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_lattice(qa));
}
BENCHMARK(BM_brute_lattice)->Arg(3)->Arg(4)->Arg(6);

static void BM_structural_lattice(benchmark::State& state) {
  auto qa = parse_quiver_spec(chain_text(8));
  for (auto _ : state)
    benchmark::DoNotOptimize(structural_lattice(qa).size());
}
BENCHMARK(BM_structural_lattice);

static void BM_young_box(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(young_box_lattice(n, n));
}
BENCHMARK(BM_young_box)->Arg(3)->Arg(5)->Arg(7);

static void BM_verify_main_theorem(benchmark::State& state) {
  auto qa = parse_quiver_spec(kDoubleChain);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_main_theorem(qa));
}
BENCHMARK(BM_verify_main_theorem);

static void BM_verify_tau(benchmark::State& state) {
  auto qa = parse_quiver_spec(kLoopTail);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_tau_equivalences(qa));
}
BENCHMARK(BM_verify_tau);

static void BM_corpus(benchmark::State& state) {
  CorpusOptions opts;
  opts.random_supplement = 25;
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_corpus(opts));
}
BENCHMARK(BM_corpus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
