// Scaling benchmarks for the hot paths: the closure pipeline (random tree to
// validated triangulation), coordinate computation, and end-to-end generation.

#include <map>

#include <benchmark/benchmark.h>

#include "trx/bijection.hpp"
#include "trx/drawing.hpp"
#include "trx/rng.hpp"
#include "trx/ternary_tree.hpp"
#include "trx/transversal.hpp"

namespace {

struct Instance {
  trx::Triangulation t;
  trx::TransversalStructure s;
};

const Instance& instance(int n) {
  static std::map<int, Instance> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    trx::Rng rng(0x5eedULL + n);
    trx::ClosureResult res = trx::closure(trx::bicolor(trx::random_tree(n, rng), true));
    trx::TransversalStructure s = trx::orient_partition(res.t, res.red);
    it = cache.emplace(n, Instance{std::move(res.t), std::move(s)}).first;
  }
  return it->second;
}

void BM_closure_pipeline(benchmark::State& state) {
  int n = (int)state.range(0);
  trx::Rng rng(42);
  for (auto _ : state) {
    trx::TernaryTree tree = trx::random_tree(n, rng);
    trx::ClosureResult res = trx::closure(trx::bicolor(tree, rng.coin()), rng.coin());
    benchmark::DoNotOptimize(res.root_edge);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_closure_pipeline)
    ->Arg(100)
    ->Arg(1000)
    ->Arg(10000)
    ->Arg(100000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_fast_coordinates(benchmark::State& state) {
  const Instance& in = instance((int)state.range(0));
  for (auto _ : state) {
    trx::GridDrawing d = trx::fast_coordinates(in.t, in.s);
    benchmark::DoNotOptimize(d.width);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_fast_coordinates)
    ->Arg(100)
    ->Arg(1000)
    ->Arg(10000)
    ->Arg(100000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

// full generation of one n=2000 instance with structure and verified drawing;
// the acceptance target is well under a second
void BM_generate_2000(benchmark::State& state) {
  trx::Rng rng(7);
  for (auto _ : state) {
    trx::TernaryTree tree = trx::random_tree(2000, rng);
    trx::ClosureResult res = trx::closure(trx::bicolor(tree, rng.coin()), rng.coin());
    trx::TransversalStructure s = trx::orient_partition(res.t, res.red);
    trx::GridDrawing d = trx::fast_coordinates(res.t, s);
    benchmark::DoNotOptimize(d.xy.data());
  }
}
BENCHMARK(BM_generate_2000)->Unit(benchmark::kMillisecond);

void BM_minimalize_after_flops(benchmark::State& state) {
  const Instance& in = instance(500);
  // walk up the lattice a bit, then time the descent back to the minimum
  trx::Rng rng(3);
  trx::EdgePartition red = in.s.red;
  for (int i = 0; i < 50; ++i) {
    auto cycles = trx::alternating_four_cycles(in.t, red);
    std::vector<trx::AltFourCycle> left;
    for (auto& c : cycles)
      if (!c.right) left.push_back(c);
    if (left.empty()) break;
    red = trx::flop(in.t, red, left[rng.below(left.size())]);
  }
  for (auto _ : state) {
    trx::EdgePartition down = trx::minimalize(in.t, red);
    benchmark::DoNotOptimize(down.size());
  }
}
BENCHMARK(BM_minimalize_after_flops)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
