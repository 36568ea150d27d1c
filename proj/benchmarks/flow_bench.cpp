#include <benchmark/benchmark.h>

#include <random>

#include "flowlab/gadgets.hpp"
#include "flowlab/max_flow.hpp"
#include "flowlab/multipair.hpp"
#include "flowlab/sat_driver.hpp"

using namespace flowlab;

namespace {

FlowNetwork random_network(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<Capacity> cap(1, 100);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) edges.push_back({u, v, cap(rng)});
    }
  }
  return FlowNetwork(n, std::move(edges));
}

Partition thirds(Var n) {
  PartitionSizes s = plan_partition(Rational(1), Rational(1), n);
  return Partition::contiguous(n, s.u1, s.u3);
}

}  // namespace

static void BM_MaxFlow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  FlowNetwork net = random_network(n, 0.1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(max_flow(net, 0, n - 1).value);
}
BENCHMARK(BM_MaxFlow)->RangeMultiplier(4)->Range(64, 4096);

static void BM_AllPairs(benchmark::State& state) {
  FlowNetwork net = random_network(static_cast<std::size_t>(state.range(0)), 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_max_flow(net));
}
BENCHMARK(BM_AllPairs)->Arg(16)->Arg(32)->Arg(64);

static void BM_GomoryHu(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  FlowNetwork directed = random_network(n, 0.1, 3);
  std::vector<UndirectedGraph::Link> links;
  for (const Edge& e : directed.edges()) {
    if (e.src < e.dst) links.push_back({e.src, e.dst, e.capacity});
  }
  UndirectedGraph g(n, links);
  for (auto _ : state) benchmark::DoNotOptimize(gomory_hu_tree(g));
}
BENCHMARK(BM_GomoryHu)->Arg(64)->Arg(256);

static void BM_ThresholdDecision(benchmark::State& state) {
  const auto n = static_cast<Var>(state.range(0));
  const Variant v = state.range(1) == 0 ? Variant::uncap : Variant::cap;
  CnfFormula f = random_formula(n, n, 3, 4);
  Partition p = thirds(n);
  for (auto _ : state) benchmark::DoNotOptimize(decide_threshold(f, p, n, v).holds);
  state.SetLabel(to_string(v));
}
BENCHMARK(BM_ThresholdDecision)->ArgsProduct({{6, 9, 12}, {0, 1}});

static void BM_MlecMaxSat(benchmark::State& state) {
  CnfFormula f = random_formula(static_cast<Var>(state.range(0)), state.range(0), 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(mlec_max_sat(f).best_p);
}
BENCHMARK(BM_MlecMaxSat)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
