#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "trussmaint/decomposition.hpp"
#include "trussmaint/edge_update.hpp"
#include "trussmaint/generator.hpp"
#include "trussmaint/node_update.hpp"

namespace {

using namespace trussmaint;

const Graph& dense_graph() {
  static const Graph g = community_graph(2000, 20, 40, 0.5, 0.003, 7);
  return g;
}

const TrussIndex& dense_index() {
  static const TrussIndex idx = truss_decomposition(dense_graph());
  return idx;
}

// Neighbors for a new vertex: `count` members of one community.
std::vector<VertexId> community_neighbors(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const VertexId base = static_cast<VertexId>((rng() % 20) * 40);
  std::vector<VertexId> members(40);
  for (VertexId i = 0; i < 40; ++i) members[i] = base + i;
  std::shuffle(members.begin(), members.end(), rng);
  members.resize(count);
  return members;
}

void BM_Decompose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Graph g = erdos_renyi(static_cast<std::size_t>(state.range(0)), 0.01, rng);
  for (auto _ : state) benchmark::DoNotOptimize(truss_decomposition(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_Decompose)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_DecomposeDense(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(truss_decomposition(dense_graph()));
}
BENCHMARK(BM_DecomposeDense)->Unit(benchmark::kMillisecond);

void BM_InsertNode(benchmark::State& state) {
  const auto nbrs = community_neighbors(static_cast<std::size_t>(state.range(0)), 3);
  const VertexId v = static_cast<VertexId>(dense_graph().id_bound());
  const auto ev = incident_edges(v, nbrs);
  for (auto _ : state) {
    state.PauseTiming();
    Graph g = dense_graph();
    TrussIndex idx = dense_index();
    state.ResumeTiming();
    insert_node(g, idx, v, ev);
  }
}
BENCHMARK(BM_InsertNode)->Arg(5)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_InsertNodeAsEdges(benchmark::State& state) {
  const auto nbrs = community_neighbors(static_cast<std::size_t>(state.range(0)), 3);
  const VertexId v = static_cast<VertexId>(dense_graph().id_bound());
  for (auto _ : state) {
    state.PauseTiming();
    Graph g = dense_graph();
    TrussIndex idx = dense_index();
    state.ResumeTiming();
    g.add_vertex(v);
    for (VertexId w : nbrs) insert_edge(g, idx, Edge::make(v, w));
  }
}
BENCHMARK(BM_InsertNodeAsEdges)->Arg(5)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_DeleteNode(benchmark::State& state) {
  const VertexId v = static_cast<VertexId>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    Graph g = dense_graph();
    TrussIndex idx = dense_index();
    state.ResumeTiming();
    delete_node(g, idx, v);
  }
}
BENCHMARK(BM_DeleteNode)->Arg(0)->Arg(415)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
