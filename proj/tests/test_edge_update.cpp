#include <gtest/gtest.h>

#include <random>

#include "support/oracle.hpp"
#include "trussmaint/decomposition.hpp"
#include "trussmaint/edge_update.hpp"

namespace trussmaint {
namespace {

using testing::complete_graph;
using testing::random_graph;

TEST(InsertEdge, ClosingAPathMakesATriangle) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  TrussIndex idx = truss_decomposition(g);
  insert_edge(g, idx, Edge{0, 2});
  idx.for_each([](const Edge&, Trussness t) { EXPECT_EQ(t, 3u); });
}

TEST(InsertEdge, PendantIntoK5) {
  Graph g = complete_graph(5);
  g.add_vertex(5);
  TrussIndex idx = truss_decomposition(g);
  insert_edge(g, idx, Edge{2, 5});
  EXPECT_EQ(idx.at(2, 5), 2u);
  for (const Edge& e : complete_graph(5).edges()) EXPECT_EQ(idx.at(e), 5u);
}

TEST(InsertEdge, Errors) {
  Graph g = complete_graph(4);
  TrussIndex idx = truss_decomposition(g);
  EXPECT_THROW(insert_edge(g, idx, Edge{0, 1}), GraphError);
  EXPECT_THROW(insert_edge(g, idx, Edge{0, 9}), GraphError);
  EXPECT_THROW(delete_edge(g, idx, Edge{0, 9}), GraphError);
  EXPECT_EQ(idx, truss_decomposition(g));
}

TEST(DeleteEdge, BreakingATriangle) {
  Graph g = complete_graph(3);
  TrussIndex idx = truss_decomposition(g);
  delete_edge(g, idx, Edge{0, 1});
  EXPECT_EQ(idx.size(), 2u);
  idx.for_each([](const Edge&, Trussness t) { EXPECT_EQ(t, 2u); });
}

TEST(DeleteEdge, PendantLeavesRestAlone) {
  Graph g = complete_graph(5);
  g.add_vertex(5);
  g.add_edge(0, 5);
  TrussIndex idx = truss_decomposition(g);
  delete_edge(g, idx, Edge{0, 5});
  EXPECT_EQ(idx, truss_decomposition(complete_graph(5)));
}

TEST(LowerBound, NewEdgeWithinOneStep) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(25, 0.35, 40 + trial);
    const TrussIndex idx = truss_decomposition(g);
    for (const Edge& e : testing::random_non_edges(g, 5, rng)) {
      const Trussness low = detail::new_edge_lower_bound(g, idx, e.u, e.v);
      Graph h = g;
      h.add_edge(e);
      const Trussness final_tau = testing::brute_index(h).at(e);
      EXPECT_LE(low, final_tau);
      EXPECT_LE(final_tau, low + 1);
    }
  }
}

TEST(Scope, SeedWithoutTrianglesIsAlone) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const TrussIndex idx = truss_decomposition(g);
  const std::vector<Edge> seed{{0, 1}};
  EXPECT_EQ(triangle_connected_scope(g, idx, seed, 2), seed);
  EXPECT_THROW(triangle_connected_scope(g, idx, seed, 3), GraphError);
}

TEST(Scope, K4ReachesAllEdges) {
  const Graph g = complete_graph(4);
  const TrussIndex idx = truss_decomposition(g);
  const std::vector<Edge> seed{{1, 3}};
  EXPECT_EQ(triangle_connected_scope(g, idx, seed, 4).size(), 6u);
}

// Each step must match the oracle, every other edge moves by at most one,
// and anything outside the processed scopes is untouched.
void check_step(const Graph& g, const TrussIndex& before, const TrussIndex& after, const UpdateTrace& trace,
                const Edge& op_edge) {
  ASSERT_EQ(after, testing::brute_index(g));
  std::set<Edge> in_scope;
  for (const auto& [k, list] : trace.scopes) in_scope.insert(list.begin(), list.end());
  after.for_each([&](const Edge& e, Trussness t) {
    if (e == op_edge) return;
    const Trussness old = before.at(e);
    EXPECT_LE(t > old ? t - old : old - t, 1u);
    if (!in_scope.count(e)) EXPECT_EQ(t, old) << to_string(e);
  });
}

TEST(InsertEdge, RandomSequencesMatchOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(30, 0.3, 7000 + trial);
    TrussIndex idx = truss_decomposition(g);
    for (const Edge& e : testing::random_non_edges(g, 20, rng)) {
      const TrussIndex before = idx;
      UpdateTrace trace;
      insert_edge(g, idx, e, &trace);
      check_step(g, before, idx, trace, e);
      for (const Edge& c : trace.changed) EXPECT_EQ(idx.at(c), before.at(c) + 1);
    }
  }
}

TEST(DeleteEdge, RandomSequencesMatchOracle) {
  std::mt19937_64 rng(4048);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(30, 0.3, 8000 + trial);
    TrussIndex idx = truss_decomposition(g);
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    edges.resize(std::min<std::size_t>(20, edges.size()));
    for (const Edge& e : edges) {
      const TrussIndex before = idx;
      UpdateTrace trace;
      delete_edge(g, idx, e, &trace);
      check_step(g, before, idx, trace, e);
    }
  }
}

TEST(Scope, ContainsEveryChangedEdge) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(30, 0.3, 300 + trial);
    const TrussIndex idx = truss_decomposition(g);
    for (const Edge& e : testing::random_non_edges(g, 3, rng)) {
      Graph h = g;
      h.add_edge(e);
      const TrussIndex oracle = testing::brute_index(h);
      const Trussness low = detail::new_edge_lower_bound(g, idx, e.u, e.v);
      TrussIndex seeded = idx;
      seeded.set(e, low);
      // Changed old edges at level k must lie in the closure of all level-k
      // edges of the new triangles (plus the new edge itself).
      for (const Edge& c : index_diff(idx, oracle)) {
        if (c == e) continue;
        const Trussness k = idx.at(c);
        std::vector<Edge> seeds;
        if (low == k) seeds.push_back(e);
        for (VertexId w : common_neighbors(g, e.u, e.v)) {
          for (const Edge& f : {Edge::make(e.u, w), Edge::make(e.v, w)}) {
            if (idx.at(f) == k) seeds.push_back(f);
          }
        }
        const auto scope = triangle_connected_scope(h, seeded, seeds, k);
        EXPECT_NE(std::find(scope.begin(), scope.end(), c), scope.end()) << to_string(c);
      }
    }
  }
}

TEST(EdgeUpdates, MixedSequencesMatchOracle) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 8 + rng() % 33;
    const double p = std::array{0.1, 0.3, 0.5}[trial % 3];
    Graph g = random_graph(n, p, 10'000 + trial);
    TrussIndex idx = truss_decomposition(g);
    for (int step = 0; step < 10; ++step) {
      const VertexId a = static_cast<VertexId>(rng() % n);
      const VertexId b = static_cast<VertexId>(rng() % n);
      if (a == b) continue;
      if (g.has_edge(a, b)) {
        delete_edge(g, idx, Edge::make(a, b));
      } else {
        insert_edge(g, idx, Edge::make(a, b));
      }
      ASSERT_EQ(idx, testing::brute_index(g)) << "trial " << trial << " step " << step;
    }
  }
}

}  // namespace
}  // namespace trussmaint
