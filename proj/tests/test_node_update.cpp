#include <gtest/gtest.h>

#include <random>

#include "support/oracle.hpp"
#include "trussmaint/decomposition.hpp"
#include "trussmaint/node_update.hpp"

namespace trussmaint {
namespace {

using testing::complete_graph;
using testing::random_graph;

template <class Rng>
std::vector<VertexId> pick_neighbors(const Graph& g, VertexId skip, std::size_t count, Rng& rng) {
  std::vector<VertexId> vs;
  for (VertexId v : g.vertices()) {
    if (v != skip) vs.push_back(v);
  }
  std::shuffle(vs.begin(), vs.end(), rng);
  vs.resize(std::min(count, vs.size()));
  return vs;
}

// Definition-level bound: largest k with w in the maximal subgraph of
// G[N] whose edges have trussness >= k - shift and whose vertices keep
// degree >= k - 2. shift = 0 gives low, shift = 1 gives up.
Trussness brute_bound(const Graph& g, const TrussIndex& idx, const std::vector<VertexId>& nbrs, VertexId w,
                      Trussness shift) {
  Trussness best = kTrussFloor;
  for (Trussness k = 2; k <= nbrs.size() + 3; ++k) {
    std::set<VertexId> alive(nbrs.begin(), nbrs.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId x : std::set<VertexId>(alive)) {
        std::size_t deg = 0;
        for (VertexId y : alive) {
          if (y != x && g.has_edge(x, y) && idx.at(x, y) + shift >= k) ++deg;
        }
        if (deg + 2 < k) {
          alive.erase(x);
          changed = true;
        }
      }
    }
    if (alive.count(w)) best = k;
  }
  return best;
}

TEST(Bounds, K4PlusApex) {
  const Graph g = complete_graph(4);
  const TrussIndex idx = truss_decomposition(g);
  const std::vector<VertexId> nbrs{0, 1, 2, 3};
  const auto ev = incident_edges(4, nbrs);
  const auto pairs = compute_bound_pairs(g, idx, 4, ev);
  for (const BoundPair& b : pairs) EXPECT_EQ(b, (BoundPair{4, 5}));
  EXPECT_EQ(node_trussness_upper_bound(pairs), 5u);
  // Oracle: K5 gives every new edge trussness 5.
  EXPECT_EQ(truss_decomposition(complete_graph(5)).at(0, 4), 5u);
}

TEST(Bounds, SingleEdge) {
  const Graph g = complete_graph(4);
  const TrussIndex idx = truss_decomposition(g);
  const std::vector<Edge> ev{Edge{0, 4}};
  EXPECT_EQ(compute_bound_pairs(g, idx, 4, ev).front(), (BoundPair{2, 2}));
}

TEST(Bounds, UpperBoundOfBatch) {
  const std::vector<BoundPair> same{{3, 4}, {3, 4}, {4, 4}};
  EXPECT_EQ(node_trussness_upper_bound(same), 4u);
  EXPECT_EQ(node_trussness_upper_bound(std::vector<BoundPair>{{2, 2}}), 2u);
  EXPECT_THROW(node_trussness_upper_bound(std::vector<BoundPair>{}), GraphError);
}

TEST(Bounds, Errors) {
  const Graph g = complete_graph(4);
  const TrussIndex idx = truss_decomposition(g);
  EXPECT_THROW(compute_bounds(g, idx, 4, std::vector<Edge>{}, BoundType::kLow), GraphError);
  EXPECT_THROW(compute_bounds(g, idx, 4, std::vector<Edge>{Edge{0, 1}}, BoundType::kLow), GraphError);
  EXPECT_THROW(compute_bounds(g, idx, 4, std::vector<Edge>{Edge{0, 4}, Edge{0, 4}}, BoundType::kUp), GraphError);
}

TEST(Bounds, MatchDefinition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(20, 0.4, 1200 + trial);
    const TrussIndex idx = truss_decomposition(g);
    const VertexId v = static_cast<VertexId>(g.id_bound());
    const auto nbrs = pick_neighbors(g, v, 3 + rng() % 10, rng);
    const auto ev = incident_edges(v, nbrs);
    const auto low = compute_bounds(g, idx, v, ev, BoundType::kLow);
    const auto up = compute_bounds(g, idx, v, ev, BoundType::kUp);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      EXPECT_EQ(low[i], brute_bound(g, idx, nbrs, nbrs[i], 0));
      EXPECT_EQ(up[i], brute_bound(g, idx, nbrs, nbrs[i], 1));
    }
  }
}

TEST(Bounds, KdNeighborhoodDefinition) {
  const Graph g = random_graph(25, 0.4, 17);
  const TrussIndex idx = truss_decomposition(g);
  const auto nb = g.neighbors(3);
  const std::vector<VertexId> nbrs(nb.begin(), nb.end());
  for (Trussness k = 2; k <= 6; ++k) {
    for (std::size_t d = 0; d <= 4; ++d) {
      const Graph h = kd_neighborhood(g, idx, nbrs, k, d);
      for (const Edge& e : h.edges()) EXPECT_GE(idx.at(e), k);
      for (VertexId x : h.vertices()) EXPECT_GE(h.degree(x), d);
      for (VertexId x : h.vertices()) EXPECT_TRUE(std::count(nbrs.begin(), nbrs.end(), x));
    }
  }
}

TEST(Bounds, SandwichAgainstOracle) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = random_graph(30, 0.3, 2000 + trial);
    const TrussIndex idx = truss_decomposition(g);
    const VertexId v = 30;
    const auto nbrs = pick_neighbors(g, v, 8, rng);
    const auto ev = incident_edges(v, nbrs);
    const auto pairs = compute_bound_pairs(g, idx, v, ev);
    Graph h = g;
    h.add_vertex(v);
    for (const Edge& e : ev) h.add_edge(e);
    const TrussIndex oracle = testing::brute_index(h);
    for (std::size_t i = 0; i < ev.size(); ++i) {
      EXPECT_LE(pairs[i].low, oracle.at(ev[i]));
      EXPECT_LE(oracle.at(ev[i]), pairs[i].up);
      EXPECT_LE(pairs[i].up - pairs[i].low, 1u);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 120 * 8);
}

TEST(InsertNode, ApexOfK4GivesK5) {
  Graph g = complete_graph(4);
  TrussIndex idx = truss_decomposition(g);
  const std::vector<VertexId> nbrs{0, 1, 2, 3};
  insert_node(g, idx, 4, incident_edges(4, nbrs));
  EXPECT_EQ(g, complete_graph(5));
  idx.for_each([](const Edge&, Trussness t) { EXPECT_EQ(t, 5u); });
}

TEST(InsertNode, SingleEdgeChangesNothingElse) {
  Graph g = random_graph(20, 0.4, 3);
  TrussIndex idx = truss_decomposition(g);
  const TrussIndex before = idx;
  insert_node(g, idx, 20, std::vector<Edge>{Edge{5, 20}});
  EXPECT_EQ(idx.at(5, 20), 2u);
  before.for_each([&](const Edge& e, Trussness t) { EXPECT_EQ(idx.at(e), t); });
}

TEST(InsertNode, Errors) {
  Graph g = complete_graph(4);
  TrussIndex idx = truss_decomposition(g);
  EXPECT_THROW(insert_node(g, idx, 0, std::vector<Edge>{Edge{0, 1}}), GraphError);
  EXPECT_THROW(insert_node(g, idx, 4, std::vector<Edge>{Edge{4, 4}}), GraphError);
  EXPECT_THROW(insert_node(g, idx, 4, std::vector<Edge>{Edge{0, 4}, Edge{0, 4}}), GraphError);
  EXPECT_THROW(insert_node(g, idx, 4, std::vector<Edge>{Edge{0, 1}}), GraphError);
  EXPECT_THROW(delete_node(g, idx, 9), GraphError);
  EXPECT_EQ(g, complete_graph(4));
  EXPECT_EQ(idx, truss_decomposition(g));
}

TEST(InsertNode, RandomMatchesOracleWithRuleAudit) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(30, 0.3, 3000 + trial);
    TrussIndex idx = truss_decomposition(g);
    const TrussIndex before = idx;
    const VertexId v = 30;
    const auto ev = incident_edges(v, pick_neighbors(g, v, 10, rng));
    const Trussness bound = node_trussness_upper_bound(compute_bound_pairs(g, idx, v, ev));
    UpdateTrace trace;
    insert_node(g, idx, v, ev, &trace);
    ASSERT_EQ(idx, testing::brute_index(g)) << "trial " << trial;
    std::set<Edge> queued;
    for (const auto& [k, list] : trace.buckets) {
      EXPECT_LT(k, bound);
      queued.insert(list.begin(), list.end());
    }
    before.for_each([&](const Edge& e, Trussness t) {
      EXPECT_LE(idx.at(e) - t, 1u);
      if (t >= bound) {
        EXPECT_EQ(idx.at(e), t);
        EXPECT_FALSE(queued.count(e));
      }
    });
  }
}

TEST(InsertNode, EquivalentToFoldingEdgeInsertions) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph base = random_graph(25, 0.35, 3500 + trial);
    const TrussIndex base_idx = truss_decomposition(base);
    const VertexId v = 25;
    auto ev = incident_edges(v, pick_neighbors(base, v, 9, rng));

    Graph g1 = base;
    TrussIndex idx1 = base_idx;
    insert_node(g1, idx1, v, ev);

    Graph g2 = base;
    TrussIndex idx2 = base_idx;
    g2.add_vertex(v);
    std::shuffle(ev.begin(), ev.end(), rng);
    for (const Edge& e : ev) insert_edge(g2, idx2, e);

    EXPECT_EQ(g1, g2);
    EXPECT_EQ(idx1, idx2);
  }
}

TEST(DeleteNode, VertexOfK5) {
  Graph g = complete_graph(5);
  TrussIndex idx = truss_decomposition(g);
  delete_node(g, idx, 2);
  EXPECT_EQ(idx.size(), 6u);
  idx.for_each([](const Edge&, Trussness t) { EXPECT_EQ(t, 4u); });
}

TEST(DeleteNode, IsolatedVertex) {
  Graph g = random_graph(10, 0.5, 1);
  g.add_vertex(10);
  TrussIndex idx = truss_decomposition(g);
  const TrussIndex before = idx;
  delete_node(g, idx, 10);
  EXPECT_EQ(idx, before);
  EXPECT_FALSE(g.has_vertex(10));
}

TEST(DeleteNode, RandomMatchesOracleWithRuleAudit) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(30, 0.3, 4000 + trial);
    TrussIndex idx = truss_decomposition(g);
    const TrussIndex before = idx;
    const VertexId v = static_cast<VertexId>(rng() % 30);
    const Trussness tv = vertex_trussness(g, idx, v);
    delete_node(g, idx, v);
    ASSERT_EQ(idx, testing::brute_index(g)) << "trial " << trial;
    idx.for_each([&](const Edge& e, Trussness t) {
      const Trussness old = before.at(e);
      EXPECT_LE(old - t, 1u);
      if (old > tv) EXPECT_EQ(t, old);
    });
  }
}

TEST(NodeUpdates, DeleteThenReinsertRoundTrips) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(30, 0.3, 4500 + trial);
    const Graph original = g;
    TrussIndex idx = truss_decomposition(g);
    const TrussIndex original_idx = idx;
    const VertexId v = static_cast<VertexId>(rng() % 30);
    const auto nb = g.neighbors(v);
    const std::vector<VertexId> nbrs(nb.begin(), nb.end());
    if (nbrs.empty()) continue;
    delete_node(g, idx, v);
    insert_node(g, idx, v, incident_edges(v, nbrs));
    EXPECT_EQ(g, original);
    EXPECT_EQ(idx, original_idx);
  }
}

}  // namespace
}  // namespace trussmaint
