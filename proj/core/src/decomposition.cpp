#include "trussmaint/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace trussmaint {

namespace {

// Neighbor lists with parallel edge ids; ids follow canonical edge order.
struct EdgeCsr {
  std::vector<Edge> edges;
  std::vector<std::vector<std::uint32_t>> edge_ids;  // parallel to g.neighbors(v)
};

EdgeCsr build_csr(const Graph& g) {
  EdgeCsr csr;
  csr.edges = g.edges();
  csr.edge_ids.resize(g.id_bound());
  for (VertexId v : g.vertices()) csr.edge_ids[v].reserve(g.degree(v));
  // Sorted edge order makes each per-vertex list line up with the sorted
  // neighbor list: lower neighbors arrive first, in ascending order.
  for (std::uint32_t id = 0; id < csr.edges.size(); ++id) {
    csr.edge_ids[csr.edges[id].u].push_back(id);
    csr.edge_ids[csr.edges[id].v].push_back(id);
  }
  return csr;
}

// f(w, id(u,w), id(v,w)) for every common neighbor w.
template <class F>
void for_each_wedge(const Graph& g, const EdgeCsr& csr, const Edge& e, F&& f) {
  const auto nu = g.neighbors(e.u);
  const auto nv = g.neighbors(e.v);
  const auto& iu = csr.edge_ids[e.u];
  const auto& iv = csr.edge_ids[e.v];
  std::size_t i = 0, j = 0;
  while (i < nu.size() && j < nv.size()) {
    if (nu[i] < nv[j]) {
      ++i;
    } else if (nv[j] < nu[i]) {
      ++j;
    } else {
      f(nu[i], iu[i], iv[j]);
      ++i;
      ++j;
    }
  }
}

}  // namespace

SupportMap compute_supports(const Graph& g) {
  SupportMap out;
  out.reserve(g.edge_count());
  g.for_each_edge([&](const Edge& e) {
    std::uint32_t s = 0;
    for_each_common(g.neighbors(e.u), g.neighbors(e.v), [&](VertexId) { ++s; });
    out.emplace(e, s);
  });
  return out;
}

TrussIndex truss_decomposition(const Graph& g) {
  const EdgeCsr csr = build_csr(g);
  const std::size_t m = csr.edges.size();

  std::vector<std::uint32_t> support(m, 0);
  for (std::uint32_t id = 0; id < m; ++id) {
    for_each_wedge(g, csr, csr.edges[id], [&](VertexId, std::uint32_t, std::uint32_t) { ++support[id]; });
  }

  std::set<std::pair<std::uint32_t, std::uint32_t>> queue;
  for (std::uint32_t id = 0; id < m; ++id) queue.emplace(support[id], id);

  std::vector<char> alive(m, 1);
  TrussIndex idx;
  idx.reserve(m);
  Trussness k = kTrussFloor;
  while (!queue.empty()) {
    const auto [s, id] = *queue.begin();
    queue.erase(queue.begin());
    k = std::max<Trussness>(k, s + 2);
    idx.set(csr.edges[id], k);
    alive[id] = 0;
    for_each_wedge(g, csr, csr.edges[id], [&](VertexId, std::uint32_t a, std::uint32_t b) {
      if (!alive[a] || !alive[b]) return;
      for (std::uint32_t f : {a, b}) {
        if (support[f] + 2 > k) {
          queue.erase({support[f], f});
          --support[f];
          queue.emplace(support[f], f);
        }
      }
    });
  }
  return idx;
}

Graph extract_ktruss(const TrussIndex& idx, const Graph& g, Trussness k) {
  if (k < kTrussFloor) throw GraphError("k must be at least 2, got " + std::to_string(k));
  Graph out;
  for (const auto& [e, t] : idx.sorted_entries()) {
    if (t < k) continue;
    if (!g.has_edge(e)) throw GraphError("index edge " + to_string(e) + " missing from graph");
    if (!out.has_vertex(e.u)) out.add_vertex(e.u);
    if (!out.has_vertex(e.v)) out.add_vertex(e.v);
    out.add_edge(e);
  }
  return out;
}

Graph query_ktruss(const PublicPrivateGraph& ppg, VertexId owner, Trussness k,
                   const TrussIndex& updated_index, QueryScope scope) {
  if (k < kTrussFloor) throw GraphError("k must be at least 2, got " + std::to_string(k));
  const PersonalizedView view = personalized_view(ppg, owner);
  Graph truss;
  for (const auto& [e, t] : updated_index.sorted_entries()) {
    if (t < k) continue;
    if (!view.has_edge(e.u, e.v)) {
      throw GraphError("index edge " + to_string(e) + " is not in the view of owner " + std::to_string(owner));
    }
    if (!truss.has_vertex(e.u)) truss.add_vertex(e.u);
    if (!truss.has_vertex(e.v)) truss.add_vertex(e.v);
    truss.add_edge(e);
  }
  if (scope == QueryScope::kGlobal) return truss;

  if (!truss.has_vertex(owner)) return Graph{};
  std::vector<VertexId> component{owner};
  std::vector<char> seen(truss.id_bound(), 0);
  seen[owner] = 1;
  for (std::size_t head = 0; head < component.size(); ++head) {
    for (VertexId w : truss.neighbors(component[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        component.push_back(w);
      }
    }
  }
  return induced_subgraph(truss, component);
}

}  // namespace trussmaint
