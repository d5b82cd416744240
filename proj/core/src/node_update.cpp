#include "trussmaint/node_update.hpp"

#include <algorithm>
#include <unordered_map>

namespace trussmaint {

namespace {

std::vector<VertexId> neighbor_side(const Graph& g, VertexId v, std::span<const Edge> ev) {
  if (ev.empty()) throw GraphError("empty edge batch for vertex " + std::to_string(v));
  std::vector<VertexId> out;
  out.reserve(ev.size());
  for (const Edge& e : ev) {
    if (e.u == e.v) throw GraphError("self-loop on vertex " + std::to_string(e.u));
    if (e.u != v && e.v != v) {
      throw GraphError("edge " + to_string(e) + " is not incident to vertex " + std::to_string(v));
    }
    const VertexId w = e.u == v ? e.v : e.u;
    if (!g.has_vertex(w)) throw GraphError("edge " + to_string(e) + " has an unknown endpoint");
    out.push_back(w);
  }
  std::vector<VertexId> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("duplicate edge in batch for vertex " + std::to_string(v));
  }
  return out;
}

// G[N(v)] in local numbering, edges carrying their trussness in g.
struct LocalNeighborhood {
  std::vector<VertexId> vertices;  // sorted
  struct LocalEdge {
    std::uint32_t a, b;
    Trussness tau;
  };
  std::vector<LocalEdge> edges;
  std::vector<std::vector<std::uint32_t>> incident;  // local vertex -> edge ids
};

LocalNeighborhood build_neighborhood(const Graph& g, const TrussIndex& idx, std::vector<VertexId> nbrs) {
  LocalNeighborhood h;
  std::sort(nbrs.begin(), nbrs.end());
  h.vertices = std::move(nbrs);
  h.incident.resize(h.vertices.size());
  const std::span<const VertexId> members(h.vertices);
  for (std::uint32_t i = 0; i < h.vertices.size(); ++i) {
    const VertexId x = h.vertices[i];
    for_each_common(members, g.neighbors(x), [&](VertexId y) {
      if (y <= x) return;
      const auto j = static_cast<std::uint32_t>(std::lower_bound(members.begin(), members.end(), y) - members.begin());
      const auto id = static_cast<std::uint32_t>(h.edges.size());
      h.edges.push_back({i, j, idx.at(x, y)});
      h.incident[i].push_back(id);
      h.incident[j].push_back(id);
    });
  }
  return h;
}

}  // namespace

Graph kd_neighborhood(const Graph& g, const TrussIndex& idx, std::span<const VertexId> neighbors,
                      Trussness k, std::size_t d) {
  const LocalNeighborhood h = build_neighborhood(g, idx, {neighbors.begin(), neighbors.end()});
  const std::size_t n = h.vertices.size();
  std::vector<char> edge_alive(h.edges.size(), 0);
  std::vector<std::size_t> degree(n, 0);
  for (std::uint32_t id = 0; id < h.edges.size(); ++id) {
    if (h.edges[id].tau >= k) {
      edge_alive[id] = 1;
      ++degree[h.edges[id].a];
      ++degree[h.edges[id].b];
    }
  }
  std::vector<char> alive(n, 1);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (degree[i] < d) {
      alive[i] = 0;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const std::uint32_t i = stack.back();
    stack.pop_back();
    for (std::uint32_t id : h.incident[i]) {
      if (!edge_alive[id]) continue;
      edge_alive[id] = 0;
      const std::uint32_t j = h.edges[id].a == i ? h.edges[id].b : h.edges[id].a;
      if (alive[j] && --degree[j] < d) {
        alive[j] = 0;
        stack.push_back(j);
      }
    }
  }
  Graph out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (alive[i]) out.add_vertex(h.vertices[i]);
  }
  for (std::uint32_t id = 0; id < h.edges.size(); ++id) {
    if (edge_alive[id]) out.add_edge(h.vertices[h.edges[id].a], h.vertices[h.edges[id].b]);
  }
  return out;
}

std::vector<Trussness> compute_bounds(const Graph& g, const TrussIndex& idx, VertexId v,
                                      std::span<const Edge> ev, BoundType type) {
  const std::vector<VertexId> side = neighbor_side(g, v, ev);
  const LocalNeighborhood h = build_neighborhood(g, idx, side);
  const std::size_t n = h.vertices.size();

  std::vector<std::uint32_t> by_tau(h.edges.size());
  for (std::uint32_t id = 0; id < by_tau.size(); ++id) by_tau[id] = id;
  std::sort(by_tau.begin(), by_tau.end(),
            [&](std::uint32_t x, std::uint32_t y) { return h.edges[x].tau < h.edges[y].tau; });

  std::vector<char> edge_alive(h.edges.size(), 1);
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (std::uint32_t i = 0; i < n; ++i) degree[i] = h.incident[i].size();
  std::vector<Trussness> bound(n, kTrussFloor);

  std::size_t remaining = n;
  std::size_t next_edge = 0;
  std::vector<std::uint32_t> stack;
  for (Trussness k = kTrussFloor; remaining > 0; ++k) {
    for (; next_edge < by_tau.size() && h.edges[by_tau[next_edge]].tau < k; ++next_edge) {
      const std::uint32_t id = by_tau[next_edge];
      if (!edge_alive[id]) continue;
      edge_alive[id] = 0;
      --degree[h.edges[id].a];
      --degree[h.edges[id].b];
    }

    const std::size_t min_degree = type == BoundType::kLow ? k - 2 : k - 1;
    const Trussness recorded = type == BoundType::kLow ? k - 1 : k;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (alive[i] && degree[i] < min_degree) {
        alive[i] = 0;
        stack.push_back(i);
      }
    }
    while (!stack.empty()) {
      const std::uint32_t i = stack.back();
      stack.pop_back();
      bound[i] = std::max(recorded, kTrussFloor);
      --remaining;
      for (std::uint32_t id : h.incident[i]) {
        if (!edge_alive[id]) continue;
        edge_alive[id] = 0;
        const std::uint32_t j = h.edges[id].a == i ? h.edges[id].b : h.edges[id].a;
        if (alive[j] && --degree[j] < min_degree) {
          alive[j] = 0;
          stack.push_back(j);
        }
      }
    }
  }

  std::vector<Trussness> out;
  out.reserve(side.size());
  for (VertexId w : side) {
    const auto it = std::lower_bound(h.vertices.begin(), h.vertices.end(), w);
    out.push_back(bound[static_cast<std::size_t>(it - h.vertices.begin())]);
  }
  return out;
}

std::vector<BoundPair> compute_bound_pairs(const Graph& g, const TrussIndex& idx, VertexId v,
                                           std::span<const Edge> ev) {
  const auto low = compute_bounds(g, idx, v, ev, BoundType::kLow);
  const auto up = compute_bounds(g, idx, v, ev, BoundType::kUp);
  std::vector<BoundPair> out(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) out[i] = {low[i], up[i]};
  return out;
}

Trussness node_trussness_upper_bound(std::span<const BoundPair> bounds) {
  if (bounds.empty()) throw GraphError("node_trussness_upper_bound: empty bound set");
  Trussness m = 0;
  for (const BoundPair& b : bounds) m = std::max(m, b.up);
  return m;
}

std::vector<Edge> incident_edges(VertexId v, std::span<const VertexId> neighbors) {
  std::vector<Edge> out;
  out.reserve(neighbors.size());
  for (VertexId w : neighbors) out.push_back(Edge::make(v, w));
  return out;
}

void insert_node(Graph& g, TrussIndex& idx, VertexId v, std::span<const Edge> ev, UpdateTrace* trace) {
  if (g.has_vertex(v) && g.degree(v) > 0) {
    throw GraphError("insert_node: vertex " + std::to_string(v) + " still has edges; delete it first");
  }
  const std::vector<VertexId> side = neighbor_side(g, v, ev);
  const std::vector<BoundPair> bounds = compute_bound_pairs(g, idx, v, ev);
  const Trussness k_max = node_trussness_upper_bound(bounds);

  std::unordered_map<VertexId, Trussness> up_of;
  up_of.reserve(side.size());
  for (std::size_t i = 0; i < side.size(); ++i) up_of.emplace(side[i], bounds[i].up);

  if (!g.has_vertex(v)) g.add_vertex(v);
  LevelBuckets buckets;
  std::vector<Edge> fresh;
  fresh.reserve(side.size());
  for (std::size_t i = 0; i < side.size(); ++i) {
    const Edge e = Edge::make(v, side[i]);
    g.add_edge(e);
    idx.set(e, bounds[i].low);
    fresh.push_back(e);
    if (bounds[i].low < bounds[i].up) buckets.add(bounds[i].low, e);
  }

  // Edges of G[N(v)] that can join a higher truss through their new triangle.
  std::vector<VertexId> members = side;
  std::sort(members.begin(), members.end());
  for (VertexId x : members) {
    for_each_common(std::span<const VertexId>(members), g.neighbors(x), [&](VertexId y) {
      if (y <= x) return;
      const Edge e = Edge::make(x, y);
      const Trussness t = idx.at(e);
      if (t < std::min(up_of.at(x), up_of.at(y))) buckets.add(t, e);
    });
  }

  if (trace) {
    for (Trussness k = 0; k <= buckets.max_level(); ++k) {
      const auto list = buckets.at(k);
      if (!list.empty()) trace->buckets[k].assign(list.begin(), list.end());
    }
  }

  for (Trussness k = k_max - 1; k >= kTrussFloor; --k) {
    const auto seeds = buckets.at(k);
    if (!seeds.empty()) detail::promote_level(g, idx, k, seeds, trace);
  }

  if (trace) {
    std::sort(fresh.begin(), fresh.end());
    std::erase_if(trace->changed,
                  [&](const Edge& e) { return std::binary_search(fresh.begin(), fresh.end(), e); });
  }
}

void delete_node(Graph& g, TrussIndex& idx, VertexId v, UpdateTrace* trace) {
  if (!g.has_vertex(v)) throw GraphError("delete_node: unknown vertex " + std::to_string(v));
  const auto nv = g.neighbors(v);

  LevelBuckets buckets;
  for (VertexId x : nv) {
    const Trussness tx = idx.at(v, x);
    for_each_common(nv, g.neighbors(x), [&](VertexId y) {
      if (y <= x) return;
      const Edge e = Edge::make(x, y);
      const Trussness t = idx.at(e);
      if (t <= std::min(tx, idx.at(v, y))) buckets.add(t, e);
    });
  }

  for (VertexId w : nv) idx.erase(Edge::make(v, w));
  g.remove_vertex(v);

  if (trace) {
    for (Trussness k = 0; k <= buckets.max_level(); ++k) {
      const auto list = buckets.at(k);
      if (!list.empty()) trace->buckets[k].assign(list.begin(), list.end());
    }
  }

  for (Trussness k = kTrussFloor; k <= buckets.max_level(); ++k) {
    const auto seeds = buckets.at(k);
    if (!seeds.empty()) detail::demote_level(g, idx, k, seeds, trace);
  }
}

}  // namespace trussmaint
