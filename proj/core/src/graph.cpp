#include "trussmaint/graph.hpp"

#include <algorithm>

namespace trussmaint {

Edge Edge::make(VertexId a, VertexId b) {
  if (a == b) throw GraphError("self-loop on vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph::Graph(std::size_t vertex_count)
    : adjacency_(vertex_count), present_(vertex_count, 1), vertex_count_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& na = adjacency_[a];
  const auto& nb = adjacency_[b];
  // Search the shorter list.
  if (na.size() <= nb.size()) return std::binary_search(na.begin(), na.end(), b);
  return std::binary_search(nb.begin(), nb.end(), a);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  require_vertex(v);
  return adjacency_[v];
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (VertexId v = 0; v < present_.size(); ++v) {
    if (present_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for_each_edge([&](const Edge& e) { out.push_back(e); });
  return out;
}

void Graph::add_vertex(VertexId v) {
  if (has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " already present");
  if (v >= present_.size()) {
    present_.resize(static_cast<std::size_t>(v) + 1, 0);
    adjacency_.resize(static_cast<std::size_t>(v) + 1);
  }
  present_[v] = 1;
  ++vertex_count_;
}

void Graph::remove_vertex(VertexId v) {
  require_vertex(v);
  for (VertexId w : adjacency_[v]) {
    auto& nw = adjacency_[w];
    nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
  }
  edge_count_ -= adjacency_[v].size();
  adjacency_[v].clear();
  adjacency_[v].shrink_to_fit();
  present_[v] = 0;
  --vertex_count_;
}

void Graph::add_edge(VertexId a, VertexId b) {
  const Edge e = Edge::make(a, b);
  require_vertex(e.u);
  require_vertex(e.v);
  auto& nu = adjacency_[e.u];
  auto it = std::lower_bound(nu.begin(), nu.end(), e.v);
  if (it != nu.end() && *it == e.v) throw GraphError("duplicate edge " + to_string(e));
  nu.insert(it, e.v);
  auto& nv = adjacency_[e.v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), e.u), e.u);
  ++edge_count_;
}

void Graph::remove_edge(VertexId a, VertexId b) {
  const Edge e = Edge::make(a, b);
  require_vertex(e.u);
  require_vertex(e.v);
  auto& nu = adjacency_[e.u];
  auto it = std::lower_bound(nu.begin(), nu.end(), e.v);
  if (it == nu.end() || *it != e.v) throw GraphError("missing edge " + to_string(e));
  nu.erase(it);
  auto& nv = adjacency_[e.v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), e.u));
  --edge_count_;
}

bool operator==(const Graph& x, const Graph& y) {
  if (x.vertex_count_ != y.vertex_count_ || x.edge_count_ != y.edge_count_) return false;
  const std::size_t bound = std::max(x.present_.size(), y.present_.size());
  for (VertexId v = 0; v < bound; ++v) {
    if (x.has_vertex(v) != y.has_vertex(v)) return false;
    if (x.has_vertex(v) && x.adjacency_[v] != y.adjacency_[v]) return false;
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
  VertexId bound = 0;
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw GraphError("induced_subgraph: vertex " + std::to_string(v) + " not in graph");
    bound = std::max(bound, v + 1);
  }
  Graph h;
  std::vector<char> in_s(bound, 0);
  for (VertexId v : s) {
    if (!in_s[v]) h.add_vertex(v);
    in_s[v] = 1;
  }
  for (VertexId v : h.vertices()) {
    for (VertexId w : g.neighbors(v)) {
      if (v < w && w < bound && in_s[w]) h.add_edge(v, w);
    }
  }
  return h;
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
  std::vector<VertexId> out;
  for_each_common(g.neighbors(u), g.neighbors(v), [&](VertexId w) { out.push_back(w); });
  return out;
}

std::size_t triangles_at(const Graph& g, VertexId v) {
  std::size_t count = 0;
  const auto nv = g.neighbors(v);
  for (VertexId x : nv) {
    // Count each triangle {v, x, y} once via x < y.
    for_each_common(nv, g.neighbors(x), [&](VertexId y) {
      if (x < y) ++count;
    });
  }
  return count;
}

std::vector<Triangle> list_triangles(const Graph& g) {
  std::vector<Triangle> out;
  g.for_each_edge([&](const Edge& e) {
    for_each_common(g.neighbors(e.u), g.neighbors(e.v), [&](VertexId w) {
      if (w > e.v) out.push_back(Triangle{e.u, e.v, w});
    });
  });
  return out;
}

}  // namespace trussmaint
