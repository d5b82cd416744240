#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trussmaint {

using VertexId = std::uint32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected edge stored canonically (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge make(VertexId a, VertexId b);

  std::uint64_t key() const { return (static_cast<std::uint64_t>(u) << 32) | v; }
  static Edge from_key(std::uint64_t k) {
    return Edge{static_cast<VertexId>(k >> 32), static_cast<VertexId>(k & 0xffffffffu)};
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t x = e.key();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

struct Triangle {
  VertexId a = 0, b = 0, c = 0;  // ascending
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph over a dense id space.
///
/// A vertex id is either present or absent; absent ids have no adjacency.
/// Neighbor lists are kept sorted so that triangle listing is a sorted-set
/// intersection. Readers may share a graph; mutation needs exclusive access.
class Graph {
 public:
  Graph() = default;
  /// Graph with vertices 0..vertex_count-1 and no edges.
  explicit Graph(std::size_t vertex_count);

  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  bool has_vertex(VertexId v) const { return v < present_.size() && present_[v] != 0; }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  /// Sorted neighbors of v. Throws GraphError for an unknown vertex.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  /// One past the largest id this graph has storage for.
  VertexId id_bound() const { return static_cast<VertexId>(present_.size()); }

  std::vector<VertexId> vertices() const;
  /// Canonical edges in ascending (u, v) order.
  std::vector<Edge> edges() const;

  template <class F>
  void for_each_edge(F&& f) const {
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
      for (VertexId w : adjacency_[u]) {
        if (u < w) f(Edge{u, w});
      }
    }
  }

  /// Adds an isolated vertex. Adding a present vertex is an error.
  void add_vertex(VertexId v);
  /// Removes v and all incident edges.
  void remove_vertex(VertexId v);
  void add_edge(VertexId a, VertexId b);
  void add_edge(const Edge& e) { add_edge(e.u, e.v); }
  void remove_edge(VertexId a, VertexId b);
  void remove_edge(const Edge& e) { remove_edge(e.u, e.v); }

  friend bool operator==(const Graph& x, const Graph& y);

 private:
  void require_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<char> present_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

/// G[S]: vertex set exactly s, edges of g with both ends in s.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> s);

/// Calls f(w) for every w in the intersection of two sorted ranges.
template <class F>
void for_each_common(std::span<const VertexId> a, std::span<const VertexId> b, F&& f) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      f(*i);
      ++i;
      ++j;
    }
  }
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v);

/// Number of triangles of g that contain vertex v.
std::size_t triangles_at(const Graph& g, VertexId v);

std::vector<Triangle> list_triangles(const Graph& g);

}  // namespace trussmaint
