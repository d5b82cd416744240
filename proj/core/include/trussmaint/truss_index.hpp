#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "trussmaint/graph.hpp"

namespace trussmaint {

using Trussness = std::uint32_t;

/// Smallest trussness; an edge in no triangle has it.
inline constexpr Trussness kTrussFloor = 2;

/// Edge -> trussness map maintained alongside a graph.
class TrussIndex {
 public:
  TrussIndex() = default;

  std::size_t size() const { return tau_.size(); }
  bool contains(const Edge& e) const { return tau_.contains(e.key()); }

  /// Throws GraphError if the edge is not indexed.
  Trussness at(const Edge& e) const;
  Trussness at(VertexId a, VertexId b) const { return at(Edge::make(a, b)); }
  std::optional<Trussness> find(const Edge& e) const;

  void set(const Edge& e, Trussness t) { tau_[e.key()] = t; }
  void erase(const Edge& e) { tau_.erase(e.key()); }
  void reserve(std::size_t n) { tau_.reserve(n); }

  /// (edge, trussness) pairs in canonical edge order.
  std::vector<std::pair<Edge, Trussness>> sorted_entries() const;
  Trussness max_trussness() const;

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [k, t] : tau_) f(Edge::from_key(k), t);
  }

  friend bool operator==(const TrussIndex& a, const TrussIndex& b) { return a.tau_ == b.tau_; }

 private:
  std::unordered_map<std::uint64_t, Trussness> tau_;
};

/// max over incident edges; 0 for an isolated vertex.
Trussness vertex_trussness(const Graph& g, const TrussIndex& idx, VertexId v);

/// Canonical edges whose trussness differs between two indexes, including
/// edges present in only one of them.
std::vector<Edge> index_diff(const TrussIndex& a, const TrussIndex& b);

}  // namespace trussmaint
