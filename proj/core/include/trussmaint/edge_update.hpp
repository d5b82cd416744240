#pragma once

#include <map>
#include <span>
#include <unordered_set>
#include <vector>

#include "trussmaint/graph.hpp"
#include "trussmaint/truss_index.hpp"

namespace trussmaint {

/// What an incremental update looked at. Filled only when requested.
struct UpdateTrace {
  std::map<Trussness, std::vector<Edge>> buckets;  // candidate seeds per level
  std::map<Trussness, std::vector<Edge>> scopes;   // triangle-connected closure per level
  std::vector<Edge> changed;                       // pre-existing edges whose trussness moved
};

/// Candidate edges grouped by their current trussness (the L_k lists).
/// An edge is kept in at most one bucket.
class LevelBuckets {
 public:
  /// Returns false if the edge was already queued.
  bool add(Trussness level, const Edge& e);
  std::span<const Edge> at(Trussness level) const;
  Trussness max_level() const { return lists_.empty() ? 0 : static_cast<Trussness>(lists_.size() - 1); }
  bool contains(const Edge& e) const { return members_.contains(e.key()); }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<std::vector<Edge>> lists_;
  std::unordered_set<std::uint64_t> members_;
};

/// Closure of the seeds under "shares a triangle of weight k", where the
/// weight of a triangle is the minimum trussness of its edges. Every edge in
/// the result has trussness k. Throws GraphError if a seed is not at level k.
std::vector<Edge> triangle_connected_scope(const Graph& g, const TrussIndex& idx,
                                           std::span<const Edge> seeds, Trussness k);

/// Adds e to g and brings idx up to date. idx must be exact for g beforehand.
void insert_edge(Graph& g, TrussIndex& idx, Edge e, UpdateTrace* trace = nullptr);

/// Removes e from g and brings idx up to date.
void delete_edge(Graph& g, TrussIndex& idx, Edge e, UpdateTrace* trace = nullptr);

namespace detail {

// Both routines require every edge's final trussness to lie within one step
// of its current value: promote assumes {t, t+1}, demote assumes {t-1, t}.

/// Raises to k+1 every level-k edge in the closure of seeds that belongs to
/// the (k+1)-truss of g.
void promote_level(const Graph& g, TrussIndex& idx, Trussness k, std::span<const Edge> seeds,
                   UpdateTrace* trace);

/// Lowers to k-1 every level-k edge in the closure of seeds that no longer
/// belongs to the k-truss of g.
void demote_level(const Graph& g, TrussIndex& idx, Trussness k, std::span<const Edge> seeds,
                  UpdateTrace* trace);

/// Largest k such that at least k-2 common neighbors w of a and b have both
/// (a,w) and (b,w) at trussness >= k. Final trussness of a new edge (a,b) is
/// this value or one more.
Trussness new_edge_lower_bound(const Graph& g, const TrussIndex& idx, VertexId a, VertexId b);

}  // namespace detail

}  // namespace trussmaint
