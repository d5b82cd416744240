#pragma once

#include <span>
#include <vector>

#include "trussmaint/edge_update.hpp"
#include "trussmaint/graph.hpp"
#include "trussmaint/truss_index.hpp"

namespace trussmaint {

enum class BoundType { kLow, kUp };

/// Trussness bounds of one new edge (v, w): low <= final <= up, up - low <= 1.
struct BoundPair {
  Trussness low = kTrussFloor;
  Trussness up = kTrussFloor;
  friend bool operator==(const BoundPair&, const BoundPair&) = default;
};

/// The (k, d)-neighborhood of v: the maximal subgraph H of G[N(v)] whose
/// edges all have trussness >= k in g and whose vertices all have degree
/// >= d inside H. `neighbors` plays the role of N(v).
Graph kd_neighborhood(const Graph& g, const TrussIndex& idx, std::span<const VertexId> neighbors,
                      Trussness k, std::size_t d);

/// Bound of each edge in ev for a vertex v about to be inserted with edges ev.
///
/// Refines H = G[N(v)] level by level: at level k, drop edges with
/// trussness below k, then repeatedly drop vertices whose degree in H is
/// below k-2 (low) or k-1 (up). A vertex dropped at level k gets bound k-1
/// (low) or k (up). Only the neighbor side of ev is read from g, so v may
/// already be present. Result is parallel to ev.
///
/// Throws GraphError if ev is empty or holds an edge not incident to v, a
/// duplicate, or an endpoint missing from g.
std::vector<Trussness> compute_bounds(const Graph& g, const TrussIndex& idx, VertexId v,
                                      std::span<const Edge> ev, BoundType type);

std::vector<BoundPair> compute_bound_pairs(const Graph& g, const TrussIndex& idx, VertexId v,
                                           std::span<const Edge> ev);

/// Upper bound on the trussness of the inserted vertex: max up over the
/// batch. Throws GraphError on an empty batch.
Trussness node_trussness_upper_bound(std::span<const BoundPair> bounds);

/// Edges (v, w) for each w, canonical.
std::vector<Edge> incident_edges(VertexId v, std::span<const VertexId> neighbors);

/// Inserts v together with all of ev and updates idx in one batch.
///
/// v must be absent from g or isolated; a vertex that still has edges must
/// go through delete_node first.
void insert_node(Graph& g, TrussIndex& idx, VertexId v, std::span<const Edge> ev,
                 UpdateTrace* trace = nullptr);

/// Removes v and its incident edges and updates idx.
void delete_node(Graph& g, TrussIndex& idx, VertexId v, UpdateTrace* trace = nullptr);

}  // namespace trussmaint
