#pragma once

#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "trussmaint/graph.hpp"

namespace trussmaint {

/// A shared public graph plus one private edge set per owner.
///
/// Private edges never duplicate a public edge, and every endpoint is a
/// public vertex. Two owners may hold the same private edge.
class PublicPrivateGraph {
 public:
  PublicPrivateGraph() = default;
  explicit PublicPrivateGraph(Graph public_graph) : public_(std::move(public_graph)) {}

  const Graph& public_graph() const { return public_; }

  /// Throws GraphError if the edge is public, a self-loop, already private
  /// to this owner, or touches an unknown vertex.
  void add_private_edge(VertexId owner, VertexId a, VertexId b);

  /// Sorted private edges of owner (empty if none).
  std::span<const Edge> private_edges(VertexId owner) const;
  /// Private edges of owner that have owner as an endpoint.
  std::vector<VertexId> private_neighbors(VertexId owner) const;
  std::size_t private_degree(VertexId owner) const { return private_neighbors(owner).size(); }

  std::vector<VertexId> owners() const;
  std::size_t private_edge_count() const;

 private:
  Graph public_;
  std::map<VertexId, std::vector<Edge>> private_;
};

/// Read-only overlay of the public graph and one owner's private edges.
///
/// Holds a reference to the public graph; the ppg must outlive the view.
class PersonalizedView {
 public:
  PersonalizedView(const PublicPrivateGraph& ppg, VertexId owner);

  VertexId owner() const { return owner_; }
  const Graph& public_graph() const { return *public_; }

  bool has_vertex(VertexId v) const { return public_->has_vertex(v); }
  bool has_edge(VertexId a, VertexId b) const;
  /// Sorted union of public and private neighbors.
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::size_t edge_count() const { return public_->edge_count() + private_count_; }

  /// Deep copy as a standalone graph.
  Graph materialize() const;

 private:
  const Graph* public_;
  VertexId owner_;
  std::unordered_map<VertexId, std::vector<VertexId>> extra_;
  std::size_t private_count_ = 0;
};

/// g_u = (V, E ∪ E_u). Throws GraphError for an unknown owner.
PersonalizedView personalized_view(const PublicPrivateGraph& ppg, VertexId owner);

}  // namespace trussmaint
