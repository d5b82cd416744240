#include "trussmaint/pp_graph.hpp"

#include <algorithm>

namespace trussmaint {

void PublicPrivateGraph::add_private_edge(VertexId owner, VertexId a, VertexId b) {
  if (!public_.has_vertex(owner)) throw GraphError("unknown owner " + std::to_string(owner));
  const Edge e = Edge::make(a, b);
  if (!public_.has_vertex(e.u) || !public_.has_vertex(e.v)) {
    throw GraphError("private edge " + to_string(e) + " has an endpoint outside the public vertex set");
  }
  if (public_.has_edge(e)) {
    throw GraphError("private edge " + to_string(e) + " of owner " + std::to_string(owner) +
                     " is already public");
  }
  auto& list = private_[owner];
  auto it = std::lower_bound(list.begin(), list.end(), e);
  if (it != list.end() && *it == e) {
    throw GraphError("duplicate private edge " + to_string(e) + " for owner " + std::to_string(owner));
  }
  list.insert(it, e);
}

std::span<const Edge> PublicPrivateGraph::private_edges(VertexId owner) const {
  auto it = private_.find(owner);
  if (it == private_.end()) return {};
  return it->second;
}

std::vector<VertexId> PublicPrivateGraph::private_neighbors(VertexId owner) const {
  std::vector<VertexId> out;
  for (const Edge& e : private_edges(owner)) {
    if (e.u == owner) out.push_back(e.v);
    if (e.v == owner) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> PublicPrivateGraph::owners() const {
  std::vector<VertexId> out;
  for (const auto& [owner, list] : private_) {
    if (!list.empty()) out.push_back(owner);
  }
  return out;
}

std::size_t PublicPrivateGraph::private_edge_count() const {
  std::size_t n = 0;
  for (const auto& [owner, list] : private_) n += list.size();
  return n;
}

PersonalizedView::PersonalizedView(const PublicPrivateGraph& ppg, VertexId owner)
    : public_(&ppg.public_graph()), owner_(owner) {
  if (!public_->has_vertex(owner)) throw GraphError("unknown owner " + std::to_string(owner));
  for (const Edge& e : ppg.private_edges(owner)) {
    extra_[e.u].push_back(e.v);
    extra_[e.v].push_back(e.u);
    ++private_count_;
  }
  for (auto& [v, list] : extra_) std::sort(list.begin(), list.end());
}

bool PersonalizedView::has_edge(VertexId a, VertexId b) const {
  if (public_->has_edge(a, b)) return true;
  auto it = extra_.find(a);
  return it != extra_.end() && std::binary_search(it->second.begin(), it->second.end(), b);
}

std::vector<VertexId> PersonalizedView::neighbors(VertexId v) const {
  const auto pub = public_->neighbors(v);
  auto it = extra_.find(v);
  if (it == extra_.end()) return {pub.begin(), pub.end()};
  std::vector<VertexId> out;
  out.reserve(pub.size() + it->second.size());
  std::merge(pub.begin(), pub.end(), it->second.begin(), it->second.end(), std::back_inserter(out));
  return out;
}

std::size_t PersonalizedView::degree(VertexId v) const {
  std::size_t d = public_->degree(v);
  auto it = extra_.find(v);
  return it == extra_.end() ? d : d + it->second.size();
}

Graph PersonalizedView::materialize() const {
  Graph g = *public_;
  for (const auto& [v, list] : extra_) {
    for (VertexId w : list) {
      if (v < w) g.add_edge(v, w);
    }
  }
  return g;
}

PersonalizedView personalized_view(const PublicPrivateGraph& ppg, VertexId owner) {
  return PersonalizedView(ppg, owner);
}

}  // namespace trussmaint
