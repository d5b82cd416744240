#include "trussmaint/features.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "trussmaint/node_update.hpp"

namespace trussmaint {

const std::array<std::string_view, kFeatureCount>& feature_names() {
  static const std::array<std::string_view, kFeatureCount> names{
      "public_degree",    "private_degree",   "triangles_public", "triangles_private",
      "triangles_pp",     "public_truss_sum", "public_truss_max", "low_sum",
      "low_max",          "up_sum",           "up_max",
  };
  return names;
}

namespace {

// Triangles at u in the graph given by a sorted-neighbor callback.
template <class NeighborsOf>
std::size_t triangles_with(VertexId u, NeighborsOf&& neighbors_of) {
  const std::vector<VertexId> nu = neighbors_of(u);
  std::size_t count = 0;
  for (VertexId x : nu) {
    const std::vector<VertexId> nx = neighbors_of(x);
    for_each_common(std::span<const VertexId>(nu), std::span<const VertexId>(nx), [&](VertexId y) {
      if (x < y) ++count;
    });
  }
  return count;
}

}  // namespace

FeatureVector extract_features(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u) {
  const Graph& g = ppg.public_graph();
  const auto public_nbrs = g.neighbors(u);  // throws for unknown u
  const std::vector<VertexId> private_nbrs = ppg.private_neighbors(u);

  FeatureVector f{};
  f[0] = static_cast<double>(public_nbrs.size());
  f[1] = static_cast<double>(private_nbrs.size());
  f[2] = static_cast<double>(triangles_at(g, u));

  // Private graph G_u alone.
  std::unordered_map<VertexId, std::vector<VertexId>> private_adj;
  for (const Edge& e : ppg.private_edges(u)) {
    private_adj[e.u].push_back(e.v);
    private_adj[e.v].push_back(e.u);
  }
  for (auto& [v, list] : private_adj) std::sort(list.begin(), list.end());
  f[3] = static_cast<double>(triangles_with(u, [&](VertexId v) {
    auto it = private_adj.find(v);
    return it == private_adj.end() ? std::vector<VertexId>{} : it->second;
  }));

  const PersonalizedView view = personalized_view(ppg, u);
  f[4] = static_cast<double>(triangles_with(u, [&](VertexId v) { return view.neighbors(v); }));

  double truss_sum = 0, truss_max = 0;
  for (VertexId w : public_nbrs) {
    const double t = public_idx.at(u, w);
    truss_sum += t;
    truss_max = std::max(truss_max, t);
  }
  f[5] = truss_sum;
  f[6] = truss_max;

  std::vector<VertexId> all(public_nbrs.begin(), public_nbrs.end());
  all.insert(all.end(), private_nbrs.begin(), private_nbrs.end());
  if (all.empty()) {
    f[7] = f[8] = f[9] = f[10] = kTrussFloor;
    return f;
  }
  const auto bounds = compute_bound_pairs(g, public_idx, u, incident_edges(u, all));
  for (const BoundPair& b : bounds) {
    f[7] += b.low;
    f[8] = std::max<double>(f[8], b.low);
    f[9] += b.up;
    f[10] = std::max<double>(f[10], b.up);
  }
  return f;
}

}  // namespace trussmaint
