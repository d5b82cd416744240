#include "trussmaint/truss_index.hpp"

#include <algorithm>

namespace trussmaint {

Trussness TrussIndex::at(const Edge& e) const {
  auto it = tau_.find(e.key());
  if (it == tau_.end()) throw GraphError("edge " + to_string(e) + " not in truss index");
  return it->second;
}

std::optional<Trussness> TrussIndex::find(const Edge& e) const {
  auto it = tau_.find(e.key());
  if (it == tau_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Edge, Trussness>> TrussIndex::sorted_entries() const {
  std::vector<std::pair<std::uint64_t, Trussness>> raw(tau_.begin(), tau_.end());
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<Edge, Trussness>> out;
  out.reserve(raw.size());
  for (const auto& [k, t] : raw) out.emplace_back(Edge::from_key(k), t);
  return out;
}

Trussness TrussIndex::max_trussness() const {
  Trussness m = 0;
  for (const auto& [k, t] : tau_) m = std::max(m, t);
  return m;
}

Trussness vertex_trussness(const Graph& g, const TrussIndex& idx, VertexId v) {
  Trussness m = 0;
  for (VertexId w : g.neighbors(v)) m = std::max(m, idx.at(v, w));
  return m;
}

std::vector<Edge> index_diff(const TrussIndex& a, const TrussIndex& b) {
  std::vector<Edge> out;
  a.for_each([&](const Edge& e, Trussness t) {
    auto other = b.find(e);
    if (!other || *other != t) out.push_back(e);
  });
  b.for_each([&](const Edge& e, Trussness) {
    if (!a.contains(e)) out.push_back(e);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trussmaint
