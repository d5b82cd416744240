#include "trussmaint/edge_update.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace trussmaint {

bool LevelBuckets::add(Trussness level, const Edge& e) {
  if (!members_.insert(e.key()).second) return false;
  if (lists_.size() <= level) lists_.resize(static_cast<std::size_t>(level) + 1);
  lists_[level].push_back(e);
  return true;
}

std::span<const Edge> LevelBuckets::at(Trussness level) const {
  if (level >= lists_.size()) return {};
  return lists_[level];
}

std::vector<Edge> triangle_connected_scope(const Graph& g, const TrussIndex& idx,
                                           std::span<const Edge> seeds, Trussness k) {
  std::vector<Edge> scope;
  std::unordered_set<std::uint64_t> seen;
  for (const Edge& s : seeds) {
    if (idx.at(s) != k) {
      throw GraphError("scope seed " + to_string(s) + " is not at level " + std::to_string(k));
    }
    if (seen.insert(s.key()).second) scope.push_back(s);
  }
  for (std::size_t head = 0; head < scope.size(); ++head) {
    const Edge e = scope[head];
    for_each_common(g.neighbors(e.u), g.neighbors(e.v), [&](VertexId w) {
      const Edge f = Edge::make(e.u, w);
      const Edge h = Edge::make(e.v, w);
      const Trussness tf = idx.at(f);
      const Trussness th = idx.at(h);
      if (tf < k || th < k) return;
      if (tf == k && seen.insert(f.key()).second) scope.push_back(f);
      if (th == k && seen.insert(h.key()).second) scope.push_back(h);
    });
  }
  return scope;
}

namespace detail {

namespace {

enum class Direction { kPromote, kDemote };

// Peels the scope at level k. Support counts only triangles whose other two
// edges are at level >= k and not yet peeled.
void peel_scope(const Graph& g, TrussIndex& idx, Trussness k, std::span<const Edge> seeds,
                Direction dir, UpdateTrace* trace) {
  const std::vector<Edge> scope = triangle_connected_scope(g, idx, seeds, k);
  if (trace) {
    auto& rec = trace->scopes[k];
    rec.insert(rec.end(), scope.begin(), scope.end());
  }

  std::unordered_map<std::uint64_t, std::uint32_t> pos;
  pos.reserve(scope.size() * 2);
  for (std::uint32_t i = 0; i < scope.size(); ++i) pos.emplace(scope[i].key(), i);

  // An edge survives at level k with at least `need` qualifying triangles.
  const std::uint32_t need = dir == Direction::kPromote ? k - 1 : k - 2;

  auto for_each_qualifying = [&](const Edge& e, auto&& f) {
    for_each_common(g.neighbors(e.u), g.neighbors(e.v), [&](VertexId w) {
      const Edge a = Edge::make(e.u, w);
      const Edge b = Edge::make(e.v, w);
      if (idx.at(a) >= k && idx.at(b) >= k) f(a, b);
    });
  };

  std::vector<std::uint32_t> support(scope.size(), 0);
  std::vector<char> peeled(scope.size(), 0);   // queued for removal
  std::vector<char> removed(scope.size(), 0);  // its triangles already discounted
  std::vector<std::uint32_t> stack;
  for (std::uint32_t i = 0; i < scope.size(); ++i) {
    for_each_qualifying(scope[i], [&](const Edge&, const Edge&) { ++support[i]; });
    if (support[i] < need) {
      peeled[i] = 1;
      stack.push_back(i);
    }
  }

  auto scope_index = [&](const Edge& e) -> std::int64_t {
    auto it = pos.find(e.key());
    return it == pos.end() ? -1 : static_cast<std::int64_t>(it->second);
  };

  while (!stack.empty()) {
    const std::uint32_t i = stack.back();
    stack.pop_back();
    removed[i] = 1;
    for_each_qualifying(scope[i], [&](const Edge& a, const Edge& b) {
      const std::int64_t ia = scope_index(a);
      const std::int64_t ib = scope_index(b);
      if ((ia >= 0 && removed[ia]) || (ib >= 0 && removed[ib])) return;
      for (std::int64_t j : {ia, ib}) {
        if (j < 0) continue;
        --support[j];
        if (!peeled[j] && support[j] < need) {
          peeled[j] = 1;
          stack.push_back(static_cast<std::uint32_t>(j));
        }
      }
    });
  }

  for (std::uint32_t i = 0; i < scope.size(); ++i) {
    const bool moves = dir == Direction::kPromote ? !peeled[i] : peeled[i] != 0;
    if (!moves) continue;
    idx.set(scope[i], dir == Direction::kPromote ? k + 1 : k - 1);
    if (trace) trace->changed.push_back(scope[i]);
  }
}

}  // namespace

void promote_level(const Graph& g, TrussIndex& idx, Trussness k, std::span<const Edge> seeds,
                   UpdateTrace* trace) {
  peel_scope(g, idx, k, seeds, Direction::kPromote, trace);
}

void demote_level(const Graph& g, TrussIndex& idx, Trussness k, std::span<const Edge> seeds,
                  UpdateTrace* trace) {
  peel_scope(g, idx, k, seeds, Direction::kDemote, trace);
}

Trussness new_edge_lower_bound(const Graph& g, const TrussIndex& idx, VertexId a, VertexId b) {
  std::vector<Trussness> weights;
  for_each_common(g.neighbors(a), g.neighbors(b), [&](VertexId w) {
    weights.push_back(std::min(idx.at(a, w), idx.at(b, w)));
  });
  std::sort(weights.begin(), weights.end(), std::greater<>());
  Trussness best = kTrussFloor;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    // i+1 wedges reach weight >= weights[i], enough for k = i+3.
    best = std::max(best, std::min<Trussness>(weights[i], static_cast<Trussness>(i + 3)));
  }
  return best;
}

}  // namespace detail

namespace {

void record_buckets(const LevelBuckets& buckets, UpdateTrace* trace) {
  if (!trace) return;
  for (Trussness k = 0; k <= buckets.max_level(); ++k) {
    const auto list = buckets.at(k);
    if (!list.empty()) trace->buckets[k].assign(list.begin(), list.end());
  }
}

}  // namespace

void insert_edge(Graph& g, TrussIndex& idx, Edge e, UpdateTrace* trace) {
  e = Edge::make(e.u, e.v);
  if (!g.has_vertex(e.u) || !g.has_vertex(e.v)) {
    throw GraphError("insert_edge: edge " + to_string(e) + " has an unknown endpoint");
  }
  if (g.has_edge(e)) throw GraphError("insert_edge: duplicate edge " + to_string(e));

  const Trussness low = detail::new_edge_lower_bound(g, idx, e.u, e.v);

  LevelBuckets buckets;
  buckets.add(low, e);
  // An old edge can rise to k+1 through the new triangle only if the other
  // old edge is already at >= k and the new edge can reach k+1.
  for_each_common(g.neighbors(e.u), g.neighbors(e.v), [&](VertexId w) {
    const Edge a = Edge::make(e.u, w);
    const Edge b = Edge::make(e.v, w);
    const Trussness ta = idx.at(a);
    const Trussness tb = idx.at(b);
    if (ta <= low && tb >= ta) buckets.add(ta, a);
    if (tb <= low && ta >= tb) buckets.add(tb, b);
  });

  g.add_edge(e);
  idx.set(e, low);
  record_buckets(buckets, trace);

  // Descending: a level-k promotion never feeds a lower level's candidates.
  for (Trussness k = buckets.max_level(); k >= kTrussFloor; --k) {
    const auto seeds = buckets.at(k);
    if (!seeds.empty()) detail::promote_level(g, idx, k, seeds, trace);
  }
  if (trace) std::erase(trace->changed, e);
}

void delete_edge(Graph& g, TrussIndex& idx, Edge e, UpdateTrace* trace) {
  e = Edge::make(e.u, e.v);
  if (!g.has_edge(e)) throw GraphError("delete_edge: missing edge " + to_string(e));
  const Trussness top = idx.at(e);

  LevelBuckets buckets;
  for_each_common(g.neighbors(e.u), g.neighbors(e.v), [&](VertexId w) {
    const Edge a = Edge::make(e.u, w);
    const Edge b = Edge::make(e.v, w);
    const Trussness ta = idx.at(a);
    const Trussness tb = idx.at(b);
    if (ta <= top && tb >= ta) buckets.add(ta, a);
    if (tb <= top && ta >= tb) buckets.add(tb, b);
  });

  g.remove_edge(e);
  idx.erase(e);
  record_buckets(buckets, trace);

  // Ascending: a level-k demotion never feeds a higher level's candidates.
  for (Trussness k = kTrussFloor; k <= buckets.max_level(); ++k) {
    const auto seeds = buckets.at(k);
    if (!seeds.empty()) detail::demote_level(g, idx, k, seeds, trace);
  }
}

}  // namespace trussmaint
