#include "trussmaint/generator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace trussmaint {

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0 && p <= 1)) throw GraphError(std::string(name) + " must lie in [0, 1]");
}

template <class T>
std::vector<T> take_random(std::vector<T> pool, std::size_t count, std::mt19937_64& rng) {
  if (pool.size() <= count) return pool;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

PublicPrivateGraph degree_binned(const GeneratorParams& params, std::mt19937_64& rng) {
  const Graph original = erdos_renyi(params.n, params.p_public, rng);
  const std::vector<VertexId> targets = sample_degree_bins(original, params.bins, params.per_bin, rng);
  std::vector<char> in_target(params.n, 0);
  for (VertexId v : targets) in_target[v] = 1;

  Graph pub = original;
  std::vector<std::pair<VertexId, Edge>> privatized;
  original.for_each_edge([&](const Edge& e) {
    if (!in_target[e.u] && !in_target[e.v]) return;
    // Both ends sampled: the lower id owns it.
    privatized.emplace_back(in_target[e.u] ? e.u : e.v, e);
    pub.remove_edge(e);
  });
  PublicPrivateGraph ppg(std::move(pub));
  for (const auto& [owner, e] : privatized) ppg.add_private_edge(owner, e.u, e.v);
  return ppg;
}

PublicPrivateGraph planted(const GeneratorParams& params, std::mt19937_64& rng) {
  if (params.min_private > params.max_private) throw GraphError("min_private exceeds max_private");
  if (params.owners > params.n) throw GraphError("more owners than vertices");
  check_probability(params.clique_probability, "clique_probability");

  PublicPrivateGraph ppg(erdos_renyi(params.n, params.p_public, rng));
  const Graph& pub = ppg.public_graph();
  std::vector<VertexId> all(params.n);
  for (VertexId v = 0; v < params.n; ++v) all[v] = v;
  const std::vector<VertexId> owners = take_random(all, params.owners, rng);

  std::uniform_int_distribution<std::size_t> degree(params.min_private, params.max_private);
  std::bernoulli_distribution clique(params.clique_probability);
  for (VertexId owner : owners) {
    std::vector<VertexId> candidates;
    for (VertexId w = 0; w < params.n; ++w) {
      if (w != owner && !pub.has_edge(owner, w)) candidates.push_back(w);
    }
    const std::vector<VertexId> picks = take_random(std::move(candidates), degree(rng), rng);
    for (VertexId w : picks) ppg.add_private_edge(owner, owner, w);
    if (!clique(rng)) continue;
    for (std::size_t i = 0; i < picks.size(); ++i) {
      for (std::size_t j = i + 1; j < picks.size(); ++j) {
        if (!pub.has_edge(picks[i], picks[j])) ppg.add_private_edge(owner, picks[i], picks[j]);
      }
    }
  }
  return ppg;
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
  check_probability(p, "p");
  Graph g(n);
  if (p == 0) return g;
  std::bernoulli_distribution coin(p);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

Graph community_graph(std::size_t n, std::size_t communities, std::size_t size, double p_in, double p_out,
                      std::uint64_t seed) {
  if (communities * size > n) throw GraphError("communities do not fit in n vertices");
  check_probability(p_in, "p_in");
  std::mt19937_64 rng(seed);
  Graph g = erdos_renyi(n, p_out, rng);
  std::bernoulli_distribution coin(p_in);
  for (std::size_t c = 0; c < communities; ++c) {
    const auto base = static_cast<VertexId>(c * size);
    for (VertexId a = base; a < base + size; ++a) {
      for (VertexId b = a + 1; b < base + size; ++b) {
        if (!g.has_edge(a, b) && coin(rng)) g.add_edge(a, b);
      }
    }
  }
  return g;
}

std::size_t degree_bin(std::size_t d, std::size_t max_degree, std::size_t bins) {
  if (bins == 0) throw GraphError("bin count must be positive");
  if (d == 0 || max_degree == 0) return 0;
  // B_i holds (i-1)/B < d/max <= i/B.
  const std::size_t i = (d * bins + max_degree - 1) / max_degree;
  return std::min(i, bins) - 1;
}

std::vector<VertexId> sample_degree_bins(const Graph& g, std::size_t bins, std::size_t per_bin,
                                         std::mt19937_64& rng) {
  std::size_t max_degree = 0;
  for (VertexId v : g.vertices()) max_degree = std::max(max_degree, g.degree(v));
  std::vector<std::vector<VertexId>> grouped(bins);
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > 0) grouped[degree_bin(g.degree(v), max_degree, bins)].push_back(v);
  }
  std::vector<VertexId> out;
  for (auto& bin : grouped) {
    const auto picked = take_random(std::move(bin), per_bin, rng);
    out.insert(out.end(), picked.begin(), picked.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> sample_degree_grid(const PublicPrivateGraph& ppg, std::span<const VertexId> candidates,
                                         std::size_t bins, std::size_t per_bin, std::mt19937_64& rng) {
  const Graph& g = ppg.public_graph();
  std::size_t max_pub = 0, max_priv = 0;
  for (VertexId v : candidates) {
    max_pub = std::max(max_pub, g.degree(v));
    max_priv = std::max(max_priv, ppg.private_degree(v));
  }
  std::map<std::pair<std::size_t, std::size_t>, std::vector<VertexId>> grid;
  for (VertexId v : candidates) {
    grid[{degree_bin(g.degree(v), max_pub, bins), degree_bin(ppg.private_degree(v), max_priv, bins)}].push_back(v);
  }
  std::vector<VertexId> out;
  for (auto& [cell, members] : grid) {
    const auto picked = take_random(std::move(members), per_bin, rng);
    out.insert(out.end(), picked.begin(), picked.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

PublicPrivateGraph generate_synthetic_ppg(const GeneratorParams& params) {
  if (params.n == 0) throw GraphError("n must be at least 1");
  check_probability(params.p_public, "p_public");
  std::mt19937_64 rng(params.seed);
  return params.model == PrivateModel::kDegreeBinned ? degree_binned(params, rng) : planted(params, rng);
}

std::vector<Operation> random_operations(const Graph& g, const IdMap& ids, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> verts;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::uint64_t next_id = 0;
  for (VertexId v : g.vertices()) {
    verts.push_back(ids.external(v));
    next_id = std::max(next_id, ids.external(v) + 1);
  }
  g.for_each_edge([&](const Edge& e) {
    const auto a = ids.external(e.u), b = ids.external(e.v);
    edges.emplace(std::min(a, b), std::max(a, b));
  });
  std::sort(verts.begin(), verts.end());
  if (verts.empty()) throw GraphError("random_operations needs at least one vertex");

  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::vector<Operation> ops;
  while (ops.size() < count) {
    const std::size_t roll = pick(100);
    if (roll < 35 && verts.size() >= 2) {
      for (int attempt = 0; attempt < 100; ++attempt) {
        auto a = verts[pick(verts.size())], b = verts[pick(verts.size())];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!edges.emplace(a, b).second) continue;
        ops.push_back({Operation::Kind::kInsertEdge, a, {b}});
        break;
      }
    } else if (roll < 65 && !edges.empty()) {
      auto it = std::next(edges.begin(), static_cast<std::ptrdiff_t>(pick(edges.size())));
      ops.push_back({Operation::Kind::kDeleteEdge, it->first, {it->second}});
      edges.erase(it);
    } else if (roll < 85 && !verts.empty()) {
      const std::uint64_t v = next_id++;
      std::vector<std::uint64_t> nbrs = verts;
      std::shuffle(nbrs.begin(), nbrs.end(), rng);
      nbrs.resize(1 + pick(std::min<std::size_t>(8, nbrs.size())));
      std::sort(nbrs.begin(), nbrs.end());
      for (auto w : nbrs) edges.emplace(std::min(v, w), std::max(v, w));
      verts.insert(std::upper_bound(verts.begin(), verts.end(), v), v);
      ops.push_back({Operation::Kind::kInsertNode, v, std::move(nbrs)});
    } else if (roll >= 85 && verts.size() > 2) {
      const std::uint64_t v = verts[pick(verts.size())];
      std::erase_if(edges, [&](const auto& e) { return e.first == v || e.second == v; });
      verts.erase(std::find(verts.begin(), verts.end(), v));
      ops.push_back({Operation::Kind::kDeleteNode, v, {}});
    }
  }
  return ops;
}

}  // namespace trussmaint
