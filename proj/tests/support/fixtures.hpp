#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "support/oracle.hpp"
#include "trussmaint/pp_graph.hpp"

namespace trussmaint::testing {

// Public K4 on {1,2,3,4} with a tail 4-6-7-3 and vertices 0 and 5.
// Owner 5 privately links to 1..4, turning {1..5} into a K5.
// Owner 3 privately links to 6 and 0; those edges must stay out of 5's view.
inline PublicPrivateGraph k4_tail_fixture() {
  Graph g(8);
  for (VertexId a = 1; a <= 4; ++a) {
    for (VertexId b = a + 1; b <= 4; ++b) g.add_edge(a, b);
  }
  g.add_edge(4, 6);
  g.add_edge(6, 7);
  g.add_edge(3, 7);
  PublicPrivateGraph ppg(std::move(g));
  for (VertexId w = 1; w <= 4; ++w) ppg.add_private_edge(5, 5, w);
  ppg.add_private_edge(3, 3, 6);
  ppg.add_private_edge(3, 3, 0);
  return ppg;
}

// Public G(n, p); each listed owner gets `per_owner` private edges, about
// three quarters incident to the owner and the rest anywhere.
inline PublicPrivateGraph random_ppg(std::size_t n, double p, std::size_t owners, std::size_t per_owner,
                                     std::uint64_t seed) {
  PublicPrivateGraph ppg(random_graph(n, p, seed));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  const Graph& g = ppg.public_graph();
  for (std::size_t o = 0; o < owners; ++o) {
    const VertexId owner = pick(rng);
    std::size_t added = 0;
    for (std::size_t attempt = 0; added < per_owner && attempt < 50 * per_owner; ++attempt) {
      const bool incident = rng() % 4 != 0;
      const VertexId a = incident ? owner : pick(rng);
      const VertexId b = pick(rng);
      if (a == b || g.has_edge(a, b)) continue;
      const auto mine = ppg.private_edges(owner);
      if (std::find(mine.begin(), mine.end(), Edge::make(a, b)) != mine.end()) continue;
      ppg.add_private_edge(owner, a, b);
      ++added;
    }
  }
  return ppg;
}

}  // namespace trussmaint::testing
