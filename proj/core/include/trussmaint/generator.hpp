#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "trussmaint/graph.hpp"
#include "trussmaint/io.hpp"
#include "trussmaint/pp_graph.hpp"

namespace trussmaint {

enum class PrivateModel {
  kDegreeBinned,  // sample owners by degree bins, privatize all their edges
  kPlanted,        // keep public edges, add private stars or cliques per owner
};

struct GeneratorParams {
  std::size_t n = 1000;
  double p_public = 0.01;
  PrivateModel model = PrivateModel::kDegreeBinned;
  std::uint64_t seed = 1;

  // kDegreeBinned
  std::size_t bins = 40;
  std::size_t per_bin = 5;

  // kPlanted
  std::size_t owners = 100;
  std::size_t min_private = 1;
  std::size_t max_private = 20;
  double clique_probability = 0.3;  // otherwise a star around the owner
};

/// Throws GraphError on invalid parameters. Output depends only on params.
PublicPrivateGraph generate_synthetic_ppg(const GeneratorParams& params);

Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng);

/// G(n, p_out) plus `communities` disjoint groups of `size` consecutive
/// vertices whose inner pairs are linked with probability p_in.
Graph community_graph(std::size_t n, std::size_t communities, std::size_t size, double p_in, double p_out,
                      std::uint64_t seed);

/// Bin of degree d among `bins` equal slices of (0, max_degree]. Degree 0
/// shares the first bin.
std::size_t degree_bin(std::size_t d, std::size_t max_degree, std::size_t bins);

/// Up to per_bin vertices from each degree bin; vertices of degree 0 are
/// skipped. Sorted.
std::vector<VertexId> sample_degree_bins(const Graph& g, std::size_t bins, std::size_t per_bin,
                                         std::mt19937_64& rng);

/// Up to per_bin candidates from each (public degree, private degree) bin
/// of a bins x bins grid. Sorted.
std::vector<VertexId> sample_degree_grid(const PublicPrivateGraph& ppg, std::span<const VertexId> candidates,
                                         std::size_t bins, std::size_t per_bin, std::mt19937_64& rng);

/// A valid stream of `count` random updates against g (external ids from
/// ids). New vertices get fresh external ids above every existing one.
std::vector<Operation> random_operations(const Graph& g, const IdMap& ids, std::size_t count, std::uint64_t seed);

}  // namespace trussmaint
