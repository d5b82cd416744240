#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "trussmaint/pp_graph.hpp"
#include "trussmaint/truss_index.hpp"

namespace trussmaint {

inline constexpr std::size_t kFeatureCount = 11;

using FeatureVector = std::array<double, kFeatureCount>;

/// Column order of FeatureVector:
///   public_degree, private_degree,
///   triangles_public, triangles_private, triangles_pp,
///   public_truss_sum, public_truss_max,
///   low_sum, low_max, up_sum, up_max
const std::array<std::string_view, kFeatureCount>& feature_names();

/// Node features used to choose between the two update strategies.
///
/// public_idx must be the index of the public graph. Private degree and the
/// bound features consider only private edges incident to u. The bound
/// features come from compute_bounds over all of u's public and private
/// edges; a vertex with no edges at all gets 2 for each of them.
FeatureVector extract_features(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u);

}  // namespace trussmaint
