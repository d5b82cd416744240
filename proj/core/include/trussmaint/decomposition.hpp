#pragma once

#include <cstdint>
#include <unordered_map>

#include "trussmaint/graph.hpp"
#include "trussmaint/pp_graph.hpp"
#include "trussmaint/truss_index.hpp"

namespace trussmaint {

/// Edge -> number of triangles containing it.
using SupportMap = std::unordered_map<Edge, std::uint32_t, EdgeHash>;

SupportMap compute_supports(const Graph& g);

/// Peeling truss decomposition. Edges are peeled in ascending support with
/// ties broken by canonical edge order; the input graph is left untouched.
TrussIndex truss_decomposition(const Graph& g);

/// Edges with trussness >= k and their endpoints. Throws for k < 2.
Graph extract_ktruss(const TrussIndex& idx, const Graph& g, Trussness k);

enum class QueryScope {
  kGlobal,          // the whole k-truss of the owner's view
  kOwnerComponent,  // only connected components that contain the owner
};

/// k-truss of the owner's personalized graph read off an index that already
/// reflects that graph.
Graph query_ktruss(const PublicPrivateGraph& ppg, VertexId owner, Trussness k,
                   const TrussIndex& updated_index, QueryScope scope = QueryScope::kGlobal);

}  // namespace trussmaint
