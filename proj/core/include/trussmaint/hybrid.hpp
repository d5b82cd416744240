#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "trussmaint/decomposition.hpp"
#include "trussmaint/features.hpp"
#include "trussmaint/forest.hpp"
#include "trussmaint/io.hpp"
#include "trussmaint/pp_graph.hpp"
#include "trussmaint/truss_index.hpp"

namespace trussmaint {

/// Result of materializing one owner's view on a scratch copy of the
/// public graph and index. elapsed covers the updates only, not the copy.
struct StrategyRun {
  Graph graph;
  TrussIndex index;
  std::chrono::nanoseconds elapsed{};
};

/// Removes u with its public edges, then inserts it back with its public
/// and incident private edges as a new vertex. Private edges of the owner
/// that do not touch u are added afterwards by edge insertion.
StrategyRun run_vertex_pp(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u);

/// Inserts the owner's private edges one at a time.
StrategyRun run_edge_pp(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u);

StrategyRun run_strategy(Strategy s, const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u);

struct TrainParams {
  ForestParams forest;
  std::size_t repetitions = 3;
  double margin = 0.10;  // relative |T_V - T_E| below which a sample is dropped
};

struct TrainingRow {
  VertexId node = 0;
  double vertex_ms = 0;
  double edge_ms = 0;
  std::optional<Strategy> label;  // empty inside the margin
  FeatureVector features{};
};

/// Median-of-repetitions timing of both strategies on u. Throws if the two
/// strategies disagree on the resulting index.
TrainingRow measure_node(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u,
                         std::size_t repetitions, double margin);

struct TrainResult {
  ForestModel model;
  std::vector<TrainingRow> rows;
  std::string warning;  // set when the model is constant
};

/// Fits on the labeled rows only. Throws ModelError if none are labeled.
TrainResult fit_rows(std::vector<TrainingRow> rows, const ForestParams& params);

TrainResult train(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, std::span<const VertexId> sample,
                  const TrainParams& params);

inline Strategy predict(const ForestModel& model, const FeatureVector& fv) { return model.predict(fv); }

/// "node,T_V_ms,T_E_ms,label,<feature names>"; unlabeled rows say "none".
/// Node ids are written through ids when given.
void write_training_csv(std::ostream& out, std::span<const TrainingRow> rows, const IdMap* ids = nullptr);

enum class StrategyChoice { kAuto, kVertex, kEdge };

struct QueryAnswer {
  Graph truss;
  Strategy strategy = Strategy::kEdge;
  std::chrono::nanoseconds elapsed{};
};

/// Updates a scratch index for u's view with the chosen strategy, then
/// extracts the k-truss. kAuto needs a model.
QueryAnswer answer_query(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, const ForestModel* model,
                         VertexId u, Trussness k, StrategyChoice choice = StrategyChoice::kAuto,
                         QueryScope scope = QueryScope::kGlobal);

}  // namespace trussmaint
