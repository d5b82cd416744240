#include "trussmaint/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

#include "trussmaint/edge_update.hpp"
#include "trussmaint/node_update.hpp"

namespace trussmaint {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

double to_ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

}  // namespace

StrategyRun run_vertex_pp(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u) {
  const Graph& pub = ppg.public_graph();
  std::vector<VertexId> nbrs(pub.neighbors(u).begin(), pub.neighbors(u).end());
  const auto private_nbrs = ppg.private_neighbors(u);
  nbrs.insert(nbrs.end(), private_nbrs.begin(), private_nbrs.end());
  const std::vector<Edge> incident = incident_edges(u, nbrs);
  std::vector<Edge> detached;
  for (const Edge& e : ppg.private_edges(u)) {
    if (e.u != u && e.v != u) detached.push_back(e);
  }

  StrategyRun run{pub, public_idx, {}};
  const auto start = Clock::now();
  delete_node(run.graph, run.index, u);
  if (incident.empty()) {
    run.graph.add_vertex(u);
  } else {
    insert_node(run.graph, run.index, u, incident);
  }
  for (const Edge& e : detached) insert_edge(run.graph, run.index, e);
  run.elapsed = Clock::now() - start;
  return run;
}

StrategyRun run_edge_pp(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u) {
  const auto edges = ppg.private_edges(u);
  StrategyRun run{ppg.public_graph(), public_idx, {}};
  if (!run.graph.has_vertex(u)) throw GraphError("unknown owner " + std::to_string(u));
  const auto start = Clock::now();
  for (const Edge& e : edges) insert_edge(run.graph, run.index, e);
  run.elapsed = Clock::now() - start;
  return run;
}

StrategyRun run_strategy(Strategy s, const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u) {
  return s == Strategy::kVertex ? run_vertex_pp(ppg, public_idx, u) : run_edge_pp(ppg, public_idx, u);
}

TrainingRow measure_node(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, VertexId u,
                         std::size_t repetitions, double margin) {
  if (repetitions == 0) throw GraphError("measure_node: repetitions must be positive");
  TrainingRow row;
  row.node = u;
  row.features = extract_features(ppg, public_idx, u);

  std::vector<double> tv, te;
  for (std::size_t r = 0; r < repetitions; ++r) {
    StrategyRun v = run_vertex_pp(ppg, public_idx, u);
    StrategyRun e = run_edge_pp(ppg, public_idx, u);
    if (r == 0 && !(v.index == e.index)) {
      throw GraphError("strategies disagree on the index for owner " + std::to_string(u));
    }
    tv.push_back(to_ms(v.elapsed));
    te.push_back(to_ms(e.elapsed));
  }
  row.vertex_ms = median(std::move(tv));
  row.edge_ms = median(std::move(te));
  const double larger = std::max(row.vertex_ms, row.edge_ms);
  if (larger > 0 && std::abs(row.vertex_ms - row.edge_ms) >= margin * larger) {
    row.label = row.vertex_ms < row.edge_ms ? Strategy::kVertex : Strategy::kEdge;
  }
  return row;
}

TrainResult fit_rows(std::vector<TrainingRow> rows, const ForestParams& params) {
  std::vector<FeatureVector> x;
  std::vector<Strategy> y;
  for (const auto& row : rows) {
    if (!row.label) continue;
    x.push_back(row.features);
    y.push_back(*row.label);
  }
  if (x.empty()) throw ModelError("no labeled training rows (all inside the timing margin)");

  TrainResult result{ForestModel::fit(x, y, params), std::move(rows), {}};
  if (result.model.is_constant()) {
    result.warning = "all labeled samples are " + std::string(to_string(y.front())) + "; model is constant";
  }
  return result;
}

TrainResult train(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, std::span<const VertexId> sample,
                  const TrainParams& params) {
  if (sample.empty()) throw ModelError("empty training sample");
  std::vector<TrainingRow> rows;
  rows.reserve(sample.size());
  for (VertexId u : sample) rows.push_back(measure_node(ppg, public_idx, u, params.repetitions, params.margin));
  return fit_rows(std::move(rows), params.forest);
}

void write_training_csv(std::ostream& out, std::span<const TrainingRow> rows, const IdMap* ids) {
  out << "node,T_V_ms,T_E_ms,label";
  for (auto name : feature_names()) out << ',' << name;
  out << '\n';
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(6) << std::fixed;
  for (const auto& row : rows) {
    out << (ids ? ids->external(row.node) : row.node) << ',' << row.vertex_ms << ',' << row.edge_ms << ','
        << (row.label ? to_string(*row.label) : "none");
    out << std::defaultfloat;
    for (double f : row.features) out << ',' << f;
    out << std::fixed << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

QueryAnswer answer_query(const PublicPrivateGraph& ppg, const TrussIndex& public_idx, const ForestModel* model,
                         VertexId u, Trussness k, StrategyChoice choice, QueryScope scope) {
  if (k < kTrussFloor) throw GraphError("k must be at least 2, got " + std::to_string(k));
  Strategy s = Strategy::kEdge;
  switch (choice) {
    case StrategyChoice::kVertex: s = Strategy::kVertex; break;
    case StrategyChoice::kEdge: s = Strategy::kEdge; break;
    case StrategyChoice::kAuto:
      if (!model) throw ModelError("automatic strategy choice needs a model");
      s = model->predict(extract_features(ppg, public_idx, u));
      break;
  }
  StrategyRun run = run_strategy(s, ppg, public_idx, u);
  return QueryAnswer{query_ktruss(ppg, u, k, run.index, scope), s, run.elapsed};
}

}  // namespace trussmaint
