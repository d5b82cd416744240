#include "trussmaint/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "trussmaint/edge_update.hpp"
#include "trussmaint/node_update.hpp"

namespace trussmaint {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  Graph graph;
  TrussIndex index;
  double ms = 0;
};

Outcome by_node(const Graph& g, const TrussIndex& idx, const InsertionWorkload& w, const std::vector<Edge>& ev) {
  Outcome out{g, idx, 0};
  const auto start = Clock::now();
  insert_node(out.graph, out.index, w.vertex, ev);
  out.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

Outcome by_edges(const Graph& g, const TrussIndex& idx, const InsertionWorkload& w, const std::vector<Edge>& ev) {
  Outcome out{g, idx, 0};
  const auto start = Clock::now();
  if (!out.graph.has_vertex(w.vertex)) out.graph.add_vertex(w.vertex);
  for (const Edge& e : ev) insert_edge(out.graph, out.index, e);
  out.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

std::uint64_t shown(VertexId v, const IdMap* ids) { return ids ? ids->external(v) : v; }

}  // namespace

double median_of(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
}

BenchReport bench_node_vs_edge(const Graph& g, const TrussIndex& idx, std::span<const InsertionWorkload> work,
                               std::size_t repetitions, std::size_t group_count) {
  if (work.empty()) throw BenchError("empty benchmark sample");
  if (repetitions == 0) throw BenchError("repetitions must be positive");
  if (group_count == 0) throw BenchError("group count must be positive");

  BenchReport report;
  report.repetitions = repetitions;
  for (const InsertionWorkload& w : work) {
    if (w.neighbors.empty()) throw BenchError("vertex " + std::to_string(w.vertex) + " has no edges to insert");
    const std::vector<Edge> ev = incident_edges(w.vertex, w.neighbors);

    // Correctness gate before any timing.
    const Outcome a = by_node(g, idx, w, ev);
    const Outcome b = by_edges(g, idx, w, ev);
    if (!(a.graph == b.graph) || !(a.index == b.index)) {
      const auto diff = index_diff(a.index, b.index);
      std::string msg = "node and edge insertion disagree for vertex " + std::to_string(w.vertex) + " on " +
                        std::to_string(diff.size()) + " edges";
      if (!diff.empty()) msg += ", first " + to_string(diff.front());
      throw BenchError(msg);
    }

    std::vector<double> tn, te;
    for (std::size_t r = 0; r < repetitions; ++r) {
      tn.push_back(by_node(g, idx, w, ev).ms);
      te.push_back(by_edges(g, idx, w, ev).ms);
    }
    report.rows.push_back({w.vertex, w.neighbors.size(), median_of(tn), median_of(te)});
  }

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const BenchRow& x, const BenchRow& y) { return x.degree < y.degree; });
  std::vector<double> all_node, all_edge;
  for (const BenchRow& row : report.rows) {
    report.total_node_ms += row.node_ms;
    report.total_edge_ms += row.edge_ms;
    all_node.push_back(row.node_ms);
    all_edge.push_back(row.edge_ms);
  }
  report.median_node_ms = median_of(all_node);
  report.median_edge_ms = median_of(all_edge);
  report.speedup = report.median_node_ms > 0 ? report.median_edge_ms / report.median_node_ms : 0;

  const std::size_t n = report.rows.size();
  const std::size_t groups = std::min(group_count, n);
  for (std::size_t gi = 0; gi < groups; ++gi) {
    const std::size_t lo = gi * n / groups;
    const std::size_t hi = (gi + 1) * n / groups;
    BenchGroup group;
    group.count = hi - lo;
    group.min_degree = report.rows[lo].degree;
    group.max_degree = report.rows[hi - 1].degree;
    std::vector<double> gn, ge;
    for (std::size_t i = lo; i < hi; ++i) {
      gn.push_back(report.rows[i].node_ms);
      ge.push_back(report.rows[i].edge_ms);
    }
    group.median_node_ms = median_of(gn);
    group.median_edge_ms = median_of(ge);
    group.speedup = group.median_node_ms > 0 ? group.median_edge_ms / group.median_node_ms : 0;
    report.groups.push_back(group);
  }
  return report;
}

BenchReport bench_node_vs_edge(const PublicPrivateGraph& ppg, const TrussIndex& public_idx,
                               std::span<const VertexId> sample, std::size_t repetitions,
                               std::size_t group_count) {
  const Graph& g = ppg.public_graph();
  std::vector<InsertionWorkload> work;
  for (VertexId u : sample) {
    if (!g.has_vertex(u)) throw BenchError("unknown vertex " + std::to_string(u));
    if (g.degree(u) != 0) {
      throw BenchError("vertex " + std::to_string(u) + " still has public edges; node insertion needs a new vertex");
    }
    for (const Edge& e : ppg.private_edges(u)) {
      if (e.u != u && e.v != u) {
        throw BenchError("owner " + std::to_string(u) + " has private edge " + to_string(e) + " not incident to it");
      }
    }
    work.push_back({u, ppg.private_neighbors(u)});
  }
  return bench_node_vs_edge(g, public_idx, work, repetitions, group_count);
}

void write_bench_tsv(std::ostream& out, const BenchReport& report, const IdMap* ids) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(6);
  out << "#trussmaint-bench v1 reps=" << report.repetitions << '\n';
  out << "kind\tid\tdegree\tnode_ms\tedge_ms\tspeedup\n";
  for (const BenchRow& row : report.rows) {
    out << "row\t" << shown(row.vertex, ids) << '\t' << row.degree << '\t' << row.node_ms << '\t' << row.edge_ms
        << '\t' << row.speedup() << '\n';
  }
  for (std::size_t i = 0; i < report.groups.size(); ++i) {
    const BenchGroup& gr = report.groups[i];
    out << "group\t" << i + 1 << '\t' << gr.min_degree << '-' << gr.max_degree << '\t' << gr.median_node_ms << '\t'
        << gr.median_edge_ms << '\t' << gr.speedup << '\n';
  }
  out << "median\tall\t" << report.rows.size() << '\t' << report.median_node_ms << '\t' << report.median_edge_ms
      << '\t' << report.speedup << '\n';
  out << "total\tall\t" << report.rows.size() << '\t' << report.total_node_ms << '\t' << report.total_edge_ms << '\t'
      << (report.total_node_ms > 0 ? report.total_edge_ms / report.total_node_ms : 0) << '\n';
  for (const AccuracyRow& a : report.accuracy) {
    out << "accuracy\t" << a.classifier << '\t' << a.samples << '\t' << a.accuracy << "\t\t\n";
  }
  out.flags(flags);
  out.precision(precision);
}

void write_bench_json(std::ostream& out, const BenchReport& report, const IdMap* ids) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    rows.push_back({{"vertex", shown(row.vertex, ids)},
                    {"degree", row.degree},
                    {"node_ms", row.node_ms},
                    {"edge_ms", row.edge_ms},
                    {"speedup", row.speedup()}});
  }
  nlohmann::json groups = nlohmann::json::array();
  for (const BenchGroup& gr : report.groups) {
    groups.push_back({{"min_degree", gr.min_degree},
                      {"max_degree", gr.max_degree},
                      {"count", gr.count},
                      {"median_node_ms", gr.median_node_ms},
                      {"median_edge_ms", gr.median_edge_ms},
                      {"speedup", gr.speedup}});
  }
  nlohmann::json accuracy = nlohmann::json::array();
  for (const AccuracyRow& a : report.accuracy) {
    accuracy.push_back({{"classifier", a.classifier}, {"samples", a.samples}, {"accuracy", a.accuracy}});
  }
  const nlohmann::json doc = {
      {"format", "trussmaint-bench"},
      {"version", 1},
      {"repetitions", report.repetitions},
      {"rows", std::move(rows)},
      {"groups", std::move(groups)},
      {"median", {{"node_ms", report.median_node_ms}, {"edge_ms", report.median_edge_ms}, {"speedup", report.speedup}}},
      {"total", {{"node_ms", report.total_node_ms}, {"edge_ms", report.total_edge_ms}}},
      {"accuracy", std::move(accuracy)},
  };
  out << doc.dump(2) << '\n';
}

}  // namespace trussmaint
