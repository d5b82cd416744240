#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trussmaint/graph.hpp"
#include "trussmaint/io.hpp"
#include "trussmaint/pp_graph.hpp"
#include "trussmaint/truss_index.hpp"

namespace trussmaint {

class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex to insert with its incident edges. The vertex must be absent
/// from the base graph or isolated in it.
struct InsertionWorkload {
  VertexId vertex = 0;
  std::vector<VertexId> neighbors;
};

struct BenchRow {
  VertexId vertex = 0;
  std::size_t degree = 0;
  double node_ms = 0;  // median over repetitions
  double edge_ms = 0;
  double speedup() const { return node_ms > 0 ? edge_ms / node_ms : 0; }
};

struct BenchGroup {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t count = 0;
  double median_node_ms = 0;
  double median_edge_ms = 0;
  double speedup = 0;  // median_edge_ms / median_node_ms
};

struct AccuracyRow {
  std::string classifier;
  std::size_t samples = 0;
  double accuracy = 0;
};

struct BenchReport {
  std::size_t repetitions = 0;
  std::vector<BenchRow> rows;      // ascending degree
  std::vector<BenchGroup> groups;  // equal-size slices of rows
  double total_node_ms = 0;        // sums of the per-row medians
  double total_edge_ms = 0;
  double median_node_ms = 0;
  double median_edge_ms = 0;
  double speedup = 0;
  std::vector<AccuracyRow> accuracy;  // filled by callers that train a model
};

/// Times insert_node against add_vertex + sequential insert_edge on fresh
/// copies of (g, idx). Each workload is first run once by both methods and
/// the results compared; any disagreement throws BenchError before a
/// single timing is recorded.
BenchReport bench_node_vs_edge(const Graph& g, const TrussIndex& idx, std::span<const InsertionWorkload> work,
                               std::size_t repetitions, std::size_t group_count = 5);

/// Same, for owners whose edges are all private and incident (the shape
/// the degree-binned generator produces). Throws BenchError otherwise.
BenchReport bench_node_vs_edge(const PublicPrivateGraph& ppg, const TrussIndex& public_idx,
                               std::span<const VertexId> sample, std::size_t repetitions,
                               std::size_t group_count = 5);

/// "#trussmaint-bench v1" header, then tab-separated rows, groups, total
/// and accuracy lines. Vertex ids go through ids when given.
void write_bench_tsv(std::ostream& out, const BenchReport& report, const IdMap* ids = nullptr);
void write_bench_json(std::ostream& out, const BenchReport& report, const IdMap* ids = nullptr);

double median_of(std::vector<double> values);

}  // namespace trussmaint
