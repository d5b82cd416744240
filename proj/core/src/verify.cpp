#include "trussmaint/verify.hpp"

#include "trussmaint/edge_update.hpp"
#include "trussmaint/node_update.hpp"

namespace trussmaint {

namespace {

VertexId existing(const Graph& g, const IdMap& ids, std::uint64_t ext) {
  const auto v = ids.find(ext);
  if (!v || !g.has_vertex(*v)) throw GraphError("unknown vertex " + std::to_string(ext));
  return *v;
}

}  // namespace

void apply_operation(Graph& g, TrussIndex& idx, IdMap& ids, const Operation& op) {
  switch (op.kind) {
    case Operation::Kind::kInsertEdge:
    case Operation::Kind::kDeleteEdge: {
      if (op.others.size() != 1) throw GraphError("edge operation needs two endpoints");
      const VertexId a = existing(g, ids, op.vertex);
      const VertexId b = existing(g, ids, op.others[0]);
      if (a == b) throw GraphError("self-loop on vertex " + std::to_string(op.vertex));
      if (op.kind == Operation::Kind::kInsertEdge) {
        insert_edge(g, idx, Edge::make(a, b));
      } else {
        delete_edge(g, idx, Edge::make(a, b));
      }
      return;
    }
    case Operation::Kind::kInsertNode: {
      std::vector<VertexId> nbrs;
      for (std::uint64_t w : op.others) nbrs.push_back(existing(g, ids, w));
      const auto known = ids.find(op.vertex);
      if (known && g.has_vertex(*known) && g.degree(*known) > 0) {
        throw GraphError("vertex " + std::to_string(op.vertex) + " already has edges");
      }
      const VertexId v = ids.intern(op.vertex);
      insert_node(g, idx, v, incident_edges(v, nbrs));
      return;
    }
    case Operation::Kind::kDeleteNode:
      delete_node(g, idx, existing(g, ids, op.vertex));
      return;
  }
}

VerifyReport verify_operations(Graph& g, TrussIndex& idx, IdMap& ids, std::span<const Operation> ops,
                               const Oracle& oracle) {
  VerifyReport report;
  for (const Operation& op : ops) {
    ++report.steps;
    try {
      apply_operation(g, idx, ids, op);
    } catch (const GraphError& err) {
      throw GraphError("step " + std::to_string(report.steps) + ": " + err.what());
    }
    TrussIndex expected = oracle(g);
    if (idx == expected) {
      ++report.matched;
      continue;
    }
    const auto diff = index_diff(idx, expected);
    std::string line = "step " + std::to_string(report.steps) + ": " + std::to_string(diff.size()) + " edges differ";
    if (!diff.empty()) {
      const Edge& e = diff.front();
      line += ", e.g. " + std::to_string(ids.external(e.u)) + " " + std::to_string(ids.external(e.v));
      line += " incremental=" + (idx.contains(e) ? std::to_string(idx.at(e)) : std::string("absent"));
      line += " oracle=" + (expected.contains(e) ? std::to_string(expected.at(e)) : std::string("absent"));
    }
    report.mismatches.push_back(std::move(line));
    idx = std::move(expected);
  }
  return report;
}

}  // namespace trussmaint
