#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trussmaint/graph.hpp"
#include "trussmaint/pp_graph.hpp"
#include "trussmaint/truss_index.hpp"

namespace trussmaint {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string_view source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Dictionary from the ids used in input files to dense internal ids.
/// Internal ids are handed out in first-seen order.
class IdMap {
 public:
  VertexId intern(std::uint64_t external);
  std::optional<VertexId> find(std::uint64_t external) const;
  std::uint64_t external(VertexId internal) const { return to_external_.at(internal); }
  std::size_t size() const { return to_external_.size(); }

  /// "#trussmaint-idmap v1" then one "external internal" pair per line.
  void write(std::ostream& out) const;
  static IdMap read(std::istream& in, std::string_view source = "<idmap>");

  friend bool operator==(const IdMap&, const IdMap&) = default;

 private:
  std::unordered_map<std::uint64_t, VertexId> to_internal_;
  std::vector<std::uint64_t> to_external_;
};

/// Public edge list: "u v" per line, '#' starts a comment. A line holding a
/// single id declares a vertex that may have no public edges. Duplicate
/// edges and self-loops are errors reported with their line number.
Graph read_edge_list(std::istream& in, IdMap& ids, std::string_view source = "<graph>");

/// Private edges: "owner u v" per line. All ids must already be known.
void read_private_edges(std::istream& in, const IdMap& ids, PublicPrivateGraph& ppg,
                        std::string_view source = "<private>");

/// Writes edges as external "u v" (u < v) in ascending order, then isolated
/// vertices as single-id lines.
void write_edge_list(std::ostream& out, const Graph& g, const IdMap& ids);
void write_private_edges(std::ostream& out, const PublicPrivateGraph& ppg, const IdMap& ids);

/// "#trussmaint-index v1 |V|=n |E|=m" header, then "u v tau" per edge in
/// external ids, sorted.
void write_index(std::ostream& out, const Graph& g, const TrussIndex& idx, const IdMap& ids);

/// {"format":"trussmaint-index","version":1,"vertices":n,"edges":[[u,v,tau],...]}
void write_index_json(std::ostream& out, const Graph& g, const TrussIndex& idx, const IdMap& ids);

struct LoadedIndex {
  TrussIndex index;
  std::size_t vertex_count = 0;
};
LoadedIndex read_index(std::istream& in, const IdMap& ids, std::string_view source = "<index>");

/// One step of an update stream:
///   "+e u v" insert edge, "-e u v" delete edge,
///   "+n v w1 w2 ..." insert node with edges, "-n v" delete node.
struct Operation {
  enum class Kind { kInsertEdge, kDeleteEdge, kInsertNode, kDeleteNode };
  Kind kind;
  std::uint64_t vertex;                 // external ids
  std::vector<std::uint64_t> others;
};
std::vector<Operation> read_operations(std::istream& in, std::string_view source = "<ops>");
void write_operations(std::ostream& out, const std::vector<Operation>& ops);

}  // namespace trussmaint
