#include "trussmaint/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <tuple>
#include <unordered_map>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

namespace trussmaint {

ParseError::ParseError(std::string_view source, std::size_t line, const std::string& what)
    : std::runtime_error(std::string(source) + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// Splits a line into whitespace-separated tokens, dropping any '#' comment.
std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_id(std::string_view tok, std::string_view source, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(source, line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

VertexId known(const IdMap& ids, std::uint64_t ext, std::string_view source, std::size_t line) {
  const auto v = ids.find(ext);
  if (!v) throw ParseError(source, line, "unknown vertex " + std::to_string(ext));
  return *v;
}

std::pair<std::uint64_t, std::uint64_t> external_edge(const IdMap& ids, const Edge& e) {
  const std::uint64_t a = ids.external(e.u);
  const std::uint64_t b = ids.external(e.v);
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

VertexId IdMap::intern(std::uint64_t external) {
  auto [it, inserted] = to_internal_.try_emplace(external, static_cast<VertexId>(to_external_.size()));
  if (inserted) to_external_.push_back(external);
  return it->second;
}

std::optional<VertexId> IdMap::find(std::uint64_t external) const {
  auto it = to_internal_.find(external);
  if (it == to_internal_.end()) return std::nullopt;
  return it->second;
}

void IdMap::write(std::ostream& out) const {
  out << "#trussmaint-idmap v1\n";
  for (VertexId v = 0; v < to_external_.size(); ++v) out << to_external_[v] << ' ' << v << '\n';
}

IdMap IdMap::read(std::istream& in, std::string_view source) {
  IdMap ids;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!header) {
      if (line != "#trussmaint-idmap v1") throw ParseError(source, lineno, "missing idmap header");
      header = true;
      continue;
    }
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(source, lineno, "expected 'external internal'");
    const std::uint64_t ext = parse_id(tok[0], source, lineno);
    const std::uint64_t internal = parse_id(tok[1], source, lineno);
    if (internal != ids.size() || ids.find(ext)) {
      throw ParseError(source, lineno, "idmap entries must be dense and unique");
    }
    ids.intern(ext);
  }
  if (!header) throw ParseError(source, lineno, "missing idmap header");
  return ids;
}

Graph read_edge_list(std::istream& in, IdMap& ids, std::string_view source) {
  Graph g;
  std::unordered_map<std::uint64_t, std::size_t> first_line;
  auto vertex = [&](std::uint64_t ext) {
    const VertexId v = ids.intern(ext);
    if (!g.has_vertex(v)) g.add_vertex(v);
    return v;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok.size() == 1) {
      vertex(parse_id(tok[0], source, lineno));
      continue;
    }
    if (tok.size() != 2) throw ParseError(source, lineno, "expected 'u v'");
    const std::uint64_t a = parse_id(tok[0], source, lineno);
    const std::uint64_t b = parse_id(tok[1], source, lineno);
    if (a == b) throw ParseError(source, lineno, "self-loop on vertex " + std::to_string(a));
    const VertexId va = vertex(a);
    const VertexId vb = vertex(b);
    const Edge e = Edge::make(va, vb);
    auto [it, inserted] = first_line.try_emplace(e.key(), lineno);
    if (!inserted) {
      throw ParseError(source, lineno,
                       "duplicate edge " + std::to_string(a) + " " + std::to_string(b) + " (first on line " +
                           std::to_string(it->second) + ")");
    }
    g.add_edge(e);
  }
  return g;
}

void read_private_edges(std::istream& in, const IdMap& ids, PublicPrivateGraph& ppg, std::string_view source) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok.size() != 3) throw ParseError(source, lineno, "expected 'owner u v'");
    const VertexId owner = known(ids, parse_id(tok[0], source, lineno), source, lineno);
    const VertexId a = known(ids, parse_id(tok[1], source, lineno), source, lineno);
    const VertexId b = known(ids, parse_id(tok[2], source, lineno), source, lineno);
    try {
      ppg.add_private_edge(owner, a, b);
    } catch (const GraphError& err) {
      throw ParseError(source, lineno, err.what());
    }
  }
}

void write_edge_list(std::ostream& out, const Graph& g, const IdMap& ids) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  edges.reserve(g.edge_count());
  g.for_each_edge([&](const Edge& e) { edges.push_back(external_edge(ids, e)); });
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out << a << ' ' << b << '\n';

  std::vector<std::uint64_t> isolated;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) isolated.push_back(ids.external(v));
  }
  std::sort(isolated.begin(), isolated.end());
  for (std::uint64_t v : isolated) out << v << '\n';
}

void write_private_edges(std::ostream& out, const PublicPrivateGraph& ppg, const IdMap& ids) {
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> rows;
  for (VertexId owner : ppg.owners()) {
    for (const Edge& e : ppg.private_edges(owner)) {
      const auto [a, b] = external_edge(ids, e);
      rows.emplace_back(ids.external(owner), a, b);
    }
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [o, a, b] : rows) out << o << ' ' << a << ' ' << b << '\n';
}

void write_index(std::ostream& out, const Graph& g, const TrussIndex& idx, const IdMap& ids) {
  std::vector<std::tuple<std::uint64_t, std::uint64_t, Trussness>> rows;
  rows.reserve(idx.size());
  idx.for_each([&](const Edge& e, Trussness t) {
    const auto [a, b] = external_edge(ids, e);
    rows.emplace_back(a, b, t);
  });
  std::sort(rows.begin(), rows.end());
  out << "#trussmaint-index v1 |V|=" << g.vertex_count() << " |E|=" << rows.size() << '\n';
  for (const auto& [a, b, t] : rows) out << a << ' ' << b << ' ' << t << '\n';
}

void write_index_json(std::ostream& out, const Graph& g, const TrussIndex& idx, const IdMap& ids) {
  std::vector<std::tuple<std::uint64_t, std::uint64_t, Trussness>> rows;
  rows.reserve(idx.size());
  idx.for_each([&](const Edge& e, Trussness t) {
    const auto [a, b] = external_edge(ids, e);
    rows.emplace_back(a, b, t);
  });
  std::sort(rows.begin(), rows.end());
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b, t] : rows) edges.push_back({a, b, t});
  const nlohmann::json doc = {{"format", "trussmaint-index"},
                              {"version", 1},
                              {"vertices", g.vertex_count()},
                              {"edges", std::move(edges)}};
  out << doc.dump() << '\n';
}

LoadedIndex read_index(std::istream& in, const IdMap& ids, std::string_view source) {
  LoadedIndex loaded;
  std::string line;
  std::size_t lineno = 0;
  std::size_t expected_edges = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!header) {
      constexpr std::string_view kPrefix = "#trussmaint-index v1 |V|=";
      const auto sep = line.find(" |E|=");
      if (!line.starts_with(kPrefix) || sep == std::string::npos) {
        throw ParseError(source, lineno, "missing '#trussmaint-index v1' header");
      }
      const std::string_view text(line);
      loaded.vertex_count = parse_id(text.substr(kPrefix.size(), sep - kPrefix.size()), source, lineno);
      expected_edges = parse_id(text.substr(sep + 5), source, lineno);
      header = true;
      continue;
    }
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok.size() != 3) throw ParseError(source, lineno, "expected 'u v tau'");
    const VertexId a = known(ids, parse_id(tok[0], source, lineno), source, lineno);
    const VertexId b = known(ids, parse_id(tok[1], source, lineno), source, lineno);
    const std::uint64_t t = parse_id(tok[2], source, lineno);
    if (a == b) throw ParseError(source, lineno, "self-loop in index");
    if (t < kTrussFloor) throw ParseError(source, lineno, "trussness below 2");
    const Edge e = Edge::make(a, b);
    if (loaded.index.contains(e)) throw ParseError(source, lineno, "duplicate index edge");
    loaded.index.set(e, static_cast<Trussness>(t));
  }
  if (!header) throw ParseError(source, lineno, "missing '#trussmaint-index v1' header");
  if (loaded.index.size() != expected_edges) {
    throw ParseError(source, lineno,
                     "header announces " + std::to_string(expected_edges) + " edges, found " +
                         std::to_string(loaded.index.size()));
  }
  return loaded;
}

std::vector<Operation> read_operations(std::istream& in, std::string_view source) {
  std::vector<Operation> ops;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    Operation op{};
    if (tok[0] == "+e" || tok[0] == "-e") {
      if (tok.size() != 3) throw ParseError(source, lineno, "edge operation needs two endpoints");
      op.kind = tok[0] == "+e" ? Operation::Kind::kInsertEdge : Operation::Kind::kDeleteEdge;
    } else if (tok[0] == "+n") {
      if (tok.size() < 3) throw ParseError(source, lineno, "node insertion needs at least one neighbor");
      op.kind = Operation::Kind::kInsertNode;
    } else if (tok[0] == "-n") {
      if (tok.size() != 2) throw ParseError(source, lineno, "node deletion takes one vertex");
      op.kind = Operation::Kind::kDeleteNode;
    } else {
      throw ParseError(source, lineno, "unknown operation '" + std::string(tok[0]) + "'");
    }
    op.vertex = parse_id(tok[1], source, lineno);
    for (std::size_t i = 2; i < tok.size(); ++i) op.others.push_back(parse_id(tok[i], source, lineno));
    ops.push_back(std::move(op));
  }
  return ops;
}

void write_operations(std::ostream& out, const std::vector<Operation>& ops) {
  for (const Operation& op : ops) {
    switch (op.kind) {
      case Operation::Kind::kInsertEdge: out << "+e"; break;
      case Operation::Kind::kDeleteEdge: out << "-e"; break;
      case Operation::Kind::kInsertNode: out << "+n"; break;
      case Operation::Kind::kDeleteNode: out << "-n"; break;
    }
    out << ' ' << op.vertex;
    for (std::uint64_t w : op.others) out << ' ' << w;
    out << '\n';
  }
}

}  // namespace trussmaint
