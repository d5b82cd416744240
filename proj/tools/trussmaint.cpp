// trussmaint: command-line front end for truss decomposition, incremental
// maintenance and personalized k-truss queries on public-private graphs.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trussmaint/bench.hpp"
#include "trussmaint/decomposition.hpp"
#include "trussmaint/edge_update.hpp"
#include "trussmaint/generator.hpp"
#include "trussmaint/hybrid.hpp"
#include "trussmaint/io.hpp"
#include "trussmaint/node_update.hpp"
#include "trussmaint/verify.hpp"

namespace tr = trussmaint;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kMismatch = 1;  // oracle disagreement
constexpr int kFailure = 2;   // bad input, contract violation, I/O

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

// "-" or empty means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Loaded {
  tr::IdMap ids;
  tr::Graph graph;
  tr::TrussIndex index;
};

tr::Graph read_graph(const std::string& path, tr::IdMap& ids) {
  auto in = open_in(path);
  return tr::read_edge_list(in, ids, path);
}

tr::TrussIndex load_or_compute_index(const std::string& path, const tr::Graph& g, const tr::IdMap& ids) {
  if (path.empty()) return tr::truss_decomposition(g);
  auto in = open_in(path);
  tr::LoadedIndex loaded = tr::read_index(in, ids, path);
  std::size_t matched = 0;
  loaded.index.for_each([&](const tr::Edge& e, tr::Trussness) { matched += g.has_edge(e); });
  if (matched != g.edge_count() || loaded.index.size() != g.edge_count()) {
    throw UsageError("index '" + path + "' does not cover exactly the edges of the graph");
  }
  return std::move(loaded.index);
}

Loaded load(const std::string& graph_path, const std::string& index_path) {
  Loaded l;
  l.graph = read_graph(graph_path, l.ids);
  l.index = load_or_compute_index(index_path, l.graph, l.ids);
  return l;
}

tr::VertexId lookup(const tr::IdMap& ids, std::uint64_t ext) {
  const auto v = ids.find(ext);
  if (!v) throw UsageError("unknown vertex " + std::to_string(ext));
  return *v;
}

void write_index_as(const std::string& format, std::ostream& out, const tr::Graph& g, const tr::TrussIndex& idx,
                    const tr::IdMap& ids) {
  if (format == "json") {
    tr::write_index_json(out, g, idx, ids);
  } else {
    tr::write_index(out, g, idx, ids);
  }
}

// Shared tail of the mutating subcommands.
struct MutateOptions {
  std::string graph;
  std::string index;
  std::string out;
  std::string graph_out;
  std::string format = "tsv";
  bool oracle = false;
};

void add_mutate_options(CLI::App* cmd, MutateOptions& o) {
  cmd->add_option("--graph", o.graph, "public edge list")->required();
  cmd->add_option("--index", o.index, "existing index (computed when omitted)");
  cmd->add_option("--out", o.out, "updated index, '-' for stdout")->default_val("-");
  cmd->add_option("--graph-out", o.graph_out, "write the updated edge list here");
  cmd->add_option("--format", o.format, "index format")->check(CLI::IsMember({"tsv", "json"}));
  cmd->add_flag("--oracle", o.oracle, "check the result against a from-scratch decomposition");
}

int finish_mutation(const MutateOptions& o, Loaded& l) {
  if (!o.graph_out.empty()) {
    Output g(o.graph_out);
    tr::write_edge_list(g.stream(), l.graph, l.ids);
  }
  Output out(o.out);
  write_index_as(o.format, out.stream(), l.graph, l.index, l.ids);
  if (!o.oracle) return kOk;
  const tr::TrussIndex expected = tr::truss_decomposition(l.graph);
  if (expected == l.index) {
    std::cerr << "oracle: OK\n";
    return kOk;
  }
  std::cerr << "oracle: MISMATCH on " << tr::index_diff(l.index, expected).size() << " edges\n";
  return kMismatch;
}

tr::PublicPrivateGraph load_ppg(const std::string& graph_path, const std::string& private_path, tr::IdMap& ids) {
  tr::PublicPrivateGraph ppg(read_graph(graph_path, ids));
  if (!private_path.empty()) {
    auto in = open_in(private_path);
    tr::read_private_edges(in, ids, ppg, private_path);
  }
  return ppg;
}

tr::StrategyChoice parse_strategy(const std::string& s) {
  if (s == "vertex") return tr::StrategyChoice::kVertex;
  if (s == "edge") return tr::StrategyChoice::kEdge;
  return tr::StrategyChoice::kAuto;
}

tr::ForestModel read_model(const std::string& path) {
  auto in = open_in(path);
  std::stringstream text;
  text << in.rdbuf();
  return tr::ForestModel::from_json(text.str());
}

double accuracy(const std::vector<tr::TrainingRow>& rows, const auto& predict) {
  if (rows.empty()) return 0;
  std::size_t hit = 0;
  for (const auto& r : rows) hit += predict(r.features) == *r.label;
  return static_cast<double>(hit) / static_cast<double>(rows.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truss decomposition, maintenance and personalized k-truss queries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "trussmaint 0.1.0");

  // decompose
  std::string d_graph, d_out = "-", d_format = "tsv";
  auto* decompose = app.add_subcommand("decompose", "compute the truss index of a graph");
  decompose->add_option("--graph", d_graph, "edge list")->required();
  decompose->add_option("--out", d_out, "index file, '-' for stdout");
  decompose->add_option("--format", d_format)->check(CLI::IsMember({"tsv", "json"}));

  // insert-edge / delete-edge
  MutateOptions ie, de;
  std::vector<std::uint64_t> ie_edge, de_edge;
  auto* insert_edge = app.add_subcommand("insert-edge", "insert one edge and update the index");
  add_mutate_options(insert_edge, ie);
  insert_edge->add_option("--edge", ie_edge, "endpoints u v")->required()->expected(2);
  auto* delete_edge = app.add_subcommand("delete-edge", "delete one edge and update the index");
  add_mutate_options(delete_edge, de);
  delete_edge->add_option("--edge", de_edge, "endpoints u v")->required()->expected(2);

  // insert-node / delete-node
  MutateOptions in_opts, dn_opts;
  std::uint64_t in_vertex = 0, dn_vertex = 0;
  std::vector<std::uint64_t> in_neighbors;
  auto* insert_node = app.add_subcommand("insert-node", "insert a vertex with its edges in one batch");
  add_mutate_options(insert_node, in_opts);
  insert_node->add_option("--vertex", in_vertex, "new vertex id")->required();
  insert_node->add_option("--neighbors", in_neighbors, "existing neighbor ids")->required();
  auto* delete_node = app.add_subcommand("delete-node", "delete a vertex and its edges");
  add_mutate_options(delete_node, dn_opts);
  delete_node->add_option("--vertex", dn_vertex, "vertex id")->required();

  // query
  std::string q_graph, q_private, q_index, q_model, q_strategy = "auto", q_scope = "global", q_out = "-";
  std::uint64_t q_owner = 0;
  tr::Trussness q_k = 3;
  auto* query = app.add_subcommand("query", "k-truss of an owner's personalized graph");
  query->add_option("--graph,--public", q_graph, "public edge list")->required();
  query->add_option("--private", q_private, "private edges 'owner u v'");
  query->add_option("--index", q_index, "public index (computed when omitted)");
  query->add_option("--owner", q_owner, "query vertex")->required();
  query->add_option("--k", q_k, "truss order")->required()->check(CLI::Range(2u, 1u << 30));
  query->add_option("--strategy", q_strategy)->check(CLI::IsMember({"auto", "vertex", "edge"}));
  query->add_option("--model", q_model, "forest model JSON (needed by --strategy auto)");
  query->add_option("--scope", q_scope)->check(CLI::IsMember({"global", "owner"}));
  query->add_option("--out", q_out, "edge list of the answer");

  // gen
  auto* gen = app.add_subcommand("gen", "generate synthetic inputs");
  gen->require_subcommand(1);
  tr::GeneratorParams gp;
  std::string g_model = "binned", g_prefix = "synthetic";
  auto* gen_ppg = gen->add_subcommand("ppg", "public-private graph");
  gen_ppg->add_option("--n", gp.n)->default_val(1000);
  gen_ppg->add_option("--p", gp.p_public)->default_val(0.01);
  gen_ppg->add_option("--model", g_model)->check(CLI::IsMember({"binned", "planted"}))->default_val("binned");
  gen_ppg->add_option("--seed", gp.seed)->default_val(1);
  gen_ppg->add_option("--bins", gp.bins)->default_val(40);
  gen_ppg->add_option("--per-bin", gp.per_bin)->default_val(5);
  gen_ppg->add_option("--owners", gp.owners)->default_val(100);
  gen_ppg->add_option("--min-private", gp.min_private)->default_val(1);
  gen_ppg->add_option("--max-private", gp.max_private)->default_val(20);
  gen_ppg->add_option("--clique-prob", gp.clique_probability)->default_val(0.3);
  gen_ppg->add_option("--out", g_prefix, "writes PREFIX.graph.txt and PREFIX.private.txt")->default_val("synthetic");
  std::string go_graph, go_out = "-";
  std::size_t go_count = 200;
  std::uint64_t go_seed = 1;
  auto* gen_ops = gen->add_subcommand("ops", "random valid update stream for a graph");
  gen_ops->add_option("--graph", go_graph)->required();
  gen_ops->add_option("--count", go_count)->default_val(200);
  gen_ops->add_option("--seed", go_seed)->default_val(1);
  gen_ops->add_option("--out", go_out);

  // train
  std::string t_graph, t_private, t_index, t_out = "model.json", t_report;
  tr::TrainParams tp;
  std::size_t t_bins = 20, t_per_bin = 4;
  double t_test = 0.3;
  std::uint64_t t_seed = 1;
  auto* train = app.add_subcommand("train", "fit the strategy classifier from measured timings");
  train->add_option("--graph", t_graph)->required();
  train->add_option("--private", t_private)->required();
  train->add_option("--index", t_index);
  train->add_option("--bins", t_bins, "grid side for (public, private) degree binning")->default_val(20);
  train->add_option("--per-bin", t_per_bin)->default_val(4);
  train->add_option("--reps", tp.repetitions)->default_val(3);
  train->add_option("--margin", tp.margin, "relative timing gap below which a sample is dropped")->default_val(0.1);
  train->add_option("--trees", tp.forest.trees)->default_val(51);
  train->add_option("--depth", tp.forest.max_depth)->default_val(11);
  train->add_option("--test-fraction", t_test)->check(CLI::Range(0.0, 0.9))->default_val(0.3);
  train->add_option("--seed", t_seed)->default_val(1);
  train->add_option("--out", t_out, "model JSON")->default_val("model.json");
  train->add_option("--report", t_report, "per-node CSV");

  // bench
  std::string b_graph, b_private, b_index, b_out = "-", b_format = "tsv";
  std::size_t b_reps = 3, b_bins = 0, b_per_bin = 5, b_dense = 0;
  std::uint64_t b_seed = 1;
  auto* bench = app.add_subcommand("bench", "node insertion vs sequential edge insertion");
  bench->add_option("--graph", b_graph, "public edge list (owners must have no public edges)");
  bench->add_option("--private", b_private);
  bench->add_option("--index", b_index);
  bench->add_option("--bins", b_bins, "1-D degree bins over owners by private degree; 0 takes all")->default_val(0);
  bench->add_option("--per-bin", b_per_bin)->default_val(5);
  bench->add_option("--dense", b_dense, "ignore inputs; time N new vertices wired into dense communities");
  bench->add_option("--reps", b_reps)->default_val(3);
  bench->add_option("--seed", b_seed)->default_val(1);
  bench->add_option("--format", b_format)->check(CLI::IsMember({"tsv", "json"}));
  bench->add_option("--out", b_out);

  // verify
  std::string v_graph, v_ops, v_index;
  auto* verify = app.add_subcommand("verify", "replay an update stream against the from-scratch oracle");
  verify->add_option("--graph", v_graph)->required();
  verify->add_option("--ops", v_ops)->required();
  verify->add_option("--index", v_index);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decompose) {
      Loaded l = load(d_graph, "");
      Output out(d_out);
      write_index_as(d_format, out.stream(), l.graph, l.index, l.ids);
      return kOk;
    }
    if (*insert_edge || *delete_edge) {
      const bool ins = insert_edge->parsed();
      const MutateOptions& o = ins ? ie : de;
      const auto& ends = ins ? ie_edge : de_edge;
      Loaded l = load(o.graph, o.index);
      const tr::VertexId a = lookup(l.ids, ends[0]);
      const tr::VertexId b = lookup(l.ids, ends[1]);
      if (a == b) throw UsageError("self-loop on vertex " + std::to_string(ends[0]));
      if (ins) {
        tr::insert_edge(l.graph, l.index, tr::Edge::make(a, b));
      } else {
        tr::delete_edge(l.graph, l.index, tr::Edge::make(a, b));
      }
      return finish_mutation(o, l);
    }
    if (*insert_node) {
      Loaded l = load(in_opts.graph, in_opts.index);
      std::vector<tr::VertexId> nbrs;
      for (std::uint64_t w : in_neighbors) nbrs.push_back(lookup(l.ids, w));
      const tr::VertexId v = l.ids.intern(in_vertex);
      tr::insert_node(l.graph, l.index, v, tr::incident_edges(v, nbrs));
      return finish_mutation(in_opts, l);
    }
    if (*delete_node) {
      Loaded l = load(dn_opts.graph, dn_opts.index);
      tr::delete_node(l.graph, l.index, lookup(l.ids, dn_vertex));
      return finish_mutation(dn_opts, l);
    }
    if (*query) {
      tr::IdMap ids;
      const tr::PublicPrivateGraph ppg = load_ppg(q_graph, q_private, ids);
      const tr::TrussIndex idx = load_or_compute_index(q_index, ppg.public_graph(), ids);
      const tr::StrategyChoice choice = parse_strategy(q_strategy);
      std::optional<tr::ForestModel> model;
      if (!q_model.empty()) model = read_model(q_model);
      if (choice == tr::StrategyChoice::kAuto && !model) throw UsageError("--strategy auto needs --model");
      const auto scope = q_scope == "owner" ? tr::QueryScope::kOwnerComponent : tr::QueryScope::kGlobal;
      const tr::QueryAnswer ans =
          tr::answer_query(ppg, idx, model ? &*model : nullptr, lookup(ids, q_owner), q_k, choice, scope);
      Output out(q_out);
      tr::write_edge_list(out.stream(), ans.truss, ids);
      std::cerr << "strategy=" << tr::to_string(ans.strategy) << " vertices=" << ans.truss.vertex_count()
                << " edges=" << ans.truss.edge_count() << '\n';
      return kOk;
    }
    if (*gen_ppg) {
      gp.model = g_model == "planted" ? tr::PrivateModel::kPlanted : tr::PrivateModel::kDegreeBinned;
      const tr::PublicPrivateGraph ppg = tr::generate_synthetic_ppg(gp);
      tr::IdMap ids;
      for (tr::VertexId v = 0; v < gp.n; ++v) ids.intern(v);
      Output g(g_prefix + ".graph.txt");
      tr::write_edge_list(g.stream(), ppg.public_graph(), ids);
      Output p(g_prefix + ".private.txt");
      tr::write_private_edges(p.stream(), ppg, ids);
      std::cerr << "public edges=" << ppg.public_graph().edge_count() << " private edges=" << ppg.private_edge_count()
                << " owners=" << ppg.owners().size() << '\n';
      return kOk;
    }
    if (*gen_ops) {
      tr::IdMap ids;
      const tr::Graph g = read_graph(go_graph, ids);
      Output out(go_out);
      tr::write_operations(out.stream(), tr::random_operations(g, ids, go_count, go_seed));
      return kOk;
    }
    if (*train) {
      tr::IdMap ids;
      const tr::PublicPrivateGraph ppg = load_ppg(t_graph, t_private, ids);
      const tr::TrussIndex idx = load_or_compute_index(t_index, ppg.public_graph(), ids);
      std::mt19937_64 rng(t_seed);
      const auto owners = ppg.owners();
      const auto sample = tr::sample_degree_grid(ppg, owners, t_bins, t_per_bin, rng);
      if (sample.empty()) throw UsageError("no owners to train on");
      std::vector<tr::TrainingRow> rows;
      for (tr::VertexId u : sample) rows.push_back(tr::measure_node(ppg, idx, u, tp.repetitions, tp.margin));

      std::vector<tr::TrainingRow> labeled;
      for (const auto& r : rows) {
        if (r.label) labeled.push_back(r);
      }
      std::shuffle(labeled.begin(), labeled.end(), rng);
      const auto n_test = static_cast<std::size_t>(static_cast<double>(labeled.size()) * t_test);
      std::vector<tr::TrainingRow> test(labeled.end() - static_cast<std::ptrdiff_t>(n_test), labeled.end());
      labeled.resize(labeled.size() - n_test);
      tp.forest.seed = t_seed;
      const tr::TrainResult fit = tr::fit_rows(labeled, tp.forest);
      if (!fit.warning.empty()) std::cerr << "warning: " << fit.warning << '\n';
      {
        Output m(t_out);
        m.stream() << fit.model.to_json();
      }
      if (!t_report.empty()) {
        Output r(t_report);
        tr::write_training_csv(r.stream(), rows, &ids);
      }
      std::cerr << "sampled=" << rows.size() << " labeled=" << labeled.size() + n_test << " train=" << labeled.size()
                << " test=" << n_test << '\n';
      if (n_test > 0) {
        std::vector<tr::FeatureVector> x;
        std::vector<tr::Strategy> y;
        for (const auto& r : labeled) {
          x.push_back(r.features);
          y.push_back(*r.label);
        }
        const auto baseline = tr::DegreeThresholdClassifier::fit(x, y);
        std::size_t vertex = 0;
        for (const auto& r : test) vertex += *r.label == tr::Strategy::kVertex;
        const double majority =
            static_cast<double>(std::max(vertex, n_test - vertex)) / static_cast<double>(n_test);
        std::cout << "classifier\taccuracy\n"
                  << "random_forest\t" << accuracy(test, [&](const auto& f) { return fit.model.predict(f); }) << '\n'
                  << "degree_baseline\t" << accuracy(test, [&](const auto& f) { return baseline.predict(f); })
                  << '\n'
                  << "majority_class\t" << majority << '\n';
      }
      return kOk;
    }
    if (*bench) {
      tr::BenchReport report;
      tr::IdMap ids;
      if (b_dense > 0) {
        const tr::Graph g = tr::community_graph(2000, 20, 40, 0.5, 0.003, b_seed);
        for (tr::VertexId v = 0; v < 2000 + b_dense; ++v) ids.intern(v);
        std::mt19937_64 rng(b_seed);
        std::vector<tr::InsertionWorkload> work;
        for (std::size_t i = 0; i < b_dense; ++i) {
          const auto c = static_cast<tr::VertexId>(rng() % 20);
          std::vector<tr::VertexId> members;
          for (tr::VertexId v = c * 40; v < c * 40 + 40; ++v) members.push_back(v);
          std::shuffle(members.begin(), members.end(), rng);
          members.resize(20 + rng() % 11);
          work.push_back({static_cast<tr::VertexId>(2000 + i), members});
        }
        report = tr::bench_node_vs_edge(g, tr::truss_decomposition(g), work, b_reps);
      } else {
        if (b_graph.empty() || b_private.empty()) throw UsageError("bench needs --graph and --private, or --dense");
        const tr::PublicPrivateGraph ppg = load_ppg(b_graph, b_private, ids);
        const tr::TrussIndex idx = load_or_compute_index(b_index, ppg.public_graph(), ids);
        const auto owners = ppg.owners();
        std::vector<tr::VertexId> sample(owners.begin(), owners.end());
        if (b_bins > 0) {
          // Bin owners by private degree, which is their degree in the full graph.
          tr::Graph degrees(ppg.public_graph().id_bound());
          for (tr::VertexId u : owners) {
            for (tr::VertexId w : ppg.private_neighbors(u)) {
              if (!degrees.has_edge(u, w)) degrees.add_edge(u, w);
            }
          }
          std::mt19937_64 rng(b_seed);
          const auto picked = tr::sample_degree_bins(degrees, b_bins, b_per_bin, rng);
          sample.clear();
          std::set_intersection(picked.begin(), picked.end(), owners.begin(), owners.end(),
                                std::back_inserter(sample));
        }
        report = tr::bench_node_vs_edge(ppg, idx, sample, b_reps);
      }
      Output out(b_out);
      if (b_format == "json") {
        tr::write_bench_json(out.stream(), report, &ids);
      } else {
        tr::write_bench_tsv(out.stream(), report, &ids);
      }
      return kOk;
    }
    if (*verify) {
      Loaded l = load(v_graph, v_index);
      auto in = open_in(v_ops);
      const auto ops = tr::read_operations(in, v_ops);
      const tr::VerifyReport r = tr::verify_operations(l.graph, l.index, l.ids, ops, tr::truss_decomposition);
      if (r.ok()) {
        std::cout << "OK: " << r.matched << "/" << r.steps << " steps match oracle\n";
        return kOk;
      }
      std::cout << "FAIL: " << r.matched << "/" << r.steps << " steps match oracle\n";
      for (const auto& line : r.mismatches) std::cout << "  " << line << '\n';
      return kMismatch;
    }
  } catch (const std::exception& e) {
    std::cerr << "trussmaint: error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
