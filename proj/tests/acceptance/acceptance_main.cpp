// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. Pass criterion numbers as arguments to run a
// subset, e.g. `trussmaint_acceptance 1 5 8`.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "trussmaint/bench.hpp"
#include "trussmaint/decomposition.hpp"
#include "trussmaint/edge_update.hpp"
#include "trussmaint/generator.hpp"
#include "trussmaint/hybrid.hpp"
#include "trussmaint/io.hpp"
#include "trussmaint/node_update.hpp"

namespace trussmaint {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---------------------------------------------------------------------------
// Criteria 1-3 share one randomized trial suite.

struct SuiteStats {
  std::size_t trials = 0;
  std::size_t updates = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t brute_mismatches = 0;
  std::size_t node_insertions = 0;
  std::size_t new_edges_checked = 0;
  std::size_t sandwich_violations = 0;
  std::size_t rule1_checked = 0;
  std::size_t rule1_violations = 0;
  std::size_t rule2_checked = 0;
  std::size_t rule2_violations = 0;
  std::size_t rule3_checked = 0;
  std::size_t rule3_violations = 0;
  std::string first_failure;
};

void note(SuiteStats& s, std::size_t& counter, const std::string& what) {
  ++counter;
  if (s.first_failure.empty()) s.first_failure = what;
}

template <class Rng>
std::vector<VertexId> random_subset(const std::vector<VertexId>& from, std::size_t count, Rng& rng) {
  std::vector<VertexId> out = from;
  std::shuffle(out.begin(), out.end(), rng);
  out.resize(std::min(count, out.size()));
  return out;
}

void check_against_oracles(SuiteStats& s, const Graph& g, const TrussIndex& idx, const std::string& where) {
  ++s.updates;
  if (!(idx == truss_decomposition(g))) note(s, s.oracle_mismatches, where + ": differs from truss_decomposition");
  if (!(idx == testing::brute_index(g))) note(s, s.brute_mismatches, where + ": differs from brute-force peel");
}

void audited_node_insert(SuiteStats& s, Graph& g, TrussIndex& idx, std::mt19937_64& rng, const std::string& where) {
  const VertexId v = g.id_bound();
  const auto vs = g.vertices();
  std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(vs.size(), 14));
  const auto nbrs = random_subset(vs, size(rng), rng);
  const auto ev = incident_edges(v, nbrs);

  const auto bounds = compute_bound_pairs(g, idx, v, ev);
  const Trussness max_up = node_trussness_upper_bound(bounds);
  const TrussIndex before = idx;

  insert_node(g, idx, v, ev);
  ++s.node_insertions;
  check_against_oracles(s, g, idx, where + " insert_node");

  for (std::size_t i = 0; i < ev.size(); ++i) {
    ++s.new_edges_checked;
    const Trussness t = idx.at(ev[i]);
    const BoundPair b = bounds[i];
    if (!(b.low <= t && t <= b.up && b.up - b.low <= 1)) {
      note(s, s.sandwich_violations,
           where + fmt(": edge %s low=%u final=%u up=%u", to_string(ev[i]).c_str(), b.low, t, b.up));
    }
  }
  before.for_each([&](const Edge& e, Trussness t0) {
    const Trussness t1 = idx.at(e);
    if (t0 >= max_up) {
      ++s.rule1_checked;
      if (t1 != t0) note(s, s.rule1_violations, where + ": Rule 1' edge " + to_string(e) + " changed");
    }
    ++s.rule3_checked;
    if ((t1 > t0 ? t1 - t0 : t0 - t1) > 1) {
      note(s, s.rule3_violations, where + ": Rule 3 edge " + to_string(e) + " moved by more than 1");
    }
  });
}

void audited_node_delete(SuiteStats& s, Graph& g, TrussIndex& idx, std::mt19937_64& rng, const std::string& where) {
  const auto vs = g.vertices();
  const VertexId v = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
  const Trussness tv = vertex_trussness(g, idx, v);
  const TrussIndex before = idx;

  delete_node(g, idx, v);
  check_against_oracles(s, g, idx, where + " delete_node");

  before.for_each([&](const Edge& e, Trussness t0) {
    if (e.u == v || e.v == v) return;
    const Trussness t1 = idx.at(e);
    if (t0 > tv) {
      ++s.rule2_checked;
      if (t1 != t0) note(s, s.rule2_violations, where + ": Rule 2 edge " + to_string(e) + " changed");
    }
    ++s.rule3_checked;
    if ((t1 > t0 ? t1 - t0 : t0 - t1) > 1) {
      note(s, s.rule3_violations, where + ": Rule 3 edge " + to_string(e) + " moved by more than 1");
    }
  });
}

SuiteStats run_trial_suite() {
  SuiteStats s;
  const double probabilities[] = {0.1, 0.3, 0.5};
  for (std::uint64_t trial = 0; trial < 240; ++trial) {
    std::mt19937_64 rng(0xacce55 + trial);
    const std::size_t n = 8 + trial % 33;  // 8..40
    const double p = probabilities[trial % 3];
    Graph g = testing::random_graph(n, p, 1000 + trial);
    TrussIndex idx = truss_decomposition(g);
    const std::string where = fmt("trial %zu (n=%zu p=%.1f)", static_cast<std::size_t>(trial), n, p);
    ++s.trials;

    for (int step = 0; step < 4; ++step) {
      const auto missing = testing::random_non_edges(g, 1, rng);
      if (missing.empty()) break;
      insert_edge(g, idx, missing.front());
      check_against_oracles(s, g, idx, where + " insert_edge");
    }
    for (int step = 0; step < 4 && g.edge_count() > 0; ++step) {
      const auto edges = g.edges();
      delete_edge(g, idx, edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)]);
      check_against_oracles(s, g, idx, where + " delete_edge");
    }
    for (int step = 0; step < 3; ++step) {
      audited_node_insert(s, g, idx, rng, where);
      audited_node_delete(s, g, idx, rng, where);
    }
  }
  return s;
}

Outcome criterion1(const SuiteStats& s) {
  const bool ok = s.trials >= 200 && s.oracle_mismatches == 0 && s.brute_mismatches == 0;
  std::string d = fmt("%zu trials, %zu updates, %zu mismatches vs decomposition, %zu vs brute force", s.trials,
                      s.updates, s.oracle_mismatches, s.brute_mismatches);
  if (!ok && !s.first_failure.empty()) d += "; first: " + s.first_failure;
  return {ok, d};
}

Outcome criterion2(const SuiteStats& s) {
  const bool ok = s.new_edges_checked > 0 && s.sandwich_violations == 0;
  std::string d = fmt("%zu node insertions, %zu new edges, %zu violations", s.node_insertions,
                      s.new_edges_checked, s.sandwich_violations);
  if (!ok && !s.first_failure.empty()) d += "; first: " + s.first_failure;
  return {ok, d};
}

Outcome criterion3(const SuiteStats& s) {
  const std::size_t bad = s.rule1_violations + s.rule2_violations + s.rule3_violations;
  const bool ok = bad == 0 && s.rule1_checked > 0 && s.rule2_checked > 0 && s.rule3_checked > 0;
  std::string d = fmt("Rule 1' %zu/%zu, Rule 2 %zu/%zu, Rule 3 %zu/%zu edges violating/checked",
                      s.rule1_violations, s.rule1_checked, s.rule2_violations, s.rule2_checked, s.rule3_violations,
                      s.rule3_checked);
  if (!ok && !s.first_failure.empty()) d += "; first: " + s.first_failure;
  return {ok, d};
}

// ---------------------------------------------------------------------------

Outcome criterion4() {
  std::size_t owners = 0, index_mismatch = 0, oracle_mismatch = 0, query_mismatch = 0, queries = 0;
  for (std::uint64_t seed = 1; owners < 60; ++seed) {
    const auto ppg = testing::random_ppg(30, 0.3, 4, 10, 5000 + seed);
    const TrussIndex idx = truss_decomposition(ppg.public_graph());
    for (VertexId u : ppg.owners()) {
      ++owners;
      const StrategyRun v = run_vertex_pp(ppg, idx, u);
      const StrategyRun e = run_edge_pp(ppg, idx, u);
      if (!(v.index == e.index)) ++index_mismatch;
      const Graph view = personalized_view(ppg, u).materialize();
      if (!(v.index == truss_decomposition(view))) ++oracle_mismatch;
      for (Trussness k = 2; k <= v.index.max_trussness() + 1; ++k) {
        ++queries;
        const Graph a = answer_query(ppg, idx, nullptr, u, k, StrategyChoice::kVertex).truss;
        const Graph b = answer_query(ppg, idx, nullptr, u, k, StrategyChoice::kEdge).truss;
        if (!(a == b) || !(a == extract_ktruss(truss_decomposition(view), view, k))) ++query_mismatch;
      }
    }
  }
  const bool ok = owners >= 50 && index_mismatch == 0 && oracle_mismatch == 0 && query_mismatch == 0;
  return {ok, fmt("%zu owners: %zu index mismatches between strategies, %zu vs oracle; %zu queries, %zu not "
                  "invariant under forced strategy",
                  owners, index_mismatch, oracle_mismatch, queries, query_mismatch)};
}

Outcome criterion5() {
  std::vector<std::string> failures;
  auto all_equal = [](const TrussIndex& idx, Trussness t) {
    bool ok = true;
    idx.for_each([&](const Edge&, Trussness x) { ok = ok && x == t; });
    return ok;
  };
  for (std::size_t n = 3; n <= 8; ++n) {
    const TrussIndex idx = truss_decomposition(testing::complete_graph(n));
    if (idx.size() != n * (n - 1) / 2 || !all_equal(idx, static_cast<Trussness>(n))) {
      failures.push_back(fmt("K%zu", n));
    }
  }
  // Triangle-free: cycles, a star, random bipartite graphs.
  std::vector<Graph> triangle_free;
  for (std::size_t n = 4; n <= 12; ++n) {
    Graph c(n);
    for (VertexId i = 0; i < n; ++i) c.add_edge(i, static_cast<VertexId>((i + 1) % n));
    triangle_free.push_back(std::move(c));
  }
  Graph star(10);
  for (VertexId i = 1; i < 10; ++i) star.add_edge(0, i);
  triangle_free.push_back(std::move(star));
  std::mt19937_64 rng(55);
  for (int t = 0; t < 20; ++t) {
    Graph b(30);
    for (VertexId x = 0; x < 15; ++x) {
      for (VertexId y = 15; y < 30; ++y) {
        if (rng() % 3 == 0) b.add_edge(x, y);
      }
    }
    triangle_free.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < triangle_free.size(); ++i) {
    if (!all_equal(truss_decomposition(triangle_free[i]), 2)) failures.push_back(fmt("triangle-free #%zu", i));
  }
  // K5 plus a pendant vertex.
  Graph g = testing::complete_graph(5);
  g.add_vertex(5);
  g.add_edge(4, 5);
  const TrussIndex idx = truss_decomposition(g);
  const Graph k4 = extract_ktruss(idx, g, 4);
  const PublicPrivateGraph ppg(g);
  const Graph q4 = query_ktruss(ppg, 0, 4, idx);
  if (!(k4 == testing::complete_graph(5)) || !(q4 == k4) || idx.at(4, 5) != 2) failures.push_back("K5+pendant");

  std::string d = fmt("K3..K8, %zu triangle-free graphs, K5+pendant k=4", triangle_free.size());
  if (!failures.empty()) d += "; failed: " + failures.front();
  return {failures.empty(), d};
}

Outcome criterion6() {
  constexpr std::size_t kN = 2000, kCommunities = 20, kSize = 40, kNodes = 40;
  const Graph g = community_graph(kN, kCommunities, kSize, 0.5, 0.003, 2024);
  const TrussIndex idx = truss_decomposition(g);
  std::mt19937_64 rng(77);
  std::vector<InsertionWorkload> work;
  std::size_t min_degree = SIZE_MAX;
  Trussness min_region = 1000;
  for (std::size_t i = 0; i < kNodes; ++i) {
    const std::size_t c = rng() % kCommunities;
    std::vector<VertexId> members;
    for (VertexId v = static_cast<VertexId>(c * kSize); v < (c + 1) * kSize; ++v) {
      if (vertex_trussness(g, idx, v) >= 5) members.push_back(v);
    }
    std::shuffle(members.begin(), members.end(), rng);
    members.resize(std::min<std::size_t>(members.size(), 20 + rng() % 11));
    for (VertexId v : members) min_region = std::min(min_region, vertex_trussness(g, idx, v));
    min_degree = std::min(min_degree, members.size());
    work.push_back({static_cast<VertexId>(kN + i), std::move(members)});
  }
  const BenchReport r = bench_node_vs_edge(g, idx, work, 3);
  const bool shape_ok = min_degree >= 20 && min_region >= 5 && g.vertex_count() >= 2000;
  const bool ok = shape_ok && r.median_node_ms < r.median_edge_ms;
  return {ok, fmt("n=%zu, %zu inserted nodes with >=%zu edges into tau>=%u vertices: median node %.3f ms, median "
                  "edge %.3f ms, speedup %.2f",
                  g.vertex_count(), work.size(), min_degree, min_region, r.median_node_ms, r.median_edge_ms,
                  r.speedup)};
}

struct ClassifierRun {
  ForestModel model;
  std::size_t sampled = 0, train = 0, test = 0;
  double forest = 0, baseline = 0, majority = 0;
};

ClassifierRun run_classifier_pipeline() {
  GeneratorParams gp;
  gp.n = 2000;
  gp.p_public = 0.005;
  gp.model = PrivateModel::kPlanted;
  gp.owners = 800;
  gp.min_private = 1;
  gp.max_private = 40;
  gp.clique_probability = 0.3;
  gp.seed = 1;
  const PublicPrivateGraph ppg = generate_synthetic_ppg(gp);
  const TrussIndex idx = truss_decomposition(ppg.public_graph());
  std::mt19937_64 rng(11);
  const auto owners = ppg.owners();
  const auto sample = sample_degree_grid(ppg, owners, 20, 4, rng);

  std::vector<TrainingRow> labeled;
  for (VertexId u : sample) {
    TrainingRow row = measure_node(ppg, idx, u, 3, 0.10);
    if (row.label) labeled.push_back(row);
  }
  std::shuffle(labeled.begin(), labeled.end(), rng);
  const std::size_t n_train = labeled.size() * 7 / 10;
  std::vector<FeatureVector> xtr, xte;
  std::vector<Strategy> ytr, yte;
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    (i < n_train ? xtr : xte).push_back(labeled[i].features);
    (i < n_train ? ytr : yte).push_back(*labeled[i].label);
  }
  ClassifierRun run;
  run.model = ForestModel::fit(xtr, ytr, ForestParams{});
  const auto baseline = DegreeThresholdClassifier::fit(xtr, ytr);
  std::size_t f = 0, b = 0, v = 0;
  for (std::size_t i = 0; i < xte.size(); ++i) {
    f += run.model.predict(xte[i]) == yte[i];
    b += baseline.predict(xte[i]) == yte[i];
    v += yte[i] == Strategy::kVertex;
  }
  const double n = static_cast<double>(std::max<std::size_t>(xte.size(), 1));
  run.sampled = sample.size();
  run.train = xtr.size();
  run.test = xte.size();
  run.forest = static_cast<double>(f) / n;
  run.baseline = static_cast<double>(b) / n;
  run.majority = static_cast<double>(std::max(v, xte.size() - v)) / n;
  return run;
}

Outcome criterion7() {
  const ClassifierRun r = run_classifier_pipeline();
  const bool ok = r.test >= 30 && r.forest >= r.majority && r.forest >= r.baseline;
  return {ok, fmt("n=2000, %zu sampled, %zu train / %zu held out: forest %.3f, degree baseline %.3f, majority "
                  "%.3f",
                  r.sampled, r.train, r.test, r.forest, r.baseline, r.majority)};
}

Outcome criterion8() {
  std::size_t dumps = 0, dump_failures = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = testing::random_graph(40, 0.1 + 0.02 * static_cast<double>(seed % 10), seed);
    IdMap ids;
    for (VertexId v = 0; v < g.id_bound(); ++v) ids.intern(v * 13 + 7);
    std::ostringstream first;
    write_index(first, g, truss_decomposition(g), ids);
    std::istringstream in(first.str());
    const LoadedIndex loaded = read_index(in, ids);
    std::ostringstream second;
    write_index(second, g, loaded.index, ids);
    ++dumps;
    if (second.str() != first.str()) ++dump_failures;
  }

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> value(0, 60);
  std::vector<FeatureVector> x(400);
  std::vector<Strategy> y;
  for (auto& row : x) {
    for (auto& f : row) f = value(rng);
    y.push_back(row[1] * 2 + row[9] > row[0] + row[5] / 3 ? Strategy::kVertex : Strategy::kEdge);
  }
  const ForestModel model = ForestModel::fit(x, y, ForestParams{});
  const std::string text = model.to_json();
  const ForestModel back = ForestModel::from_json(text);
  std::size_t disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    FeatureVector probe;
    for (auto& f : probe) f = value(rng);
    disagreements += model.predict(probe) != back.predict(probe);
  }
  const bool ok = dump_failures == 0 && disagreements == 0 && back.to_json() == text;
  return {ok, fmt("%zu index dump/load/dump cycles, %zu not byte-identical; model round trip: %zu/1000 "
                  "predictions differ",
                  dumps, dump_failures, disagreements)};
}

}  // namespace
}  // namespace trussmaint

int main(int argc, char** argv) {
  using namespace trussmaint;
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  auto want = [&](int c) { return wanted.empty() || wanted.count(c) > 0; };

  const char* names[] = {"",
                         "oracle equivalence",
                         "node-insertion bound sandwich",
                         "rules audit",
                         "strategy equivalence",
                         "closed-form fixtures",
                         "performance direction",
                         "classifier pipeline",
                         "round-trip persistence"};
  bool all = true;
  auto report = [&](int c, const std::function<Outcome()>& f) {
    if (!want(c)) return;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c, names[c], o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  };

  SuiteStats suite;
  if (want(1) || want(2) || want(3)) {
    const auto start = Clock::now();
    suite = run_trial_suite();
    std::printf("trial suite: %.1fs\n", std::chrono::duration<double>(Clock::now() - start).count());
  }
  report(1, [&] { return criterion1(suite); });
  report(2, [&] { return criterion2(suite); });
  report(3, [&] { return criterion3(suite); });
  report(4, criterion4);
  report(5, criterion5);
  report(6, criterion6);
  report(7, criterion7);
  report(8, criterion8);
  return all ? 0 : 1;
}
