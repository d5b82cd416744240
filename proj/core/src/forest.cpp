#include "trussmaint/forest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

namespace trussmaint {

std::string_view to_string(Strategy s) { return s == Strategy::kVertex ? "C_V" : "C_E"; }

namespace {

constexpr std::string_view kFormat = "trussmaint-forest";
constexpr int kVersion = 1;

using Counts = std::array<std::size_t, 2>;

Strategy majority(const Counts& c) { return c[0] > c[1] ? Strategy::kVertex : Strategy::kEdge; }

double gini(const Counts& c) {
  const double n = static_cast<double>(c[0] + c[1]);
  if (n == 0) return 0;
  const double p = static_cast<double>(c[0]) / n;
  return 1.0 - p * p - (1.0 - p) * (1.0 - p);
}

struct Split {
  std::size_t feature = 0;
  double threshold = 0;
  double impurity = 0;
};

class TreeBuilder {
 public:
  TreeBuilder(std::span<const FeatureVector> x, std::span<const Strategy> y, const ForestParams& params,
              std::mt19937_64& rng)
      : x_(x), y_(y), params_(params), rng_(rng) {}

  ForestModel::Tree build(std::vector<std::size_t> samples) {
    tree_.nodes.clear();
    grow(samples, 0);
    return std::move(tree_);
  }

 private:
  Counts count(std::span<const std::size_t> samples) const {
    Counts c{0, 0};
    for (std::size_t i : samples) ++c[static_cast<std::size_t>(y_[i])];
    return c;
  }

  std::int32_t grow(std::vector<std::size_t>& samples, std::size_t depth) {
    const auto id = static_cast<std::int32_t>(tree_.nodes.size());
    const Counts c = count(samples);
    tree_.nodes.push_back({-1, 0, -1, -1, majority(c)});
    if (c[0] == 0 || c[1] == 0 || depth >= params_.max_depth || samples.size() < params_.min_samples_split) {
      return id;
    }
    const auto split = best_split(samples);
    if (!split) return id;

    std::vector<std::size_t> left, right;
    for (std::size_t i : samples) (x_[i][split->feature] <= split->threshold ? left : right).push_back(i);
    samples.clear();
    samples.shrink_to_fit();

    const std::int32_t l = grow(left, depth + 1);
    const std::int32_t r = grow(right, depth + 1);
    auto& node = tree_.nodes[static_cast<std::size_t>(id)];
    node.feature = static_cast<std::int32_t>(split->feature);
    node.threshold = split->threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  // Features are tried in random order until features_per_split of them
  // have at least two distinct values here.
  std::optional<Split> best_split(std::span<const std::size_t> samples) {
    std::array<std::size_t, kFeatureCount> order{};
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng_);

    const Counts total = count(samples);
    const double n = static_cast<double>(samples.size());
    std::optional<Split> best;
    std::size_t tried = 0;
    std::vector<std::size_t> sorted(samples.begin(), samples.end());

    for (std::size_t f : order) {
      if (tried >= params_.features_per_split) break;
      std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
        return x_[a][f] < x_[b][f] || (x_[a][f] == x_[b][f] && a < b);
      });
      if (x_[sorted.front()][f] == x_[sorted.back()][f]) continue;
      ++tried;

      Counts left{0, 0};
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        ++left[static_cast<std::size_t>(y_[sorted[i]])];
        const double lo = x_[sorted[i]][f];
        const double hi = x_[sorted[i + 1]][f];
        if (lo == hi) continue;
        const Counts right{total[0] - left[0], total[1] - left[1]};
        const double nl = static_cast<double>(i + 1);
        const double impurity = (nl * gini(left) + (n - nl) * gini(right)) / n;
        if (!best || impurity < best->impurity) {
          double mid = lo + (hi - lo) / 2;
          if (!(mid < hi)) mid = lo;
          best = Split{f, mid, impurity};
        }
      }
    }
    return best;
  }

  std::span<const FeatureVector> x_;
  std::span<const Strategy> y_;
  const ForestParams& params_;
  std::mt19937_64& rng_;
  ForestModel::Tree tree_;
};

Strategy predict_tree(const ForestModel::Tree& tree, const FeatureVector& x) {
  std::size_t i = 0;
  while (tree.nodes[i].feature >= 0) {
    const auto& node = tree.nodes[i];
    i = static_cast<std::size_t>(x[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left
                                                                                                : node.right);
  }
  return tree.nodes[i].label;
}

Strategy parse_label(const nlohmann::json& j) {
  if (!j.is_string()) throw ModelError("leaf label must be a string");
  const auto s = j.get<std::string>();
  if (s == "C_V") return Strategy::kVertex;
  if (s == "C_E") return Strategy::kEdge;
  throw ModelError("unknown leaf label '" + s + "'");
}

}  // namespace

ForestModel ForestModel::fit(std::span<const FeatureVector> x, std::span<const Strategy> y,
                             const ForestParams& params) {
  if (x.empty()) throw ModelError("no training samples");
  if (x.size() != y.size()) throw ModelError("feature and label counts differ");
  if (params.trees == 0) throw ModelError("forest needs at least one tree");

  Counts c{0, 0};
  for (Strategy s : y) ++c[static_cast<std::size_t>(s)];
  if (c[0] == 0 || c[1] == 0) return constant(majority(c));

  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
  TreeBuilder builder(x, y, params, rng);
  ForestModel model;
  model.trees_.reserve(params.trees);
  for (std::size_t t = 0; t < params.trees; ++t) {
    std::vector<std::size_t> samples(x.size());
    if (params.bootstrap) {
      for (auto& s : samples) s = pick(rng);
    } else {
      std::iota(samples.begin(), samples.end(), 0);
    }
    model.trees_.push_back(builder.build(std::move(samples)));
  }
  return model;
}

ForestModel ForestModel::constant(Strategy s) {
  ForestModel model;
  model.trees_.push_back(Tree{{Node{-1, 0, -1, -1, s}}});
  return model;
}

ForestModel ForestModel::from_trees(std::vector<Tree> trees) {
  ForestModel model;
  model.trees_ = std::move(trees);
  return model;
}

Strategy ForestModel::predict(const FeatureVector& x) const {
  if (trees_.empty()) throw ModelError("predict on an empty model");
  std::size_t vertex_votes = 0;
  for (const Tree& t : trees_) vertex_votes += predict_tree(t, x) == Strategy::kVertex;
  return 2 * vertex_votes > trees_.size() ? Strategy::kVertex : Strategy::kEdge;
}

std::string ForestModel::to_json() const {
  nlohmann::json names = nlohmann::json::array();
  for (auto name : feature_names()) names.push_back(std::string(name));
  nlohmann::json trees = nlohmann::json::array();
  for (const Tree& t : trees_) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Node& n : t.nodes) {
      if (n.feature < 0) {
        nodes.push_back({{"leaf", std::string(to_string(n.label))}});
      } else {
        nodes.push_back({{"feature", n.feature}, {"threshold", n.threshold}, {"left", n.left}, {"right", n.right},
                         {"label", std::string(to_string(n.label))}});
      }
    }
    trees.push_back({{"nodes", std::move(nodes)}});
  }
  const nlohmann::json doc = {
      {"format", kFormat}, {"version", kVersion}, {"features", std::move(names)}, {"trees", std::move(trees)}};
  return doc.dump(1) + "\n";
}

ForestModel ForestModel::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ModelError(std::string("model is not valid JSON: ") + err.what());
  }
  try {
    if (doc.value("format", "") != kFormat) throw ModelError("not a trussmaint-forest model");
    if (doc.value("version", 0) != kVersion) throw ModelError("unsupported model version");
    const auto& names = doc.at("features");
    if (names.size() != kFeatureCount) throw ModelError("model expects a different feature count");
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      if (names[i].get<std::string>() != feature_names()[i]) {
        throw ModelError("feature " + std::to_string(i) + " is '" + names[i].get<std::string>() + "', expected '" +
                         std::string(feature_names()[i]) + "'");
      }
    }
    const auto& trees = doc.at("trees");
    if (!trees.is_array() || trees.empty()) throw ModelError("model has no trees");

    ForestModel model;
    for (const auto& jt : trees) {
      const auto& jn = jt.at("nodes");
      if (!jn.is_array() || jn.empty()) throw ModelError("tree has no nodes");
      Tree t;
      const auto count = static_cast<std::int64_t>(jn.size());
      for (std::int64_t i = 0; i < count; ++i) {
        const auto& j = jn[static_cast<std::size_t>(i)];
        Node n;
        if (j.contains("leaf")) {
          n.label = parse_label(j.at("leaf"));
        } else {
          n.feature = j.at("feature").get<std::int32_t>();
          n.threshold = j.at("threshold").get<double>();
          n.left = j.at("left").get<std::int32_t>();
          n.right = j.at("right").get<std::int32_t>();
          n.label = parse_label(j.at("label"));
          if (n.feature < 0 || static_cast<std::size_t>(n.feature) >= kFeatureCount) {
            throw ModelError("split feature out of range");
          }
          if (!std::isfinite(n.threshold)) throw ModelError("split threshold is not finite");
          // Children after their parent keeps every path finite.
          if (n.left <= i || n.right <= i || n.left >= count || n.right >= count) {
            throw ModelError("child index out of range");
          }
        }
        t.nodes.push_back(n);
      }
      model.trees_.push_back(std::move(t));
    }
    return model;
  } catch (const nlohmann::json::exception& err) {
    throw ModelError(std::string("malformed model: ") + err.what());
  }
}

DegreeThresholdClassifier DegreeThresholdClassifier::fit(std::span<const FeatureVector> x,
                                                         std::span<const Strategy> y) {
  if (x.empty()) throw ModelError("no training samples");
  if (x.size() != y.size()) throw ModelError("feature and label counts differ");

  DegreeThresholdClassifier best;
  std::size_t best_correct = 0;
  for (std::size_t f : {std::size_t{0}, std::size_t{1}}) {
    std::vector<double> values;
    for (const auto& row : x) values.push_back(row[f]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<double> cuts{values.front() - 1};
    for (std::size_t i = 0; i + 1 < values.size(); ++i) cuts.push_back(values[i] + (values[i + 1] - values[i]) / 2);

    for (double cut : cuts) {
      for (Strategy below : {Strategy::kVertex, Strategy::kEdge}) {
        DegreeThresholdClassifier c;
        c.feature_ = f;
        c.threshold_ = cut;
        c.at_or_below_ = below;
        std::size_t correct = 0;
        for (std::size_t i = 0; i < x.size(); ++i) correct += c.predict(x[i]) == y[i];
        if (correct > best_correct) {
          best_correct = correct;
          best = c;
        }
      }
    }
  }
  return best;
}

Strategy DegreeThresholdClassifier::predict(const FeatureVector& x) const {
  if (x[feature_] <= threshold_) return at_or_below_;
  return at_or_below_ == Strategy::kVertex ? Strategy::kEdge : Strategy::kVertex;
}

}  // namespace trussmaint
