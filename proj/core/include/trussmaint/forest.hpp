#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trussmaint/features.hpp"

namespace trussmaint {

/// The two ways of materializing an owner's view: C_V inserts the owner as
/// a node, C_E inserts each private edge separately.
enum class Strategy : std::uint8_t { kVertex = 0, kEdge = 1 };

std::string_view to_string(Strategy s);

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ForestParams {
  std::size_t trees = 51;
  std::size_t max_depth = 11;
  std::size_t features_per_split = 3;
  std::size_t min_samples_split = 2;
  bool bootstrap = true;
  std::uint64_t seed = 1;
};

/// Binary random forest over FeatureVector with gini splits.
/// Votes are majority over trees; ties go to kEdge.
class ForestModel {
 public:
  struct Node {
    std::int32_t feature = -1;  // -1 marks a leaf
    double threshold = 0;       // go left when x[feature] <= threshold
    std::int32_t left = -1;
    std::int32_t right = -1;
    Strategy label = Strategy::kEdge;

    bool operator==(const Node&) const = default;
  };
  struct Tree {
    std::vector<Node> nodes;  // nodes[0] is the root

    bool operator==(const Tree&) const = default;
  };

  ForestModel() = default;

  /// Throws ModelError for empty or mismatched input. With a single class
  /// present the result is a constant model (see is_constant()).
  static ForestModel fit(std::span<const FeatureVector> x, std::span<const Strategy> y, const ForestParams& params);
  static ForestModel constant(Strategy s);
  static ForestModel from_trees(std::vector<Tree> trees);

  Strategy predict(const FeatureVector& x) const;

  bool is_constant() const { return trees_.size() == 1 && trees_[0].nodes.size() == 1; }
  const std::vector<Tree>& trees() const { return trees_; }

  /// "trussmaint-forest" JSON, format version 1. from_json validates the
  /// structure and throws ModelError on anything malformed.
  std::string to_json() const;
  static ForestModel from_json(std::string_view text);

  bool operator==(const ForestModel&) const = default;

 private:
  std::vector<Tree> trees_;
};

/// Single threshold on public or private degree, picked by training
/// accuracy. Used as the baseline the forest has to beat.
class DegreeThresholdClassifier {
 public:
  static DegreeThresholdClassifier fit(std::span<const FeatureVector> x, std::span<const Strategy> y);
  Strategy predict(const FeatureVector& x) const;

  std::size_t feature() const { return feature_; }
  double threshold() const { return threshold_; }

 private:
  std::size_t feature_ = 0;
  double threshold_ = 0;
  Strategy at_or_below_ = Strategy::kEdge;
};

}  // namespace trussmaint
