#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace mimicry {

struct ForestParams {
  std::size_t trees = 100;
  int max_depth = 12;
  std::size_t min_samples_split = 2;
  std::size_t mtry = 0;  // features tried per split; 0 means round(sqrt(d))
  bool bootstrap = true;
  std::uint64_t seed = 0;
};

/// CART classification tree with Gini splits. Rows go left when
/// x[feature] <= threshold.
class DecisionTree {
 public:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int label = 0;
  };

  void fit(const std::vector<std::vector<double>>& x, std::span<const int> y, std::span<const std::size_t> rows,
           int n_classes, const ForestParams& params, std::uint64_t seed);
  int predict(std::span<const double> x) const;
  std::size_t node_count() const noexcept { return nodes_.size(); }

  nlohmann::json to_json() const;
  static DecisionTree from_json(const nlohmann::json& j);

 private:
  std::vector<Node> nodes_;
};

/// Bagged ensemble of decision trees with majority vote.
class RandomForest {
 public:
  /// Throws DomainError on empty or ragged input.
  void fit(const std::vector<std::vector<double>>& x, std::span<const int> y, int n_classes,
           const ForestParams& params);

  /// Votes per class.
  std::vector<std::size_t> votes(std::span<const double> x) const;

  struct Prediction {
    int label = 0;
    double confidence = 0.0;  // share of trees voting for the label
  };
  /// Ties go to the smaller label.
  Prediction predict(std::span<const double> x) const;

  int n_classes() const noexcept { return n_classes_; }
  std::size_t n_features() const noexcept { return n_features_; }
  std::size_t size() const noexcept { return trees_.size(); }

  nlohmann::json to_json() const;
  static RandomForest from_json(const nlohmann::json& j);

 private:
  std::vector<DecisionTree> trees_;
  int n_classes_ = 0;
  std::size_t n_features_ = 0;
};

}  // namespace mimicry
