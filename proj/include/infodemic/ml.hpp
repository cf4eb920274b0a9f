#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "infodemic/matrix.hpp"

namespace infodemic {

// ---------------------------------------------------------------- trees

struct TreeParams {
  int max_depth = 0;  // 0 = unlimited
  int min_samples_split = 2;
  std::uint64_t seed = 0;
};

struct TreeNode {
  int feature_index = -1;  // -1 marks a leaf
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  double class_counts[2] = {0.0, 0.0};  // weighted counts at fit time
  int predicted_label = 0;

  bool is_leaf() const { return feature_index < 0; }
};

// Binary CART grown by greedy Gini reduction over midpoint thresholds.
// Rows with value <= threshold go left. Nodes are stored in preorder.
struct DecisionTreeModel {
  std::vector<TreeNode> nodes;
  TreeParams params;
  std::size_t n_features = 0;

  int predict_row(std::span<const double> row) const;
};

// 1 - p0^2 - p1^2. Empty input is an error.
double gini_impurity(const std::vector<int>& labels);

DecisionTreeModel train_decision_tree(const Matrix& X, const std::vector<int>& y,
                                      const TreeParams& params = {});

// ---------------------------------------------------------------- ensembles

struct ForestParams {
  int n_trees = 100;
  int features_per_split = 0;  // 0 = floor(sqrt(n_features))
  bool bootstrap = true;
  std::uint64_t master_seed = 0;
  int max_depth = 0;
  int min_samples_split = 2;
};

// Majority vote over trees; exact ties predict 0. Tree i trains with a seed
// derived from (master_seed, i), so results are identical at any thread count.
struct RandomForestModel {
  std::vector<DecisionTreeModel> trees;
  ForestParams params;
  std::size_t n_features = 0;

  int predict_row(std::span<const double> row) const;
};

RandomForestModel train_random_forest(const Matrix& X, const std::vector<int>& y,
                                      const ForestParams& params = {}, int n_threads = 1);

struct BaggingParams {
  int n_estimators = 10;
  std::uint64_t master_seed = 0;
  int max_depth = 0;
  int min_samples_split = 2;
};

// Full-depth trees on bootstrap resamples considering every feature at every
// split; majority vote, ties predict 0.
struct BaggingModel {
  std::vector<DecisionTreeModel> estimators;
  BaggingParams params;
  std::size_t n_features = 0;

  int predict_row(std::span<const double> row) const;
};

BaggingModel train_bagging(const Matrix& X, const std::vector<int>& y,
                           const BaggingParams& params = {}, int n_threads = 1);

// ---------------------------------------------------------------- boosting

struct AdaBoostParams {
  int n_rounds = 50;
  double learning_rate = 1.0;
  std::uint64_t seed = 0;
};

struct AdaBoostStage {
  DecisionTreeModel stump;  // depth-1, trained on weighted samples
  double alpha = 0.0;       // learning_rate * ln((1 - err) / err)
  double training_error = 0.0;
};

struct AdaBoostTrainStats {
  std::vector<double> weight_sums;  // after each round's renormalization
};

// Two-class discrete AdaBoost. Training stops early on a perfect stump (kept)
// or one no better than chance (dropped); a chance-level first stump throws.
// Prediction is the sign of sum(alpha * (2 h(x) - 1)), ties predicting 0.
struct AdaBoostModel {
  std::vector<AdaBoostStage> stages;
  AdaBoostParams params;
  std::size_t n_features = 0;

  int predict_row(std::span<const double> row) const;
};

AdaBoostModel train_adaboost(const Matrix& X, const std::vector<int>& y,
                             const AdaBoostParams& params = {},
                             AdaBoostTrainStats* stats = nullptr);

// ---------------------------------------------------------------- linear SVM

struct SvmParams {
  double lambda = 1e-4;
  int epochs = 20;
  std::uint64_t seed = 0;
};

// Per-column standardization fitted on the training matrix; columns with zero
// variance get scale 1.
struct Scaler {
  std::vector<double> mean;
  std::vector<double> scale;
};

struct SvmTrainStats {
  // Primal objective of each epoch's averaged iterate, evaluated on the
  // (standardized) training set.
  std::vector<double> epoch_objectives;
};

// Pegasos-style stochastic subgradient descent on the primal hinge loss with
// step 1/(lambda * t), deterministic per-epoch shuffling, and a regularized
// bias (constant augmented feature). The returned weights are the average
// over the final epoch's iterates.
struct LinearSvmModel {
  std::vector<double> weights;
  double bias = 0.0;
  Scaler scaler;
  SvmParams params;
  std::size_t n_features = 0;

  int predict_row(std::span<const double> row) const;  // 1 iff w.x + b > 0
};

LinearSvmModel train_linear_svm(const Matrix& X, const std::vector<int>& y,
                                const SvmParams& params = {},
                                SvmTrainStats* stats = nullptr);

// ---------------------------------------------------------------- dispatch

using ClassifierModel = std::variant<DecisionTreeModel, RandomForestModel,
                                     AdaBoostModel, BaggingModel, LinearSvmModel>;

// Pure; throws on a feature-count mismatch. An empty matrix yields no labels.
std::vector<int> predict(const ClassifierModel& model, const Matrix& X);

std::string family_name(const ClassifierModel& model);
std::size_t model_n_features(const ClassifierModel& model);

}  // namespace infodemic
