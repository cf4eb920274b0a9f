#include <cmath>
#include <numeric>
#include <stdexcept>

#include "infodemic/ml.hpp"
#include "infodemic/rng.hpp"
#include "parallel.hpp"
#include "tree_builder.hpp"

namespace infodemic {

namespace {

std::vector<std::size_t> bootstrap_rows(std::size_t n, Rng& rng) {
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = rng.uniform_index(n);
  return rows;
}

std::vector<std::size_t> identity_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return rows;
}

int majority_vote(const std::vector<DecisionTreeModel>& trees,
                  std::span<const double> row) {
  long votes = 0;
  for (const auto& tree : trees) votes += tree.predict_row(row) == 1 ? 1 : -1;
  return votes > 0 ? 1 : 0;
}

void require_both_classes(const std::vector<int>& y, const char* trainer) {
  bool has0 = false, has1 = false;
  for (const int label : y) (label == 0 ? has0 : has1) = true;
  if (!has0 || !has1) {
    throw std::invalid_argument(std::string(trainer) + ": both classes must be present");
  }
}

}  // namespace

int RandomForestModel::predict_row(std::span<const double> row) const {
  return majority_vote(trees, row);
}

RandomForestModel train_random_forest(const Matrix& X, const std::vector<int>& y,
                                      const ForestParams& params, int n_threads) {
  detail::validate_training_data(X, y);
  if (params.n_trees < 1) {
    throw std::invalid_argument("train_random_forest: n_trees must be >= 1");
  }
  int fps = params.features_per_split;
  if (fps <= 0) {
    fps = std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(X.cols)))));
  }
  if (static_cast<std::size_t>(fps) > X.cols) {
    throw std::invalid_argument("train_random_forest: features_per_split exceeds features");
  }

  RandomForestModel model;
  model.params = params;
  model.params.features_per_split = fps;
  model.n_features = X.cols;
  model.trees.resize(params.n_trees);

  detail::parallel_for(
      static_cast<std::size_t>(params.n_trees), n_threads, [&](std::size_t i) {
        Rng rng(derive_seed(params.master_seed, i));
        auto rows = params.bootstrap ? bootstrap_rows(X.rows, rng) : identity_rows(X.rows);
        detail::GrowthSpec spec;
        spec.max_depth = params.max_depth;
        spec.min_samples_split = params.min_samples_split;
        spec.features_per_split = fps;
        spec.rng = &rng;
        model.trees[i] = detail::grow_tree(X, y, std::move(rows), spec);
      });
  return model;
}

int BaggingModel::predict_row(std::span<const double> row) const {
  return majority_vote(estimators, row);
}

BaggingModel train_bagging(const Matrix& X, const std::vector<int>& y,
                           const BaggingParams& params, int n_threads) {
  detail::validate_training_data(X, y);
  if (params.n_estimators < 1) {
    throw std::invalid_argument("train_bagging: n_estimators must be >= 1");
  }

  BaggingModel model;
  model.params = params;
  model.n_features = X.cols;
  model.estimators.resize(params.n_estimators);

  detail::parallel_for(
      static_cast<std::size_t>(params.n_estimators), n_threads, [&](std::size_t i) {
        Rng rng(derive_seed(params.master_seed, i));
        auto rows = bootstrap_rows(X.rows, rng);
        detail::GrowthSpec spec;
        spec.max_depth = params.max_depth;
        spec.min_samples_split = params.min_samples_split;
        model.estimators[i] = detail::grow_tree(X, y, std::move(rows), spec);
      });
  return model;
}

int AdaBoostModel::predict_row(std::span<const double> row) const {
  double score = 0.0;
  for (const auto& stage : stages) {
    score += stage.alpha * (stage.stump.predict_row(row) == 1 ? 1.0 : -1.0);
  }
  return score > 0.0 ? 1 : 0;
}

AdaBoostModel train_adaboost(const Matrix& X, const std::vector<int>& y,
                             const AdaBoostParams& params, AdaBoostTrainStats* stats) {
  detail::validate_training_data(X, y);
  require_both_classes(y, "train_adaboost");
  if (params.n_rounds < 1) {
    throw std::invalid_argument("train_adaboost: n_rounds must be >= 1");
  }

  AdaBoostModel model;
  model.params = params;
  model.n_features = X.cols;

  const std::size_t n = X.rows;
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  // err == 0 stands in for this floor when computing the final stage weight
  constexpr double kMinError = 1e-10;

  for (int round = 0; round < params.n_rounds; ++round) {
    detail::GrowthSpec spec;
    spec.max_depth = 1;
    spec.min_samples_split = 2;
    spec.sample_weights = weights;
    DecisionTreeModel stump = detail::grow_tree(X, y, identity_rows(n), spec);

    std::vector<bool> wrong(n);
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      wrong[i] = stump.predict_row(X.row(i)) != y[i];
      if (wrong[i]) err += weights[i];
    }

    if (err >= 0.5) {
      if (round == 0) {
        throw std::runtime_error("train_adaboost: no weak learner better than chance");
      }
      break;  // stage dropped
    }

    const double bounded_err = err > 0.0 ? err : kMinError;
    const double alpha = params.learning_rate * std::log((1.0 - bounded_err) / bounded_err);
    model.stages.push_back({std::move(stump), alpha, err});
    if (err == 0.0) break;

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (wrong[i]) weights[i] *= std::exp(alpha);
      sum += weights[i];
    }
    for (double& w : weights) w /= sum;
    if (stats) {
      double renormalized = 0.0;
      for (const double w : weights) renormalized += w;
      stats->weight_sums.push_back(renormalized);
    }
  }
  return model;
}

}  // namespace infodemic
