#pragma once

#include <span>
#include <vector>

#include "infodemic/matrix.hpp"
#include "infodemic/ml.hpp"
#include "infodemic/rng.hpp"

namespace infodemic::detail {

// Shared CART growth used by the plain tree, forest, bagging and the boosted
// stumps. `rows` may repeat indices (bootstrap resamples). Weights default to
// 1 per row. When `features_per_split` > 0 a fresh subset is drawn from `rng`
// at every split and scanned in ascending index order, so a subset of all
// features reproduces the unrestricted tree exactly.
struct GrowthSpec {
  int max_depth = 0;  // 0 = unlimited
  int min_samples_split = 2;
  int features_per_split = 0;  // 0 = all features
  Rng* rng = nullptr;
  std::span<const double> sample_weights = {};  // indexed by original row id
};

DecisionTreeModel grow_tree(const Matrix& X, const std::vector<int>& y,
                            std::vector<std::size_t> rows, const GrowthSpec& spec);

// Throws "row r, column c: non-finite feature value" and checks y/X row
// agreement. Every trainer calls this once up front.
void validate_training_data(const Matrix& X, const std::vector<int>& y);

}  // namespace infodemic::detail
