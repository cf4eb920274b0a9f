#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "infodemic/ml.hpp"
#include "tree_builder.hpp"

namespace infodemic {

namespace {

double gini_from_weights(double w0, double w1) {
  const double total = w0 + w1;
  const double p0 = w0 / total;
  const double p1 = w1 / total;
  return 1.0 - p0 * p0 - p1 * p1;
}

struct SplitChoice {
  bool found = false;
  int feature = -1;
  double threshold = 0.0;
  double gain = -std::numeric_limits<double>::infinity();
};

}  // namespace

namespace detail {

void validate_training_data(const Matrix& X, const std::vector<int>& y) {
  if (X.rows != y.size()) {
    throw std::invalid_argument("feature matrix has " + std::to_string(X.rows) +
                                " rows but " + std::to_string(y.size()) + " labels");
  }
  if (X.rows == 0) throw std::invalid_argument("empty training data");
  for (std::size_t r = 0; r < X.rows; ++r) {
    for (std::size_t c = 0; c < X.cols; ++c) {
      if (!std::isfinite(X.at(r, c))) {
        throw std::invalid_argument("row " + std::to_string(r) + ", column " +
                                    std::to_string(c) + ": non-finite feature value");
      }
    }
    if (y[r] != 0 && y[r] != 1) {
      throw std::invalid_argument("row " + std::to_string(r) + ": label must be 0 or 1");
    }
  }
}

namespace {

struct Builder {
  const Matrix& X;
  const std::vector<int>& y;
  const GrowthSpec& spec;
  std::vector<TreeNode> nodes;
  // scratch reused across nodes
  std::vector<std::pair<double, std::size_t>> sorted;

  double weight_of(std::size_t row) const {
    return spec.sample_weights.empty() ? 1.0 : spec.sample_weights[row];
  }

  std::vector<std::size_t> candidate_features() {
    const std::size_t n_features = X.cols;
    if (spec.features_per_split <= 0 ||
        static_cast<std::size_t>(spec.features_per_split) >= n_features) {
      std::vector<std::size_t> all(n_features);
      std::iota(all.begin(), all.end(), std::size_t{0});
      return all;
    }
    auto subset = spec.rng->sample_without_replacement(
        n_features, static_cast<std::size_t>(spec.features_per_split));
    std::sort(subset.begin(), subset.end());
    return subset;
  }

  SplitChoice best_split(const std::vector<std::size_t>& rows, double w0, double w1) {
    SplitChoice best;
    const double total = w0 + w1;
    const double parent = gini_from_weights(w0, w1);
    for (const std::size_t f : candidate_features()) {
      sorted.clear();
      for (const std::size_t r : rows) sorted.emplace_back(X.at(r, f), r);
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      double lw0 = 0.0, lw1 = 0.0;
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const std::size_t r = sorted[i].second;
        const double w = weight_of(r);
        (y[r] == 0 ? lw0 : lw1) += w;
        if (sorted[i].first == sorted[i + 1].first) continue;
        const double rw0 = w0 - lw0, rw1 = w1 - lw1;
        const double lw = lw0 + lw1, rw = rw0 + rw1;
        const double children =
            (lw * gini_from_weights(lw0, lw1) + rw * gini_from_weights(rw0, rw1)) / total;
        const double gain = parent - children;
        if (gain > best.gain) {
          best.found = true;
          best.gain = gain;
          best.feature = static_cast<int>(f);
          best.threshold = (sorted[i].first + sorted[i + 1].first) * 0.5;
        }
      }
    }
    return best;
  }

  std::int32_t build(std::vector<std::size_t> rows, int depth) {
    double w0 = 0.0, w1 = 0.0;
    for (const std::size_t r : rows) (y[r] == 0 ? w0 : w1) += weight_of(r);

    const std::int32_t id = static_cast<std::int32_t>(nodes.size());
    nodes.emplace_back();
    nodes[id].class_counts[0] = w0;
    nodes[id].class_counts[1] = w1;
    nodes[id].predicted_label = w1 > w0 ? 1 : 0;

    const bool pure = w0 == 0.0 || w1 == 0.0;
    const bool depth_capped = spec.max_depth > 0 && depth >= spec.max_depth;
    const bool too_small = rows.size() < static_cast<std::size_t>(spec.min_samples_split);
    if (pure || depth_capped || too_small) return id;

    const SplitChoice split = best_split(rows, w0, w1);
    if (!split.found) return id;  // all candidate feature values identical

    std::vector<std::size_t> left_rows, right_rows;
    for (const std::size_t r : rows) {
      (X.at(r, static_cast<std::size_t>(split.feature)) <= split.threshold ? left_rows
                                                                           : right_rows)
          .push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    nodes[id].feature_index = split.feature;
    nodes[id].threshold = split.threshold;
    const std::int32_t left = build(std::move(left_rows), depth + 1);
    nodes[id].left = left;
    const std::int32_t right = build(std::move(right_rows), depth + 1);
    nodes[id].right = right;
    return id;
  }
};

}  // namespace

DecisionTreeModel grow_tree(const Matrix& X, const std::vector<int>& y,
                            std::vector<std::size_t> rows, const GrowthSpec& spec) {
  Builder builder{X, y, spec, {}, {}};
  builder.build(std::move(rows), 0);
  DecisionTreeModel model;
  model.nodes = std::move(builder.nodes);
  model.n_features = X.cols;
  model.params.max_depth = spec.max_depth;
  model.params.min_samples_split = spec.min_samples_split;
  return model;
}

}  // namespace detail

double gini_impurity(const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("gini_impurity: empty input");
  double w0 = 0.0, w1 = 0.0;
  for (const int label : labels) {
    if (label != 0 && label != 1) {
      throw std::invalid_argument("gini_impurity: label must be 0 or 1");
    }
    (label == 0 ? w0 : w1) += 1.0;
  }
  return gini_from_weights(w0, w1);
}

int DecisionTreeModel::predict_row(std::span<const double> row) const {
  std::int32_t id = 0;
  while (!nodes[id].is_leaf()) {
    id = row[static_cast<std::size_t>(nodes[id].feature_index)] <= nodes[id].threshold
             ? nodes[id].left
             : nodes[id].right;
  }
  return nodes[id].predicted_label;
}

DecisionTreeModel train_decision_tree(const Matrix& X, const std::vector<int>& y,
                                      const TreeParams& params) {
  detail::validate_training_data(X, y);
  detail::GrowthSpec spec;
  spec.max_depth = params.max_depth;
  spec.min_samples_split = params.min_samples_split;
  std::vector<std::size_t> rows(X.rows);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  DecisionTreeModel model = detail::grow_tree(X, y, std::move(rows), spec);
  model.params = params;
  return model;
}

}  // namespace infodemic
