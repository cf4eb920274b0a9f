#include <cmath>
#include <numeric>
#include <stdexcept>

#include "infodemic/ml.hpp"
#include "infodemic/rng.hpp"
#include "tree_builder.hpp"

namespace infodemic {

namespace {

// Standardized copy of X with a trailing constant-1 column for the bias.
Matrix standardize(const Matrix& X, Scaler& scaler) {
  const std::size_t n = X.rows, d = X.cols;
  scaler.mean.assign(d, 0.0);
  scaler.scale.assign(d, 1.0);
  for (std::size_t c = 0; c < d; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) sum += X.at(r, c);
    scaler.mean[c] = sum / static_cast<double>(n);
    double var = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double delta = X.at(r, c) - scaler.mean[c];
      var += delta * delta;
    }
    const double sd = std::sqrt(var / static_cast<double>(n));
    scaler.scale[c] = sd > 0.0 ? sd : 1.0;
  }

  Matrix Z(n, d + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Z.at(r, c) = (X.at(r, c) - scaler.mean[c]) / scaler.scale[c];
    }
    Z.at(r, d) = 1.0;
  }
  return Z;
}

double objective(const Matrix& Z, const std::vector<double>& y_pm,
                 const std::vector<double>& w, double lambda) {
  double norm_sq = 0.0;
  for (const double v : w) norm_sq += v * v;
  double hinge = 0.0;
  for (std::size_t r = 0; r < Z.rows; ++r) {
    double dot = 0.0;
    const auto row = Z.row(r);
    for (std::size_t c = 0; c < w.size(); ++c) dot += w[c] * row[c];
    hinge += std::max(0.0, 1.0 - y_pm[r] * dot);
  }
  return 0.5 * lambda * norm_sq + hinge / static_cast<double>(Z.rows);
}

}  // namespace

int LinearSvmModel::predict_row(std::span<const double> row) const {
  double dot = bias;
  for (std::size_t c = 0; c < weights.size(); ++c) {
    dot += weights[c] * (row[c] - scaler.mean[c]) / scaler.scale[c];
  }
  return dot > 0.0 ? 1 : 0;
}

LinearSvmModel train_linear_svm(const Matrix& X, const std::vector<int>& y,
                                const SvmParams& params, SvmTrainStats* stats) {
  detail::validate_training_data(X, y);
  if (params.lambda <= 0.0) {
    throw std::invalid_argument("train_linear_svm: lambda must be > 0");
  }
  if (params.epochs < 1) {
    throw std::invalid_argument("train_linear_svm: epochs must be >= 1");
  }
  {
    bool has0 = false, has1 = false;
    for (const int label : y) (label == 0 ? has0 : has1) = true;
    if (!has0 || !has1) {
      throw std::invalid_argument("train_linear_svm: both classes must be present");
    }
  }

  LinearSvmModel model;
  model.params = params;
  model.n_features = X.cols;

  const Matrix Z = standardize(X, model.scaler);
  const std::size_t n = Z.rows, d = Z.cols;  // d includes the bias column

  std::vector<double> y_pm(n);
  for (std::size_t i = 0; i < n; ++i) y_pm[i] = y[i] == 1 ? 1.0 : -1.0;

  std::vector<double> w(d, 0.0), epoch_avg(d, 0.0);
  const double radius = 1.0 / std::sqrt(params.lambda);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  long t = 0;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(epoch)));
    rng.shuffle(order);
    std::fill(epoch_avg.begin(), epoch_avg.end(), 0.0);

    for (const std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (params.lambda * static_cast<double>(t));
      const auto row = Z.row(i);
      double dot = 0.0;
      for (std::size_t c = 0; c < d; ++c) dot += w[c] * row[c];
      const bool violates = y_pm[i] * dot < 1.0;

      const double shrink = 1.0 - eta * params.lambda;  // = 1 - 1/t
      for (std::size_t c = 0; c < d; ++c) {
        w[c] *= shrink;
        if (violates) w[c] += eta * y_pm[i] * row[c];
      }
      double norm_sq = 0.0;
      for (const double v : w) norm_sq += v * v;
      const double norm = std::sqrt(norm_sq);
      if (norm > radius) {
        const double cap = radius / norm;
        for (double& v : w) v *= cap;
      }
      for (std::size_t c = 0; c < d; ++c) epoch_avg[c] += w[c];
    }
    for (double& v : epoch_avg) v /= static_cast<double>(n);
    if (stats) stats->epoch_objectives.push_back(objective(Z, y_pm, epoch_avg, params.lambda));
  }

  model.weights.assign(epoch_avg.begin(), epoch_avg.end() - 1);
  model.bias = epoch_avg.back();
  return model;
}

}  // namespace infodemic
