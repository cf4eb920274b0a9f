#include <stdexcept>

#include "infodemic/ml.hpp"

namespace infodemic {

std::size_t model_n_features(const ClassifierModel& model) {
  return std::visit([](const auto& m) { return m.n_features; }, model);
}

std::string family_name(const ClassifierModel& model) {
  struct Visitor {
    std::string operator()(const DecisionTreeModel&) const { return "tree"; }
    std::string operator()(const RandomForestModel&) const { return "forest"; }
    std::string operator()(const AdaBoostModel&) const { return "adaboost"; }
    std::string operator()(const BaggingModel&) const { return "bagging"; }
    std::string operator()(const LinearSvmModel&) const { return "svm"; }
  };
  return std::visit(Visitor{}, model);
}

std::vector<int> predict(const ClassifierModel& model, const Matrix& X) {
  if (X.rows == 0) return {};
  const std::size_t expected = model_n_features(model);
  if (X.cols != expected) {
    throw std::invalid_argument("predict: model expects " + std::to_string(expected) +
                                " features, got " + std::to_string(X.cols));
  }
  std::vector<int> labels(X.rows);
  std::visit(
      [&](const auto& m) {
        for (std::size_t r = 0; r < X.rows; ++r) labels[r] = m.predict_row(X.row(r));
      },
      model);
  return labels;
}

}  // namespace infodemic
