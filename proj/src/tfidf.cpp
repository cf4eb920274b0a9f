#include "infodemic/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infodemic {

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& corpus, int k) {
  if (corpus.empty()) throw std::invalid_argument("build_vocabulary: empty corpus");
  if (k < 1) throw std::invalid_argument("build_vocabulary: k must be >= 1");

  std::unordered_map<std::string, long> counts;
  for (const auto& doc : corpus) {
    for (const auto& term : doc) ++counts[term];
  }

  std::vector<std::pair<std::string, long>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(k);

  Vocabulary vocab;
  vocab.k = k;
  vocab.terms.reserve(ranked.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    vocab.terms.push_back(ranked[i].first);
    vocab.index.emplace(ranked[i].first, i);
  }
  return vocab;
}

TfidfModel fit_tfidf(const std::vector<std::vector<std::string>>& corpus, int k) {
  TfidfModel model;
  model.vocabulary = build_vocabulary(corpus, k);
  model.doc_count = static_cast<long>(corpus.size());

  std::vector<long> df(model.vocabulary.size(), 0);
  std::vector<long> seen_in_doc(model.vocabulary.size(), -1);
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (const auto& term : corpus[d]) {
      const auto it = model.vocabulary.index.find(term);
      if (it == model.vocabulary.index.end()) continue;
      if (seen_in_doc[it->second] != static_cast<long>(d)) {
        seen_in_doc[it->second] = static_cast<long>(d);
        ++df[it->second];
      }
    }
  }

  model.idf.resize(model.vocabulary.size());
  for (std::size_t i = 0; i < df.size(); ++i) {
    model.idf[i] = std::log(static_cast<double>(1 + model.doc_count) /
                            static_cast<double>(1 + df[i])) +
                   1.0;
  }
  return model;
}

std::map<std::string, double> transform(const std::vector<std::string>& doc,
                                        const TfidfModel& model) {
  std::map<std::string, double> weights;
  for (const auto& term : doc) {
    const auto it = model.vocabulary.index.find(term);
    if (it == model.vocabulary.index.end()) continue;
    weights[term] += model.idf[it->second];
  }
  if (weights.empty()) return weights;

  double norm_sq = 0.0;
  for (const auto& [term, w] : weights) norm_sq += w * w;
  const double norm = std::sqrt(norm_sq);
  for (auto& [term, w] : weights) w /= norm;
  return weights;
}

}  // namespace infodemic
