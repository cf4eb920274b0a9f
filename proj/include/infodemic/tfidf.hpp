#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace infodemic {

inline constexpr int kDefaultVocabularySize = 2000;

// Terms ranked by total corpus occurrence count, descending, ties broken
// lexicographically ascending; at most `k` kept.
struct Vocabulary {
  std::vector<std::string> terms;
  std::unordered_map<std::string, std::size_t> index;
  int k = kDefaultVocabularySize;

  std::size_t size() const { return terms.size(); }
};

struct TfidfModel {
  Vocabulary vocabulary;
  std::vector<double> idf;  // parallel to vocabulary.terms
  long doc_count = 0;
};

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& corpus, int k);

// idf(t) = ln((1 + N) / (1 + df(t))) + 1 over the fitted corpus.
TfidfModel fit_tfidf(const std::vector<std::vector<std::string>>& corpus, int k);

// Raw term count times idf per in-vocabulary term, L2-normalized. Terms
// outside the vocabulary are ignored; a document with none yields an empty map.
std::map<std::string, double> transform(const std::vector<std::string>& doc,
                                        const TfidfModel& model);

}  // namespace infodemic
