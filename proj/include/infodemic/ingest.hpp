#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infodemic/types.hpp"

namespace infodemic {

struct DatasetSplit {
  std::vector<LabeledSample> train;
  std::vector<LabeledSample> test;
  std::uint64_t seed = 0;
  double test_fraction = 0.0;
};

struct LoadOptions {
  // When false, a missing `label` field is tolerated (prediction input);
  // such samples carry label 0 and the flag exists only for that path.
  bool require_label = true;
};

// One JSON object per line; see README for the exact field list. Errors name
// the offending line and field. Duplicate tweet_ids are rejected.
std::vector<LabeledSample> load_dataset(const std::string& path, LoadOptions options = {});

// Inverse of load_dataset: one JSON object per line, fields in schema order,
// timestamps re-emitted as RFC 3339 UTC.
void save_dataset(const std::vector<LabeledSample>& samples, const std::string& path);
std::string sample_to_jsonl(const LabeledSample& sample);

// Downsamples the majority class uniformly without replacement; the minority
// class and the relative order of kept samples are untouched.
std::vector<LabeledSample> balance_dataset(const std::vector<LabeledSample>& samples,
                                           std::uint64_t seed);

// Per-class test counts are round(class_count * test_fraction) and must leave
// at least one sample on each side per class. Order within each part follows
// the input.
DatasetSplit stratified_split(const std::vector<LabeledSample>& samples,
                              double test_fraction, std::uint64_t seed);

}  // namespace infodemic
