#include "infodemic/ingest.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "infodemic/rng.hpp"
#include "json.hpp"

namespace infodemic {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void line_error(const std::string& path, std::size_t line_no,
                             const std::string& message) {
  throw std::runtime_error(path + ": line " + std::to_string(line_no) + ": " + message);
}

const json& require_field(const json& obj, const char* name, const std::string& path,
                          std::size_t line_no) {
  const auto it = obj.find(name);
  if (it == obj.end()) {
    line_error(path, line_no, std::string("missing field ") + name);
  }
  return *it;
}

std::string get_string(const json& obj, const char* name, const std::string& path,
                       std::size_t line_no) {
  const json& v = require_field(obj, name, path, line_no);
  if (!v.is_string()) {
    line_error(path, line_no, std::string("field ") + name + ": expected string");
  }
  return v.get<std::string>();
}

std::int64_t get_count(const json& obj, const char* name, const std::string& path,
                       std::size_t line_no) {
  const json& v = require_field(obj, name, path, line_no);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    line_error(path, line_no,
               std::string("field ") + name + ": expected non-negative integer");
  }
  return v.get<std::int64_t>();
}

bool get_bool(const json& obj, const char* name, const std::string& path,
              std::size_t line_no) {
  const json& v = require_field(obj, name, path, line_no);
  if (!v.is_boolean()) {
    line_error(path, line_no, std::string("field ") + name + ": expected boolean");
  }
  return v.get<bool>();
}

Timestamp get_timestamp(const json& obj, const char* name, const std::string& path,
                        std::size_t line_no) {
  const std::string raw = get_string(obj, name, path, line_no);
  try {
    return parse_timestamp(raw);
  } catch (const std::exception& e) {
    line_error(path, line_no, std::string("field ") + name + ": " + e.what());
  }
}

LabeledSample parse_sample(const json& obj, const std::string& path, std::size_t line_no,
                           const LoadOptions& options) {
  LabeledSample s;
  s.tweet.tweet_id = get_string(obj, "tweet_id", path, line_no);
  if (s.tweet.tweet_id.empty()) {
    line_error(path, line_no, "field tweet_id: must be non-empty");
  }
  s.tweet.text = get_string(obj, "text", path, line_no);
  s.tweet.source_platform = get_string(obj, "source_platform", path, line_no);
  s.tweet.retweet_count = get_count(obj, "retweet_count", path, line_no);
  s.tweet.like_count = get_count(obj, "like_count", path, line_no);
  s.tweet.possibly_sensitive = get_bool(obj, "possibly_sensitive", path, line_no);
  s.tweet.created_at = get_timestamp(obj, "created_at", path, line_no);

  s.user.user_id = get_string(obj, "user_id", path, line_no);
  if (s.user.user_id.empty()) {
    line_error(path, line_no, "field user_id: must be non-empty");
  }
  s.user.name = get_string(obj, "name", path, line_no);
  s.user.screen_name = get_string(obj, "screen_name", path, line_no);
  s.user.geo_enabled = get_bool(obj, "geo_enabled", path, line_no);
  s.user.bio = get_string(obj, "bio", path, line_no);
  if (const auto it = obj.find("profile_url"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) {
      line_error(path, line_no, "field profile_url: expected string or null");
    }
    const std::string url = it->get<std::string>();
    if (!url.empty()) s.user.profile_url = url;
  }
  s.user.followers_count = get_count(obj, "followers_count", path, line_no);
  s.user.friends_count = get_count(obj, "friends_count", path, line_no);
  s.user.account_created_at = get_timestamp(obj, "account_created_at", path, line_no);
  s.user.favourites_count = get_count(obj, "favourites_count", path, line_no);
  s.user.statuses_count = get_count(obj, "statuses_count", path, line_no);
  s.user.verified = get_bool(obj, "verified", path, line_no);
  s.user.default_profile_image = get_bool(obj, "default_profile_image", path, line_no);

  if (options.require_label || obj.contains("label")) {
    const json& v = require_field(obj, "label", path, line_no);
    if (!v.is_number_integer() ||
        (v.get<std::int64_t>() != 0 && v.get<std::int64_t>() != 1)) {
      line_error(path, line_no, "field label: expected 0 or 1");
    }
    s.label = static_cast<int>(v.get<std::int64_t>());
  }
  return s;
}

}  // namespace

std::vector<LabeledSample> load_dataset(const std::string& path, LoadOptions options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);

  std::vector<LabeledSample> samples;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      line_error(path, line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) {
      line_error(path, line_no, "expected a JSON object");
    }
    LabeledSample s = parse_sample(obj, path, line_no, options);
    if (!seen_ids.insert(s.tweet.tweet_id).second) {
      line_error(path, line_no, "duplicate tweet_id '" + s.tweet.tweet_id + "'");
    }
    samples.push_back(std::move(s));
  }
  return samples;
}

std::string sample_to_jsonl(const LabeledSample& s) {
  ordered_json obj;
  obj["tweet_id"] = s.tweet.tweet_id;
  obj["text"] = s.tweet.text;
  obj["source_platform"] = s.tweet.source_platform;
  obj["retweet_count"] = s.tweet.retweet_count;
  obj["like_count"] = s.tweet.like_count;
  obj["possibly_sensitive"] = s.tweet.possibly_sensitive;
  obj["created_at"] = format_timestamp(s.tweet.created_at);
  obj["user_id"] = s.user.user_id;
  obj["name"] = s.user.name;
  obj["screen_name"] = s.user.screen_name;
  obj["geo_enabled"] = s.user.geo_enabled;
  obj["bio"] = s.user.bio;
  if (s.user.profile_url) {
    obj["profile_url"] = *s.user.profile_url;
  } else {
    obj["profile_url"] = nullptr;
  }
  obj["followers_count"] = s.user.followers_count;
  obj["friends_count"] = s.user.friends_count;
  obj["account_created_at"] = format_timestamp(s.user.account_created_at);
  obj["favourites_count"] = s.user.favourites_count;
  obj["statuses_count"] = s.user.statuses_count;
  obj["verified"] = s.user.verified;
  obj["default_profile_image"] = s.user.default_profile_image;
  obj["label"] = s.label;
  return obj.dump();
}

void save_dataset(const std::vector<LabeledSample>& samples, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path);
  for (const LabeledSample& s : samples) {
    out << sample_to_jsonl(s) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<LabeledSample> balance_dataset(const std::vector<LabeledSample>& samples,
                                           std::uint64_t seed) {
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const int label = samples[i].label;
    if (label != 0 && label != 1) {
      throw std::runtime_error("balance_dataset: label must be 0 or 1");
    }
    by_class[label].push_back(i);
  }
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].empty()) {
      throw std::runtime_error("balance_dataset: class " + std::to_string(c) +
                               " has no samples");
    }
  }
  if (by_class[0].size() == by_class[1].size()) return samples;

  const int majority = by_class[0].size() > by_class[1].size() ? 0 : 1;
  const std::size_t keep_count = by_class[1 - majority].size();

  Rng rng(seed);
  const auto chosen =
      rng.sample_without_replacement(by_class[majority].size(), keep_count);
  std::vector<bool> keep(samples.size(), false);
  for (std::size_t i : by_class[1 - majority]) keep[i] = true;
  for (std::size_t pos : chosen) keep[by_class[majority][pos]] = true;

  std::vector<LabeledSample> out;
  out.reserve(keep_count * 2);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (keep[i]) out.push_back(samples[i]);
  }
  return out;
}

DatasetSplit stratified_split(const std::vector<LabeledSample>& samples,
                              double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw std::invalid_argument("stratified_split: test_fraction must be in (0, 1)");
  }
  std::vector<std::size_t> by_class[2];
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const int label = samples[i].label;
    if (label != 0 && label != 1) {
      throw std::runtime_error("stratified_split: label must be 0 or 1");
    }
    by_class[label].push_back(i);
  }

  std::vector<bool> in_test(samples.size(), false);
  for (int c = 0; c < 2; ++c) {
    const std::size_t count = by_class[c].size();
    const long long test_count =
        std::llround(static_cast<double>(count) * test_fraction);
    if (count == 0 || test_count < 1 ||
        test_count >= static_cast<long long>(count)) {
      throw std::runtime_error("stratified_split: class " + std::to_string(c) +
                               " would leave an empty train or test partition");
    }
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(c)));
    for (std::size_t pos : rng.sample_without_replacement(
             count, static_cast<std::size_t>(test_count))) {
      in_test[by_class[c][pos]] = true;
    }
  }

  DatasetSplit split;
  split.seed = seed;
  split.test_fraction = test_fraction;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    (in_test[i] ? split.test : split.train).push_back(samples[i]);
  }
  return split;
}

}  // namespace infodemic
