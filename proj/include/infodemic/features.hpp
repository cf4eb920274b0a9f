#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "infodemic/textstats.hpp"
#include "infodemic/tfidf.hpp"
#include "infodemic/types.hpp"

namespace infodemic {

struct TweetFeatures {
  int length_chars = 0;
  int question_marks = 0;
  int exclamation_marks = 0;
  int hashtag_count = 0;
  int sentence_count = 0;
  double avg_word_length = 0.0;
  double polarity = 0.0;
  int uppercase_chars = 0;
  int has_url = 0;
  int misspelled_count = 0;
  PosCounts pos_counts;
  double flesch = 0.0;
  double smog = 0.0;
  double ari = 0.0;
  int readability_valid = 0;
  int untrusted_source = 0;
  int misinfo_hashtag = 0;
  std::int64_t retweet_count = 0;
  std::int64_t like_count = 0;
  int possibly_sensitive = 0;
};

struct UserFeatures {
  int bio_length = 0;
  int screen_name_length = 0;
  int name_length = 0;
  std::int64_t account_age_days = 1;
  int name_match_chars = 0;
  double follower_following_ratio = 0.0;
  double tweets_per_day = 0.0;
  double likes_per_day = 0.0;
  int verified = 0;
  int geo_enabled = 0;
  int default_profile_image = 0;
  int bio_has_url = 0;
};

// Untrusted registrable domains and misinformation hashtags (stored without
// the '#'), all lowercase.
struct DomainLists {
  std::set<std::string> untrusted_domains;
  std::set<std::string> misinfo_hashtags;

  static DomainLists load(const std::string& domains_path, const std::string& hashtags_path);
};

std::string default_untrusted_domains_path(const std::string& data_dir);
std::string default_misinfo_hashtags_path(const std::string& data_dir);

// Ordered column names; the first `metadata_count` are tweet/user columns,
// the rest are "tfidf:<term>" columns in vocabulary order. Fixed per run.
struct FeatureSchema {
  std::vector<std::string> columns;
  std::size_t metadata_count = 0;

  std::size_t size() const { return columns.size(); }
};

using FeatureVector = std::vector<double>;

TweetFeatures derive_tweet_features(const TweetRecord& tweet, const Lexicon& lexicon,
                                    const DomainLists& lists);

// account_age_days = max(1, floor((reference_date - created_at) / 86400 s));
// per-day rates and the follower ratio use max(1, .) denominators.
UserFeatures derive_user_features(const UserRecord& user, Timestamp reference_date);

// Longest common subsequence of the lowercased strings.
int lcs_matching_chars(const std::string& name, const std::string& screen_name);

// 1 iff any url's registrable domain (lowercased, scheme/path/port and a
// leading "www." stripped) is in the untrusted list, exactly or as a suffix.
// Unparsable urls are ignored.
int untrusted_source_flag(const std::vector<std::string>& urls, const DomainLists& lists);

// Host extraction used by the flag above; empty when unparsable.
std::string registrable_domain(const std::string& url);

FeatureSchema make_metadata_schema(bool include_misinfo_hashtag);
FeatureSchema make_text_schema(const Vocabulary& vocabulary);
FeatureSchema make_combined_schema(bool include_misinfo_hashtag, const Vocabulary& vocabulary);

// Fills a row following `schema`: metadata columns first, then TF-IDF columns
// in vocabulary order (0 for terms absent from `tfidf_row`). Throws when the
// schema expects TF-IDF columns but `tfidf_row` is null, or vice versa.
FeatureVector assemble_feature_vector(const TweetFeatures& tf, const UserFeatures& uf,
                                      const std::map<std::string, double>* tfidf_row,
                                      const FeatureSchema& schema);

}  // namespace infodemic
