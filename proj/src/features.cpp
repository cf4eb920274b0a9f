#include "infodemic/features.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace infodemic {

namespace {

template <typename Emit>
void metadata_columns(const TweetFeatures& tf, const UserFeatures& uf,
                      bool include_misinfo_hashtag, Emit&& emit) {
  emit("length_chars", tf.length_chars);
  emit("question_marks", tf.question_marks);
  emit("exclamation_marks", tf.exclamation_marks);
  emit("hashtag_count", tf.hashtag_count);
  emit("sentence_count", tf.sentence_count);
  emit("avg_word_length", tf.avg_word_length);
  emit("polarity", tf.polarity);
  emit("uppercase_chars", tf.uppercase_chars);
  emit("has_url", tf.has_url);
  emit("misspelled_count", tf.misspelled_count);
  emit("pos_noun", tf.pos_counts[PosTag::noun]);
  emit("pos_verb", tf.pos_counts[PosTag::verb]);
  emit("pos_adjective", tf.pos_counts[PosTag::adjective]);
  emit("pos_adverb", tf.pos_counts[PosTag::adverb]);
  emit("pos_pronoun", tf.pos_counts[PosTag::pronoun]);
  emit("pos_determiner", tf.pos_counts[PosTag::determiner]);
  emit("pos_preposition", tf.pos_counts[PosTag::preposition]);
  emit("pos_other", tf.pos_counts[PosTag::other]);
  emit("flesch", tf.flesch);
  emit("smog", tf.smog);
  emit("ari", tf.ari);
  emit("readability_valid", tf.readability_valid);
  emit("untrusted_source", tf.untrusted_source);
  if (include_misinfo_hashtag) emit("misinfo_hashtag", tf.misinfo_hashtag);
  emit("retweet_count", static_cast<double>(tf.retweet_count));
  emit("like_count", static_cast<double>(tf.like_count));
  emit("possibly_sensitive", tf.possibly_sensitive);
  emit("bio_length", uf.bio_length);
  emit("screen_name_length", uf.screen_name_length);
  emit("name_length", uf.name_length);
  emit("account_age_days", static_cast<double>(uf.account_age_days));
  emit("name_match_chars", uf.name_match_chars);
  emit("follower_following_ratio", uf.follower_following_ratio);
  emit("tweets_per_day", uf.tweets_per_day);
  emit("likes_per_day", uf.likes_per_day);
  emit("verified", uf.verified);
  emit("geo_enabled", uf.geo_enabled);
  emit("default_profile_image", uf.default_profile_image);
  emit("bio_has_url", uf.bio_has_url);
}

std::string normalize_domain_entry(std::string entry) {
  entry = to_lower(entry);
  if (const auto scheme = entry.find("://"); scheme != std::string::npos) {
    entry.erase(0, scheme + 3);
  }
  if (const auto slash = entry.find_first_of("/?#"); slash != std::string::npos) {
    entry.erase(slash);
  }
  if (entry.rfind("www.", 0) == 0) entry.erase(0, 4);
  return entry;
}

std::vector<std::string> read_list_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace

std::string default_untrusted_domains_path(const std::string& data_dir) {
  return data_dir + "/untrusted_domains.txt";
}

std::string default_misinfo_hashtags_path(const std::string& data_dir) {
  return data_dir + "/misinfo_hashtags.txt";
}

DomainLists DomainLists::load(const std::string& domains_path,
                              const std::string& hashtags_path) {
  DomainLists lists;
  for (const std::string& entry : read_list_lines(domains_path)) {
    const std::string domain = normalize_domain_entry(entry);
    if (!domain.empty()) lists.untrusted_domains.insert(domain);
  }
  for (const std::string& entry : read_list_lines(hashtags_path)) {
    lists.misinfo_hashtags.insert(to_lower(entry));
  }
  return lists;
}

std::string registrable_domain(const std::string& url) {
  std::string host = url;
  if (const auto scheme = host.find("://"); scheme != std::string::npos) {
    host.erase(0, scheme + 3);
  }
  if (const auto end = host.find_first_of("/?#"); end != std::string::npos) {
    host.erase(end);
  }
  if (const auto at = host.rfind('@'); at != std::string::npos) {
    host.erase(0, at + 1);
  }
  if (const auto colon = host.find(':'); colon != std::string::npos) {
    host.erase(colon);
  }
  host = to_lower(host);
  if (host.rfind("www.", 0) == 0) host.erase(0, 4);
  return host;
}

int untrusted_source_flag(const std::vector<std::string>& urls, const DomainLists& lists) {
  for (const std::string& url : urls) {
    const std::string host = registrable_domain(url);
    if (host.empty()) continue;
    if (lists.untrusted_domains.count(host)) return 1;
    // Subdomains match a listed parent domain.
    for (std::size_t pos = host.find('.'); pos != std::string::npos;
         pos = host.find('.', pos + 1)) {
      if (lists.untrusted_domains.count(host.substr(pos + 1))) return 1;
    }
  }
  return 0;
}

int lcs_matching_chars(const std::string& name, const std::string& screen_name) {
  const std::string a = to_lower(name);
  const std::string b = to_lower(screen_name);
  if (a.empty() || b.empty()) return 0;
  std::vector<int> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = (a[i - 1] == b[j - 1]) ? prev[j - 1] + 1
                                       : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

TweetFeatures derive_tweet_features(const TweetRecord& tweet, const Lexicon& lexicon,
                                    const DomainLists& lists) {
  TweetFeatures f;
  const std::string& text = tweet.text;
  const std::vector<Token> tokens = tokenize(text);

  f.length_chars = static_cast<int>(codepoint_count(text));
  for (char c : text) {
    if (c == '?') ++f.question_marks;
    if (c == '!') ++f.exclamation_marks;
  }
  f.uppercase_chars = uppercase_count(text);

  long word_count = 0;
  long word_chars = 0;
  long syllables = 0;
  long polysyllables = 0;
  std::vector<std::string> urls;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case TokenKind::word: {
        ++word_count;
        word_chars += codepoint_count(t.text);
        const int syl = count_syllables(t.text);
        syllables += syl;
        if (syl >= 3) ++polysyllables;
        break;
      }
      case TokenKind::hashtag: {
        ++f.hashtag_count;
        if (lists.misinfo_hashtags.count(to_lower(t.text.substr(1)))) {
          f.misinfo_hashtag = 1;
        }
        break;
      }
      case TokenKind::url:
        f.has_url = 1;
        urls.push_back(t.text);
        break;
      default:
        break;
    }
  }

  f.avg_word_length =
      word_count > 0 ? static_cast<double>(word_chars) / static_cast<double>(word_count)
                     : 0.0;
  f.polarity = polarity_score(tokens, lexicon);
  f.misspelled_count = misspelled_count(tokens, lexicon);
  f.pos_counts = pos_tag_counts(tokens, lexicon);
  f.untrusted_source = untrusted_source_flag(urls, lists);

  const long sentence_count = static_cast<long>(split_sentences(text, lexicon).size());
  f.sentence_count = static_cast<int>(sentence_count);
  if (word_count >= 1 && sentence_count >= 1) {
    f.flesch = flesch_reading_ease(word_count, sentence_count, syllables);
    f.smog = smog_grade(polysyllables, sentence_count);
    f.ari = automated_readability_index(alnum_char_count(text), word_count, sentence_count);
    f.readability_valid = 1;
  }

  f.retweet_count = tweet.retweet_count;
  f.like_count = tweet.like_count;
  f.possibly_sensitive = tweet.possibly_sensitive ? 1 : 0;
  return f;
}

UserFeatures derive_user_features(const UserRecord& user, Timestamp reference_date) {
  UserFeatures f;
  f.bio_length = static_cast<int>(codepoint_count(user.bio));
  f.screen_name_length = static_cast<int>(codepoint_count(user.screen_name));
  f.name_length = static_cast<int>(codepoint_count(user.name));

  const std::int64_t elapsed =
      reference_date > user.account_created_at ? reference_date - user.account_created_at : 0;
  f.account_age_days = std::max<std::int64_t>(1, elapsed / 86400);

  f.name_match_chars = lcs_matching_chars(user.name, user.screen_name);
  f.follower_following_ratio =
      static_cast<double>(user.followers_count) /
      static_cast<double>(std::max<std::int64_t>(1, user.friends_count));
  f.tweets_per_day = static_cast<double>(user.statuses_count) /
                     static_cast<double>(f.account_age_days);
  f.likes_per_day = static_cast<double>(user.favourites_count) /
                    static_cast<double>(f.account_age_days);

  f.verified = user.verified ? 1 : 0;
  f.geo_enabled = user.geo_enabled ? 1 : 0;
  f.default_profile_image = user.default_profile_image ? 1 : 0;

  bool bio_url = user.profile_url.has_value();
  if (!bio_url) {
    for (const Token& t : tokenize(user.bio)) {
      if (t.kind == TokenKind::url) {
        bio_url = true;
        break;
      }
    }
  }
  f.bio_has_url = bio_url ? 1 : 0;
  return f;
}

FeatureSchema make_metadata_schema(bool include_misinfo_hashtag) {
  FeatureSchema schema;
  metadata_columns(TweetFeatures{}, UserFeatures{}, include_misinfo_hashtag,
                   [&](const char* name, double) { schema.columns.emplace_back(name); });
  schema.metadata_count = schema.columns.size();
  return schema;
}

FeatureSchema make_text_schema(const Vocabulary& vocabulary) {
  FeatureSchema schema;
  schema.metadata_count = 0;
  schema.columns.reserve(vocabulary.size());
  for (const std::string& term : vocabulary.terms) {
    schema.columns.push_back("tfidf:" + term);
  }
  return schema;
}

FeatureSchema make_combined_schema(bool include_misinfo_hashtag,
                                   const Vocabulary& vocabulary) {
  FeatureSchema schema = make_metadata_schema(include_misinfo_hashtag);
  schema.columns.reserve(schema.columns.size() + vocabulary.size());
  for (const std::string& term : vocabulary.terms) {
    schema.columns.push_back("tfidf:" + term);
  }
  return schema;
}

FeatureVector assemble_feature_vector(const TweetFeatures& tf, const UserFeatures& uf,
                                      const std::map<std::string, double>* tfidf_row,
                                      const FeatureSchema& schema) {
  const std::size_t tfidf_count = schema.size() - schema.metadata_count;
  if (tfidf_count > 0 && tfidf_row == nullptr) {
    throw std::runtime_error("assemble_feature_vector: schema has " +
                             std::to_string(tfidf_count) +
                             " tfidf columns but no tfidf row was given");
  }
  if (tfidf_count == 0 && tfidf_row != nullptr) {
    throw std::runtime_error(
        "assemble_feature_vector: tfidf row given but schema has no tfidf columns");
  }

  FeatureVector vec;
  vec.reserve(schema.size());
  if (schema.metadata_count > 0) {
    const bool include_misinfo =
        std::find(schema.columns.begin(), schema.columns.begin() + schema.metadata_count,
                  "misinfo_hashtag") !=
        schema.columns.begin() + schema.metadata_count;
    metadata_columns(tf, uf, include_misinfo,
                     [&](const char*, double value) { vec.push_back(value); });
    if (vec.size() != schema.metadata_count) {
      throw std::runtime_error("assemble_feature_vector: schema expects " +
                               std::to_string(schema.metadata_count) +
                               " metadata columns, produced " + std::to_string(vec.size()));
    }
  }
  for (std::size_t i = schema.metadata_count; i < schema.size(); ++i) {
    const std::string term = schema.columns[i].substr(6);  // after "tfidf:"
    const auto it = tfidf_row->find(term);
    vec.push_back(it == tfidf_row->end() ? 0.0 : it->second);
  }
  return vec;
}

}  // namespace infodemic
