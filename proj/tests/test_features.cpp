#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "infodemic/features.hpp"
#include "infodemic/rng.hpp"
#include "support/fixtures.hpp"
#include "support/test_util.hpp"

using namespace infodemic;
using test::make_sample;

namespace {

Lexicon fixture_lexicon() {
  return Lexicon::from_tables(
      {{"good", 3.0}, {"bad", -3.0}, {"cure", 1.0}},
      {"stay", "safe", "cure", "the", "good", "bad", "home"},
      {{"the", PosTag::determiner}},
      {"dr."});
}

DomainLists fixture_lists() {
  DomainLists lists;
  lists.untrusted_domains = {"bad.example", "rumor-mill.example"};
  lists.misinfo_hashtags = {"hoax", "plandemic"};
  return lists;
}

bool is_subsequence(const std::string& needle, const std::string& hay) {
  std::size_t i = 0;
  for (char c : hay) {
    if (i < needle.size() && needle[i] == c) ++i;
  }
  return i == needle.size();
}

int brute_force_lcs(const std::string& a, const std::string& b) {
  int best = 0;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    std::string sub;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (mask & (1u << i)) sub.push_back(a[i]);
    }
    if (is_subsequence(sub, b)) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("derive_tweet_features on empty text") {
  const auto f = derive_tweet_features(TweetRecord{.tweet_id = "t", .text = ""},
                                       fixture_lexicon(), fixture_lists());
  CHECK(f.length_chars == 0);
  CHECK(f.question_marks == 0);
  CHECK(f.exclamation_marks == 0);
  CHECK(f.hashtag_count == 0);
  CHECK(f.sentence_count == 0);
  CHECK(f.avg_word_length == 0.0);
  CHECK(f.polarity == 0.0);
  CHECK(f.uppercase_chars == 0);
  CHECK(f.has_url == 0);
  CHECK(f.misspelled_count == 0);
  CHECK(f.pos_counts.total() == 0);
  CHECK(f.flesch == 0.0);
  CHECK(f.smog == 0.0);
  CHECK(f.ari == 0.0);
  CHECK(f.readability_valid == 0);
  CHECK(f.untrusted_source == 0);
}

TEST_CASE("derive_tweet_features on a loaded fixture") {
  TweetRecord tweet;
  tweet.tweet_id = "t";
  tweet.text = "Cure?? Cure!! #hoax https://bad.example";
  tweet.retweet_count = 9;
  tweet.like_count = 4;
  tweet.possibly_sensitive = true;

  const auto f = derive_tweet_features(tweet, fixture_lexicon(), fixture_lists());
  CHECK(f.question_marks == 2);
  CHECK(f.exclamation_marks == 2);
  CHECK(f.hashtag_count == 1);
  CHECK(f.has_url == 1);
  CHECK(f.untrusted_source == 1);
  CHECK(f.misinfo_hashtag == 1);
  CHECK(f.sentence_count == 2);
  CHECK(f.readability_valid == 1);
  CHECK(f.avg_word_length == doctest::Approx(4.0));
  CHECK(f.polarity == doctest::Approx(1.0 / 5.0));  // "cure" twice, mean 1.0
  CHECK(f.misspelled_count == 0);
  CHECK(f.retweet_count == 9);
  CHECK(f.like_count == 4);
  CHECK(f.possibly_sensitive == 1);
  // "Cure" twice: both 1 syllable, flesch over 2 words / 2 sentences
  CHECK(f.flesch == doctest::Approx(206.835 - 1.015 * 1.0 - 84.6 * 1.0));

  const auto g = derive_tweet_features(
      TweetRecord{.tweet_id = "t2", .text = "Stay safe."}, fixture_lexicon(), fixture_lists());
  CHECK(g.sentence_count == 1);
  CHECK(g.has_url == 0);
  CHECK(g.untrusted_source == 0);
  CHECK(g.misinfo_hashtag == 0);
  CHECK(g.uppercase_chars == 1);
}

TEST_CASE("derive_user_features ratios and clamps") {
  UserRecord user;
  user.user_id = "u";
  user.name = "Pat";
  user.screen_name = "pat";
  user.followers_count = 10;
  user.friends_count = 0;
  user.account_created_at = 1'000'000;

  SUBCASE("zero friends uses max(1, friends)") {
    const auto f = derive_user_features(user, 1'000'000 + 86400 * 10);
    CHECK(f.follower_following_ratio == doctest::Approx(10.0));
    CHECK(f.account_age_days == 10);
  }

  SUBCASE("account created at the reference date clamps to age 1") {
    const auto f = derive_user_features(user, 1'000'000);
    CHECK(f.account_age_days == 1);
    const auto g = derive_user_features(user, 999);  // reference before creation
    CHECK(g.account_age_days == 1);
  }

  SUBCASE("rates per day") {
    user.statuses_count = 365;
    user.favourites_count = 730;
    const auto f = derive_user_features(user, 1'000'000 + 86400 * 365);
    CHECK(f.account_age_days == 365);
    CHECK(f.tweets_per_day == doctest::Approx(1.0));
    CHECK(f.likes_per_day == doctest::Approx(2.0));
  }

  SUBCASE("bio url detection") {
    CHECK(derive_user_features(user, 2'000'000).bio_has_url == 0);
    user.bio = "news fan https://blog.example/me";
    CHECK(derive_user_features(user, 2'000'000).bio_has_url == 1);
    user.bio = "";
    user.profile_url = "https://example.com";
    CHECK(derive_user_features(user, 2'000'000).bio_has_url == 1);
  }

  SUBCASE("name match uses lowercased LCS") {
    user.name = "Drishti";
    user.screen_name = "drish_j";
    CHECK(derive_user_features(user, 2'000'000).name_match_chars == 5);
  }
}

TEST_CASE("lcs_matching_chars") {
  CHECK(lcs_matching_chars("abc", "abc") == 3);
  CHECK(lcs_matching_chars("abc", "xyz") == 0);
  CHECK(lcs_matching_chars("drishti", "drish_j") == 5);
  CHECK(lcs_matching_chars("", "anything") == 0);
  CHECK(lcs_matching_chars("ABC", "abc") == 3);

  Rng rng(11);
  const std::string alphabet = "abc_";
  for (int iter = 0; iter < 200; ++iter) {
    std::string a, b;
    const std::size_t la = rng.uniform_index(9), lb = rng.uniform_index(9);
    for (std::size_t i = 0; i < la; ++i) a.push_back(alphabet[rng.uniform_index(4)]);
    for (std::size_t i = 0; i < lb; ++i) b.push_back(alphabet[rng.uniform_index(4)]);
    const int got = lcs_matching_chars(a, b);
    CHECK(got == brute_force_lcs(a, b));
    CHECK(got == lcs_matching_chars(b, a));
    CHECK(got <= static_cast<int>(std::min(a.size(), b.size())));
  }
}

TEST_CASE("untrusted_source_flag") {
  const DomainLists lists = fixture_lists();
  CHECK(untrusted_source_flag({}, lists) == 0);
  CHECK(untrusted_source_flag({"https://WWW.Bad.Example/a?b=1"}, lists) == 1);
  CHECK(untrusted_source_flag({"https://who.int/news"}, DomainLists{}) == 0);
  CHECK(untrusted_source_flag({"https://who.int/news"}, lists) == 0);
  CHECK(untrusted_source_flag({"http://news.bad.example:8080/x"}, lists) == 1);
  CHECK(untrusted_source_flag({"https://"}, lists) == 0);  // unparsable, ignored
  CHECK(untrusted_source_flag({"https://notbad.example"}, lists) == 0);

  SUBCASE("adding domains never clears the flag") {
    Rng rng(5);
    const std::vector<std::string> hosts = {"https://a.example/x", "https://b.example",
                                            "http://c.example/y", "https://who.int"};
    for (int iter = 0; iter < 50; ++iter) {
      DomainLists small, big;
      for (const char* d : {"a.example", "b.example", "c.example"}) {
        if (rng.uniform_index(2)) small.untrusted_domains.insert(d);
      }
      big.untrusted_domains = small.untrusted_domains;
      big.untrusted_domains.insert("extra.example");
      big.untrusted_domains.insert("who.int");
      std::vector<std::string> urls;
      for (std::size_t i = 0; i < 1 + rng.uniform_index(3); ++i) {
        urls.push_back(hosts[rng.uniform_index(hosts.size())]);
      }
      CHECK(untrusted_source_flag(urls, small) <= untrusted_source_flag(urls, big));
    }
  }
}

TEST_CASE("registrable_domain normalization") {
  CHECK(registrable_domain("https://WWW.Bad.Example/a?b=1") == "bad.example");
  CHECK(registrable_domain("http://user@host.example:443/p") == "host.example");
  CHECK(registrable_domain("https://") == "");
}

TEST_CASE("domain lists load with comments and normalization") {
  test::TempDir tmp;
  test::write_file(tmp.file("domains.txt"),
                   "# comment\n\nBad.Example\nhttps://www.other.example/path\n");
  test::write_file(tmp.file("hashtags.txt"), "# comment\nPlandemic\nhoax\n");
  const auto lists = DomainLists::load(tmp.file("domains.txt"), tmp.file("hashtags.txt"));
  CHECK(lists.untrusted_domains == std::set<std::string>{"bad.example", "other.example"});
  CHECK(lists.misinfo_hashtags == std::set<std::string>{"hoax", "plandemic"});
}

TEST_CASE("feature schema and assembly") {
  const FeatureSchema meta = make_metadata_schema(false);
  CHECK(meta.metadata_count == meta.size());
  CHECK(meta.size() == 38);
  const FeatureSchema with_flag = make_metadata_schema(true);
  CHECK(with_flag.size() == 39);

  Vocabulary vocab;
  vocab.terms = {"covid", "#hoax", "cure"};
  for (std::size_t i = 0; i < vocab.terms.size(); ++i) vocab.index[vocab.terms[i]] = i;

  const FeatureSchema combined = make_combined_schema(false, vocab);
  CHECK(combined.size() == 41);
  CHECK(combined.metadata_count == 38);
  CHECK(combined.columns[38] == "tfidf:covid");

  const FeatureSchema text_only = make_text_schema(vocab);
  CHECK(text_only.metadata_count == 0);
  CHECK(text_only.size() == 3);

  TweetFeatures tf;
  tf.length_chars = 12;
  tf.misinfo_hashtag = 1;
  UserFeatures uf;
  uf.bio_length = 7;

  SUBCASE("metadata-only vector") {
    const auto vec = assemble_feature_vector(tf, uf, nullptr, meta);
    REQUIRE(vec.size() == meta.size());
    CHECK(vec[0] == 12.0);
    // misinfo_hashtag excluded from this schema
    for (std::size_t i = 0; i < meta.size(); ++i) {
      if (meta.columns[i] == "bio_length") CHECK(vec[i] == 7.0);
      CHECK(meta.columns[i] != "misinfo_hashtag");
    }
    const auto vec_flag = assemble_feature_vector(tf, uf, nullptr, with_flag);
    bool found = false;
    for (std::size_t i = 0; i < with_flag.size(); ++i) {
      if (with_flag.columns[i] == "misinfo_hashtag") {
        CHECK(vec_flag[i] == 1.0);
        found = true;
      }
    }
    CHECK(found);
  }

  SUBCASE("tfidf columns in vocabulary order, zero when absent") {
    const std::map<std::string, double> row = {{"cure", 0.8}, {"covid", 0.6}};
    const auto vec = assemble_feature_vector(tf, uf, &row, combined);
    REQUIRE(vec.size() == 41);
    CHECK(vec[38] == 0.6);
    CHECK(vec[39] == 0.0);
    CHECK(vec[40] == 0.8);
  }

  SUBCASE("mismatch errors") {
    CHECK_THROWS(assemble_feature_vector(tf, uf, nullptr, combined));
    const std::map<std::string, double> row = {{"cure", 0.8}};
    CHECK_THROWS(assemble_feature_vector(tf, uf, &row, meta));
  }

  SUBCASE("schema arithmetic matches vocabulary size") {
    Vocabulary big;
    for (int i = 0; i < 2000; ++i) {
      big.terms.push_back("t" + std::to_string(i));
      big.index[big.terms.back()] = i;
    }
    CHECK(make_combined_schema(false, big).size() == 2038u);
    CHECK(make_combined_schema(true, big).size() == 2039u);
  }
}

TEST_CASE("identical samples produce identical vectors") {
  const Lexicon lex = fixture_lexicon();
  const DomainLists lists = fixture_lists();
  const LabeledSample s = make_sample("t1", 1, "The cure is good. #hoax https://bad.example");
  const FeatureSchema schema = make_metadata_schema(false);

  const auto tf1 = derive_tweet_features(s.tweet, lex, lists);
  const auto uf1 = derive_user_features(s.user, 1'600'000'000);
  const auto tf2 = derive_tweet_features(s.tweet, lex, lists);
  const auto uf2 = derive_user_features(s.user, 1'600'000'000);
  CHECK(assemble_feature_vector(tf1, uf1, nullptr, schema) ==
        assemble_feature_vector(tf2, uf2, nullptr, schema));
}
