#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "infodemic/ingest.hpp"
#include "infodemic/rng.hpp"
#include "support/fixtures.hpp"
#include "support/test_util.hpp"

using namespace infodemic;
using test::jsonl_line;
using test::make_sample;

TEST_CASE("parse_timestamp accepts both formats") {
  CHECK(parse_timestamp("1970-01-01T00:00:00Z") == 0);
  CHECK(parse_timestamp("2020-03-11T10:00:00Z") == 1583920800);
  CHECK(parse_timestamp("2020-03-11t10:00:00z") == 1583920800);
  CHECK(parse_timestamp("2020-03-11T10:00:00.123Z") == 1583920800);
  CHECK(parse_timestamp("2020-01-01T05:30:00+05:30") == 1577836800);
  CHECK(parse_timestamp("2020-01-01T05:30:00+0530") == 1577836800);
  CHECK(parse_timestamp("1969-12-31T23:59:59Z") == -1);
  CHECK(parse_timestamp("Wed Oct 10 20:19:24 +0000 2018") == 1539202764);

  CHECK_THROWS(parse_timestamp(""));
  CHECK_THROWS(parse_timestamp("2020-13-01T00:00:00Z"));
  CHECK_THROWS(parse_timestamp("2020-02-30T00:00:00Z"));
  CHECK_THROWS(parse_timestamp("not a date"));
  CHECK_THROWS(parse_timestamp("2020-03-11T10:00:00"));  // offset required

  CHECK(format_timestamp(1583920800) == "2020-03-11T10:00:00Z");
  CHECK(format_timestamp(0) == "1970-01-01T00:00:00Z");
  CHECK(format_timestamp(-1) == "1969-12-31T23:59:59Z");
}

TEST_CASE("load_dataset basics") {
  test::TempDir tmp;

  SUBCASE("empty file") {
    test::write_file(tmp.file("d.jsonl"), "");
    CHECK(load_dataset(tmp.file("d.jsonl")).empty());
  }

  SUBCASE("two valid lines in order") {
    test::write_file(tmp.file("d.jsonl"), jsonl_line("t1") + "\n" + jsonl_line("t2", ",\"label\":1") + "\n");
    const auto samples = load_dataset(tmp.file("d.jsonl"));
    REQUIRE(samples.size() == 2);
    CHECK(samples[0].tweet.tweet_id == "t1");
    CHECK(samples[0].label == 0);
    CHECK(samples[1].tweet.tweet_id == "t2");
    CHECK(samples[1].label == 1);
    CHECK(samples[0].tweet.created_at == 1583920800);
    CHECK(samples[0].user.account_created_at == 1539202764);
    CHECK_FALSE(samples[0].user.profile_url.has_value());
  }

  SUBCASE("missing label names the line and field") {
    test::write_file(tmp.file("d.jsonl"),
                     jsonl_line("t1") + "\n" + jsonl_line("t2") + "\n" + jsonl_line("t3", "") + "\n");
    CHECK_THROWS_WITH_AS(load_dataset(tmp.file("d.jsonl")),
                         doctest::Contains("line 3: missing field label"),
                         std::runtime_error);
  }

  SUBCASE("optional label for prediction input") {
    test::write_file(tmp.file("d.jsonl"), jsonl_line("t1", "") + "\n");
    CHECK_THROWS(load_dataset(tmp.file("d.jsonl")));
    const auto samples = load_dataset(tmp.file("d.jsonl"), {.require_label = false});
    REQUIRE(samples.size() == 1);
  }

  SUBCASE("duplicate tweet_id rejected") {
    test::write_file(tmp.file("d.jsonl"), jsonl_line("t1") + "\n" + jsonl_line("t1") + "\n");
    CHECK_THROWS_WITH_AS(load_dataset(tmp.file("d.jsonl")),
                         doctest::Contains("line 2: duplicate tweet_id 't1'"),
                         std::runtime_error);
  }

  SUBCASE("malformed JSON names the line") {
    test::write_file(tmp.file("d.jsonl"), jsonl_line("t1") + "\n{not json\n");
    CHECK_THROWS_WITH_AS(load_dataset(tmp.file("d.jsonl")),
                         doctest::Contains("line 2: malformed JSON"), std::runtime_error);
  }

  SUBCASE("type errors name the field") {
    std::string bad = jsonl_line("t1");
    const auto pos = bad.find("\"retweet_count\":1");
    bad.replace(pos, 17, "\"retweet_count\":-1");
    test::write_file(tmp.file("d.jsonl"), bad + "\n");
    CHECK_THROWS_WITH_AS(load_dataset(tmp.file("d.jsonl")),
                         doctest::Contains("field retweet_count"), std::runtime_error);
  }

  SUBCASE("label must be 0 or 1") {
    test::write_file(tmp.file("d.jsonl"), jsonl_line("t1", ",\"label\":2") + "\n");
    CHECK_THROWS_WITH_AS(load_dataset(tmp.file("d.jsonl")),
                         doctest::Contains("field label"), std::runtime_error);
  }

  SUBCASE("missing file names the path") {
    CHECK_THROWS_WITH_AS(load_dataset(tmp.file("nope.jsonl")),
                         doctest::Contains("nope.jsonl"), std::runtime_error);
  }
}

TEST_CASE("save then load round-trips the sample list") {
  test::TempDir tmp;
  std::vector<LabeledSample> samples;
  for (int i = 0; i < 20; ++i) {
    LabeledSample s = make_sample("t" + std::to_string(i), i % 2);
    if (i % 3 == 0) s.user.profile_url = "https://example.com/" + std::to_string(i);
    if (i % 4 == 0) s.tweet.text = "Weird text \"quotes\" and \xc3\xa9moji 😷 #tag";
    s.tweet.retweet_count = i * 11;
    s.tweet.created_at = 1583920800 + i * 9973;
    samples.push_back(s);
  }
  save_dataset(samples, tmp.file("out.jsonl"));
  const auto loaded = load_dataset(tmp.file("out.jsonl"));
  REQUIRE(loaded.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(loaded[i].tweet.tweet_id == samples[i].tweet.tweet_id);
    CHECK(loaded[i].tweet.text == samples[i].tweet.text);
    CHECK(loaded[i].tweet.created_at == samples[i].tweet.created_at);
    CHECK(loaded[i].tweet.retweet_count == samples[i].tweet.retweet_count);
    CHECK(loaded[i].user.profile_url == samples[i].user.profile_url);
    CHECK(loaded[i].user.account_created_at == samples[i].user.account_created_at);
    CHECK(loaded[i].label == samples[i].label);
  }
}

TEST_CASE("balance_dataset") {
  std::vector<LabeledSample> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(make_sample("f" + std::to_string(i), 1));
  for (int i = 0; i < 300; ++i) samples.push_back(make_sample("r" + std::to_string(i), 0));

  const auto balanced = balance_dataset(samples, 7);
  long fake = 0, real = 0;
  for (const auto& s : balanced) (s.label == 1 ? fake : real)++;
  CHECK(fake == 100);
  CHECK(real == 100);

  // deterministic for a fixed seed
  const auto again = balance_dataset(samples, 7);
  REQUIRE(again.size() == balanced.size());
  for (std::size_t i = 0; i < balanced.size(); ++i) {
    CHECK(again[i].tweet.tweet_id == balanced[i].tweet.tweet_id);
  }

  // a different seed picks a different subset (overwhelmingly likely)
  const auto other = balance_dataset(samples, 8);
  bool same = true;
  for (std::size_t i = 0; i < balanced.size() && same; ++i) {
    same = other[i].tweet.tweet_id == balanced[i].tweet.tweet_id;
  }
  CHECK_FALSE(same);

  // minority class untouched, order preserved
  std::vector<std::string> fake_ids;
  for (const auto& s : balanced) {
    if (s.label == 1) fake_ids.push_back(s.tweet.tweet_id);
  }
  REQUIRE(fake_ids.size() == 100);
  for (int i = 0; i < 100; ++i) CHECK(fake_ids[i] == "f" + std::to_string(i));
}

TEST_CASE("balance_dataset edge cases") {
  SUBCASE("already balanced input is returned unchanged") {
    std::vector<LabeledSample> samples;
    for (int i = 0; i < 6; ++i) samples.push_back(make_sample("a" + std::to_string(i), i % 2));
    samples.push_back(make_sample("extra", 1));
    samples.push_back(make_sample("extra2", 0));
    const auto out = balance_dataset(samples, 1);
    REQUIRE(out.size() == samples.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(out[i].tweet.tweet_id == samples[i].tweet.tweet_id);
    }
  }

  SUBCASE("missing class is an error") {
    std::vector<LabeledSample> samples;
    for (int i = 0; i < 10; ++i) samples.push_back(make_sample("r" + std::to_string(i), 0));
    CHECK_THROWS_WITH_AS(balance_dataset(samples, 3), doctest::Contains("class 1"),
                         std::runtime_error);
    CHECK_THROWS(balance_dataset({}, 3));
  }
}

TEST_CASE("balance_dataset equalizes any two-class input") {
  Rng rng(42);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<LabeledSample> samples;
    const std::size_t n0 = 1 + rng.uniform_index(40);
    const std::size_t n1 = 1 + rng.uniform_index(40);
    for (std::size_t i = 0; i < n0; ++i)
      samples.push_back(make_sample("x" + std::to_string(i), 0));
    for (std::size_t i = 0; i < n1; ++i)
      samples.push_back(make_sample("y" + std::to_string(i), 1));
    rng.shuffle(samples);
    const auto out = balance_dataset(samples, iter);
    long c0 = 0, c1 = 0;
    for (const auto& s : out) (s.label == 0 ? c0 : c1)++;
    CHECK(c0 == c1);
    CHECK(c0 == static_cast<long>(std::min(n0, n1)));
  }
}

TEST_CASE("stratified_split") {
  std::vector<LabeledSample> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(make_sample("f" + std::to_string(i), 1));
  for (int i = 0; i < 100; ++i) samples.push_back(make_sample("r" + std::to_string(i), 0));

  const DatasetSplit split = stratified_split(samples, 0.2, 1);
  long train1 = 0, train0 = 0, test1 = 0, test0 = 0;
  for (const auto& s : split.train) (s.label == 1 ? train1 : train0)++;
  for (const auto& s : split.test) (s.label == 1 ? test1 : test0)++;
  CHECK(train1 == 80);
  CHECK(train0 == 80);
  CHECK(test1 == 20);
  CHECK(test0 == 20);

  // identical on repeat
  const DatasetSplit split2 = stratified_split(samples, 0.2, 1);
  REQUIRE(split2.test.size() == split.test.size());
  for (std::size_t i = 0; i < split.test.size(); ++i) {
    CHECK(split2.test[i].tweet.tweet_id == split.test[i].tweet.tweet_id);
  }

  // union is the input multiset, intersection empty by tweet_id
  std::set<std::string> train_ids, test_ids;
  for (const auto& s : split.train) train_ids.insert(s.tweet.tweet_id);
  for (const auto& s : split.test) test_ids.insert(s.tweet.tweet_id);
  CHECK(train_ids.size() == split.train.size());
  CHECK(test_ids.size() == split.test.size());
  std::vector<std::string> overlap;
  std::set_intersection(train_ids.begin(), train_ids.end(), test_ids.begin(),
                        test_ids.end(), std::back_inserter(overlap));
  CHECK(overlap.empty());
  CHECK(split.train.size() + split.test.size() == samples.size());
}

TEST_CASE("stratified_split rejects degenerate classes and fractions") {
  std::vector<LabeledSample> samples;
  samples.push_back(make_sample("f0", 1));
  for (int i = 0; i < 100; ++i) samples.push_back(make_sample("r" + std::to_string(i), 0));
  CHECK_THROWS(stratified_split(samples, 0.2, 1));

  std::vector<LabeledSample> ok;
  for (int i = 0; i < 10; ++i) ok.push_back(make_sample("s" + std::to_string(i), i % 2));
  CHECK_THROWS_AS(stratified_split(ok, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(stratified_split(ok, 1.0, 1), std::invalid_argument);
  CHECK_NOTHROW(stratified_split(ok, 0.2, 1));
}
