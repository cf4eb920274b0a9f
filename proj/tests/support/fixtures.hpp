#pragma once

#include <string>
#include <vector>

#include "infodemic/types.hpp"

namespace infodemic::test {

// A well-formed sample with distinguishable defaults; tests tweak fields.
inline LabeledSample make_sample(const std::string& id, int label,
                                 const std::string& text = "Stay home. Wash hands!") {
  LabeledSample s;
  s.tweet.tweet_id = id;
  s.tweet.text = text;
  s.tweet.source_platform = "Twitter for iPhone";
  s.tweet.retweet_count = 3;
  s.tweet.like_count = 7;
  s.tweet.possibly_sensitive = false;
  s.tweet.created_at = 1583920800;  // 2020-03-11T10:00:00Z
  s.user.user_id = "u_" + id;
  s.user.name = "Pat Example";
  s.user.screen_name = "pat_example";
  s.user.geo_enabled = false;
  s.user.bio = "just here for the news";
  s.user.followers_count = 120;
  s.user.friends_count = 80;
  s.user.account_created_at = 1539202764;  // Wed Oct 10 20:19:24 +0000 2018
  s.user.favourites_count = 450;
  s.user.statuses_count = 900;
  s.user.verified = false;
  s.user.default_profile_image = false;
  s.label = label;
  return s;
}

// A raw JSONL line with every required field; `extra` is spliced in before
// the closing brace (pass e.g. ",\"label\":1").
inline std::string jsonl_line(const std::string& id, const std::string& label_field = ",\"label\":0") {
  return std::string("{\"tweet_id\":\"") + id +
         "\",\"text\":\"Stay safe.\",\"source_platform\":\"Twitter Web App\","
         "\"retweet_count\":1,\"like_count\":2,\"possibly_sensitive\":false,"
         "\"created_at\":\"2020-03-11T10:00:00Z\",\"user_id\":\"u1\","
         "\"name\":\"A\",\"screen_name\":\"a\",\"geo_enabled\":false,"
         "\"bio\":\"\",\"profile_url\":null,\"followers_count\":10,"
         "\"friends_count\":5,\"account_created_at\":\"Wed Oct 10 20:19:24 +0000 2018\","
         "\"favourites_count\":0,\"statuses_count\":4,\"verified\":false,"
         "\"default_profile_image\":false" + label_field + "}";
}

}  // namespace infodemic::test
