#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace infodemic {

// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

struct TweetRecord {
  std::string tweet_id;
  std::string text;
  std::string source_platform;
  std::int64_t retweet_count = 0;
  std::int64_t like_count = 0;
  bool possibly_sensitive = false;
  Timestamp created_at = 0;
};

struct UserRecord {
  std::string user_id;
  std::string name;
  std::string screen_name;
  bool geo_enabled = false;
  std::string bio;
  std::optional<std::string> profile_url;
  std::int64_t followers_count = 0;
  std::int64_t friends_count = 0;
  Timestamp account_created_at = 0;
  std::int64_t favourites_count = 0;
  std::int64_t statuses_count = 0;
  bool verified = false;
  bool default_profile_image = false;
};

struct LabeledSample {
  TweetRecord tweet;
  UserRecord user;
  int label = 0;  // 1 = misinformation
};

// Accepts RFC 3339 ("2020-03-11T10:00:00Z", offsets and fractional seconds
// allowed) and Twitter's legacy format ("Wed Oct 10 20:19:24 +0000 2018").
// Throws std::invalid_argument on anything else.
Timestamp parse_timestamp(const std::string& text);

// RFC 3339 UTC, e.g. "2020-03-11T10:00:00Z".
std::string format_timestamp(Timestamp t);

}  // namespace infodemic
