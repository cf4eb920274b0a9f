#include "infodemic/types.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace infodemic {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// civil-days algorithm).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : static_cast<unsigned>(-9));
  y = yy + (m <= 2);
}

bool is_leap(std::int64_t y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

unsigned days_in_month(std::int64_t y, unsigned m) {
  static constexpr std::array<unsigned, 12> kDays = {31, 28, 31, 30, 31, 30,
                                                     31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

[[noreturn]] void bad_timestamp(const std::string& text) {
  throw std::invalid_argument("unparseable timestamp: '" + text + "'");
}

bool parse_uint(std::string_view s, std::size_t pos, std::size_t len, long& out) {
  if (pos + len > s.size()) return false;
  long value = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

Timestamp assemble(const std::string& text, long year, long month, long day,
                   long hour, long minute, long second, long offset_seconds) {
  if (month < 1 || month > 12 || day < 1 ||
      day > static_cast<long>(days_in_month(year, static_cast<unsigned>(month))) ||
      hour > 23 || minute > 59 || second > 60) {
    bad_timestamp(text);
  }
  const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                            static_cast<unsigned>(day));
  return days * 86400 + hour * 3600 + minute * 60 + second - offset_seconds;
}

// "+05:30", "-0800" or "Z"; returns offset in seconds, or nullopt on error.
std::optional<long> parse_offset(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return std::nullopt;
  const char c = s[pos];
  if (c == 'Z' || c == 'z') {
    return pos + 1 == s.size() ? std::optional<long>(0) : std::nullopt;
  }
  if (c != '+' && c != '-') return std::nullopt;
  long hh = 0, mm = 0;
  if (parse_uint(s, pos + 1, 2, hh)) {
    std::size_t mpos = pos + 3;
    if (mpos < s.size() && s[mpos] == ':') ++mpos;
    if (parse_uint(s, mpos, 2, mm) && mpos + 2 == s.size() && hh <= 23 && mm <= 59) {
      const long total = hh * 3600 + mm * 60;
      return c == '-' ? -total : total;
    }
  }
  return std::nullopt;
}

std::optional<unsigned> month_from_name(std::string_view name) {
  static constexpr std::array<std::string_view, 12> kMonths = {
      "Jan", "Feb", "Mar", "Apr", "May", "Jun",
      "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  for (unsigned i = 0; i < kMonths.size(); ++i) {
    if (name == kMonths[i]) return i + 1;
  }
  return std::nullopt;
}

// "Wed Oct 10 20:19:24 +0000 2018"
std::optional<Timestamp> parse_legacy(const std::string& text) {
  std::vector<std::string_view> parts;
  std::string_view s = text;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) parts.push_back(s.substr(start, i - start));
  }
  if (parts.size() != 6 || parts[0].size() != 3) return std::nullopt;
  const auto month = month_from_name(parts[1]);
  if (!month) return std::nullopt;
  long day = 0, year = 0, hour = 0, minute = 0, second = 0;
  if (!parse_uint(parts[2], 0, parts[2].size(), day)) return std::nullopt;
  const std::string_view hms = parts[3];
  if (hms.size() != 8 || hms[2] != ':' || hms[5] != ':') return std::nullopt;
  if (!parse_uint(hms, 0, 2, hour) || !parse_uint(hms, 3, 2, minute) ||
      !parse_uint(hms, 6, 2, second)) {
    return std::nullopt;
  }
  const auto offset = parse_offset(parts[4], 0);
  if (!offset) return std::nullopt;
  if (!parse_uint(parts[5], 0, parts[5].size(), year) || parts[5].size() != 4) {
    return std::nullopt;
  }
  return assemble(text, year, *month, day, hour, minute, second, *offset);
}

}  // namespace

Timestamp parse_timestamp(const std::string& text) {
  std::string_view s = text;
  // RFC 3339: "YYYY-MM-DDTHH:MM:SS[.frac](Z|+HH:MM|-HH:MM)"
  long year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  if (s.size() >= 20 && parse_uint(s, 0, 4, year) && s[4] == '-' &&
      parse_uint(s, 5, 2, month) && s[7] == '-' && parse_uint(s, 8, 2, day) &&
      (s[10] == 'T' || s[10] == 't' || s[10] == ' ') && parse_uint(s, 11, 2, hour) &&
      s[13] == ':' && parse_uint(s, 14, 2, minute) && s[16] == ':' &&
      parse_uint(s, 17, 2, second)) {
    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      const std::size_t frac_start = pos;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
      if (pos == frac_start) bad_timestamp(text);
    }
    if (const auto offset = parse_offset(s, pos)) {
      return assemble(text, year, month, day, hour, minute, second, *offset);
    }
    bad_timestamp(text);
  }
  if (const auto legacy = parse_legacy(text)) return *legacy;
  bad_timestamp(text);
}

std::string format_timestamp(Timestamp t) {
  std::int64_t days = t / 86400;
  std::int64_t rem = t % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  std::int64_t year = 0;
  unsigned month = 0, day = 0;
  civil_from_days(days, year, month, day);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(year), month, day,
                static_cast<long long>(rem / 3600),
                static_cast<long long>(rem % 3600 / 60),
                static_cast<long long>(rem % 60));
  return buf;
}

}  // namespace infodemic
