#include "infodemic/textstats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace infodemic {

namespace {

// Minimal UTF-8 handling: tweets are overwhelmingly ASCII with the odd
// Latin-1 letter or emoji. Code points we cannot classify (CJK, emoji,
// symbols) are treated as non-letters. A malformed byte decodes as itself.
struct Codepoint {
  char32_t value;
  std::size_t offset;  // byte offset in the source string
  std::size_t length;  // bytes consumed
};

std::vector<Codepoint> decode_utf8(const std::string& s) {
  std::vector<Codepoint> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = b0;
    std::size_t len = 1;
    if (b0 < 0x80) {
      // ASCII
    } else if ((b0 >> 5) == 0x6 && i + 1 < s.size()) {
      cp = (b0 & 0x1f) << 6 | (s[i + 1] & 0x3f);
      len = 2;
    } else if ((b0 >> 4) == 0xe && i + 2 < s.size()) {
      cp = (b0 & 0x0f) << 12 | (s[i + 1] & 0x3f) << 6 | (s[i + 2] & 0x3f);
      len = 3;
    } else if ((b0 >> 3) == 0x1e && i + 3 < s.size()) {
      cp = (b0 & 0x07) << 18 | (s[i + 1] & 0x3f) << 12 | (s[i + 2] & 0x3f) << 6 |
           (s[i + 3] & 0x3f);
      len = 4;
    }
    out.push_back({cp, i, len});
    i += len;
  }
  return out;
}

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_letter(char32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xc0 && cp <= 0xff && cp != 0xd7 && cp != 0xf7) return true;  // Latin-1
  if (cp >= 0x100 && cp <= 0x24f) return true;  // Latin Extended-A/B
  return false;
}

bool is_upper_letter(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  if (cp >= 0xc0 && cp <= 0xde && cp != 0xd7) return true;
  return false;
}

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xa0;
}

bool is_tag_char(char32_t cp) {
  // Characters allowed after '#'/'@' in hashtags and mentions.
  return is_letter(cp) || is_ascii_digit(cp) || cp == '_';
}

bool is_ascii_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

// Case-insensitive "http://" / "https://" at codepoint index i.
bool url_starts_at(const std::string& s, const std::vector<Codepoint>& cps, std::size_t i) {
  static const std::string kHttp = "http://";
  static const std::string kHttps = "https://";
  const std::size_t off = cps[i].offset;
  auto matches = [&](const std::string& prefix) {
    if (off + prefix.size() > s.size()) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      char c = s[off + k];
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      if (c != prefix[k]) return false;
    }
    return true;
  };
  return matches(kHttp) || matches(kHttps);
}

std::vector<std::string> read_data_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return true;
}

PosTag parse_pos_tag(const std::string& name, const std::string& context) {
  if (name == "noun") return PosTag::noun;
  if (name == "verb") return PosTag::verb;
  if (name == "adjective") return PosTag::adjective;
  if (name == "adverb") return PosTag::adverb;
  if (name == "pronoun") return PosTag::pronoun;
  if (name == "determiner") return PosTag::determiner;
  if (name == "preposition") return PosTag::preposition;
  if (name == "other") return PosTag::other;
  throw std::runtime_error(context + ": unknown POS tag '" + name + "'");
}

}  // namespace

std::string to_lower(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char b = static_cast<unsigned char>(text[i]);
    if (b >= 'A' && b <= 'Z') {
      out.push_back(static_cast<char>(b - 'A' + 'a'));
    } else if (b == 0xc3 && i + 1 < text.size()) {
      // Latin-1 uppercase block in UTF-8: C3 80..9E (except multiplication sign).
      const unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      out.push_back(static_cast<char>(b));
      if (b1 >= 0x80 && b1 <= 0x9e && b1 != 0x97) {
        out.push_back(static_cast<char>(b1 + 0x20));
      } else {
        out.push_back(static_cast<char>(b1));
      }
      ++i;
    } else {
      out.push_back(static_cast<char>(b));
    }
  }
  return out;
}

std::vector<Token> tokenize(const std::string& text) {
  const std::vector<Codepoint> cps = decode_utf8(text);
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = cps.size();

  auto slice = [&](std::size_t from, std::size_t to) {
    const std::size_t begin = cps[from].offset;
    const std::size_t end = (to < n) ? cps[to].offset : text.size();
    return text.substr(begin, end - begin);
  };

  while (i < n) {
    if (is_space(cps[i].value)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const char32_t c = cps[i].value;

    if (url_starts_at(text, cps, i)) {
      while (i < n && !is_space(cps[i].value)) ++i;
      tokens.push_back({slice(start, i), TokenKind::url});
      continue;
    }
    if ((c == '#' || c == '@') && i + 1 < n && is_tag_char(cps[i + 1].value)) {
      ++i;
      while (i < n && is_tag_char(cps[i].value)) ++i;
      tokens.push_back({slice(start, i), c == '#' ? TokenKind::hashtag : TokenKind::mention});
      continue;
    }
    if (is_letter(c)) {
      while (i < n && (is_letter(cps[i].value) || cps[i].value == '\'')) ++i;
      tokens.push_back({slice(start, i), TokenKind::word});
      continue;
    }
    // Digit/punctuation/symbol run. A digit anywhere makes it a number; a run
    // of bare ASCII punctuation is a separator and yields no token; anything
    // else (emoji, symbols) is residue.
    bool has_digit = false;
    bool all_ascii_punct = true;
    while (i < n && !is_space(cps[i].value) && !is_letter(cps[i].value)) {
      if (i > start && (cps[i].value == '#' || cps[i].value == '@') && i + 1 < n &&
          is_tag_char(cps[i + 1].value)) {
        break;  // a hashtag/mention starts here
      }
      const char32_t v = cps[i].value;
      has_digit = has_digit || is_ascii_digit(v);
      all_ascii_punct = all_ascii_punct && v >= 0x21 && v <= 0x7e && !is_ascii_digit(v);
      ++i;
    }
    if (has_digit) {
      tokens.push_back({slice(start, i), TokenKind::number});
    } else if (!all_ascii_punct) {
      tokens.push_back({slice(start, i), TokenKind::other});
    }
  }
  return tokens;
}

std::vector<std::string> split_sentences(const std::string& text, const Lexicon& lexicon) {
  const std::vector<Codepoint> cps = decode_utf8(text);
  const std::size_t n = cps.size();

  auto is_terminator = [&](std::size_t i) {
    const char32_t c = cps[i].value;
    return c == '.' || c == '!' || c == '?';
  };

  std::vector<std::string> sentences;
  auto trimmed_slice = [&](std::size_t from_cp, std::size_t to_cp) {
    const std::size_t begin = (from_cp < n) ? cps[from_cp].offset : text.size();
    const std::size_t end = (to_cp < n) ? cps[to_cp].offset : text.size();
    std::string seg = text.substr(begin, end - begin);
    const std::size_t first = seg.find_first_not_of(" \t\n\r\f\v");
    if (first == std::string::npos) return std::string();
    const std::size_t last = seg.find_last_not_of(" \t\n\r\f\v");
    return seg.substr(first, last - first + 1);
  };
  // `content_end` excludes the terminator run; a segment with nothing before
  // its terminators is empty and dropped.
  auto push_segment = [&](std::size_t from_cp, std::size_t content_end,
                          std::size_t to_cp, bool terminated) {
    if (trimmed_slice(from_cp, content_end).empty()) return;
    std::string seg = trimmed_slice(from_cp, to_cp);
    if (!terminated) {
      // Counts only if it contains an actual word.
      const auto toks = tokenize(seg);
      const bool has_word = std::any_of(toks.begin(), toks.end(), [](const Token& t) {
        return t.kind == TokenKind::word;
      });
      if (!has_word) return;
    }
    sentences.push_back(std::move(seg));
  };

  std::size_t seg_start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!is_terminator(i)) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end + 1 < n && is_terminator(run_end + 1)) ++run_end;
    const bool at_boundary = (run_end + 1 >= n) || is_space(cps[run_end + 1].value);
    if (!at_boundary) {
      i = run_end + 1;
      continue;
    }
    // Single '.' may close an abbreviation; look back over letters and dots.
    if (run_end == i && cps[i].value == '.') {
      std::size_t back = i;
      while (back > seg_start &&
             (is_letter(cps[back - 1].value) || cps[back - 1].value == '.')) {
        --back;
      }
      if (back < i) {
        const std::size_t begin = cps[back].offset;
        const std::size_t end = cps[i].offset + cps[i].length;
        if (lexicon.is_abbreviation(to_lower(text.substr(begin, end - begin)))) {
          i = run_end + 1;
          continue;
        }
      }
    }
    push_segment(seg_start, i, run_end + 1, true);
    seg_start = run_end + 1;
    i = run_end + 1;
  }
  push_segment(seg_start, n, n, false);
  return sentences;
}

int count_syllables(const std::string& word) {
  const std::string w = to_lower(word);
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    const bool vowel = is_ascii_vowel(c);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  const std::size_t len = w.size();
  if (groups > 1 && len >= 2 && w[len - 1] == 'e' && !is_ascii_vowel(w[len - 2])) {
    const bool consonant_le =
        w[len - 2] == 'l' && len >= 3 && !is_ascii_vowel(w[len - 3]);
    if (!consonant_le) --groups;
  }
  return groups < 1 ? 1 : groups;
}

double flesch_reading_ease(long total_words, long total_sentences, long total_syllables) {
  if (total_words < 1) throw std::invalid_argument("flesch_reading_ease: total_words must be >= 1");
  if (total_sentences < 1) throw std::invalid_argument("flesch_reading_ease: total_sentences must be >= 1");
  const double words = static_cast<double>(total_words);
  return 206.835 - 1.015 * (words / static_cast<double>(total_sentences)) -
         84.6 * (static_cast<double>(total_syllables) / words);
}

double smog_grade(long polysyllable_count, long total_sentences) {
  if (total_sentences < 1) throw std::invalid_argument("smog_grade: total_sentences must be >= 1");
  return 1.0430 * std::sqrt(static_cast<double>(polysyllable_count) * 30.0 /
                            static_cast<double>(total_sentences)) +
         3.1291;
}

double automated_readability_index(long characters, long words, long sentences) {
  if (words < 1) throw std::invalid_argument("automated_readability_index: words must be >= 1");
  if (sentences < 1) throw std::invalid_argument("automated_readability_index: sentences must be >= 1");
  return 4.71 * (static_cast<double>(characters) / static_cast<double>(words)) +
         0.5 * (static_cast<double>(words) / static_cast<double>(sentences)) - 21.43;
}

ReadabilityScores readability_scores(const std::string& text,
                                     const std::vector<Token>& tokens,
                                     const Lexicon& lexicon) {
  ReadabilityScores r;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::word) continue;
    ++r.total_words;
    const int syl = count_syllables(t.text);
    r.total_syllables += syl;
    if (syl >= 3) ++r.polysyllable_count;
  }
  r.total_sentences = static_cast<long>(split_sentences(text, lexicon).size());
  r.total_characters = alnum_char_count(text);
  r.flesch_ease = flesch_reading_ease(r.total_words, r.total_sentences, r.total_syllables);
  r.smog_grade = smog_grade(r.polysyllable_count, r.total_sentences);
  r.ari = automated_readability_index(r.total_characters, r.total_words, r.total_sentences);
  return r;
}

double polarity_score(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  double sum = 0.0;
  long matched = 0;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::word) continue;
    if (auto v = lexicon.valence(t.text)) {
      sum += *v;
      ++matched;
    }
  }
  if (matched == 0) return 0.0;
  return sum / static_cast<double>(matched) / 5.0;
}

int misspelled_count(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  int count = 0;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::word && !lexicon.in_dictionary(t.text)) ++count;
  }
  return count;
}

PosCounts pos_tag_counts(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  PosCounts counts;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::word) continue;
    if (auto tag = lexicon.closed_class_tag(t.text)) {
      ++counts[*tag];
      continue;
    }
    const std::string w = to_lower(t.text);
    auto ends_with = [&](const char* suffix) {
      const std::size_t len = std::char_traits<char>::length(suffix);
      return w.size() >= len && w.compare(w.size() - len, len, suffix) == 0;
    };
    if (ends_with("ly")) {
      ++counts[PosTag::adverb];
    } else if (ends_with("ing") || ends_with("ed")) {
      ++counts[PosTag::verb];
    } else if (ends_with("ous") || ends_with("ful") || ends_with("ive")) {
      ++counts[PosTag::adjective];
    } else {
      ++counts[PosTag::noun];
    }
  }
  return counts;
}

int uppercase_count(const std::string& text) {
  int count = 0;
  for (const Codepoint& cp : decode_utf8(text)) {
    if (is_upper_letter(cp.value)) ++count;
  }
  return count;
}

long codepoint_count(const std::string& text) {
  return static_cast<long>(decode_utf8(text).size());
}

long alnum_char_count(const std::string& text) {
  long count = 0;
  for (const Codepoint& cp : decode_utf8(text)) {
    if (is_letter(cp.value) || is_ascii_digit(cp.value)) ++count;
  }
  return count;
}

std::vector<std::string> vectorization_tokens(const std::string& text) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(text)) {
    if (t.kind == TokenKind::word || t.kind == TokenKind::hashtag) {
      out.push_back(to_lower(t.text));
    }
  }
  return out;
}

LexiconPaths default_lexicon_paths(const std::string& data_dir) {
  return LexiconPaths{
      data_dir + "/valence.tsv",
      data_dir + "/dictionary.txt",
      data_dir + "/pos_tags.tsv",
      data_dir + "/abbreviations.txt",
  };
}

Lexicon Lexicon::load(const LexiconPaths& paths) {
  Lexicon lex;

  {
    const auto lines = read_data_lines(paths.valence);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
      const std::string& line = lines[ln];
      if (is_comment_or_blank(line)) continue;
      const std::string context = paths.valence + " line " + std::to_string(ln + 1);
      const std::size_t tab = line.find('\t');
      if (tab == std::string::npos || tab == 0) {
        throw std::runtime_error(context + ": expected word<TAB>valence");
      }
      double value = 0.0;
      const char* begin = line.data() + tab + 1;
      const char* end = line.data() + line.size();
      const auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr != end) {
        throw std::runtime_error(context + ": invalid valence '" + line.substr(tab + 1) + "'");
      }
      if (value < -5.0 || value > 5.0) {
        throw std::runtime_error(context + ": valence " + line.substr(tab + 1) +
                                 " out of range [-5, 5]");
      }
      lex.valences_[to_lower(line.substr(0, tab))] = value;
    }
  }

  for (const std::string& line : read_data_lines(paths.dictionary)) {
    if (is_comment_or_blank(line)) continue;
    lex.dictionary_.insert(to_lower(line));
  }

  {
    const auto lines = read_data_lines(paths.pos_tags);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
      const std::string& line = lines[ln];
      if (is_comment_or_blank(line)) continue;
      const std::string context = paths.pos_tags + " line " + std::to_string(ln + 1);
      const std::size_t tab = line.find('\t');
      if (tab == std::string::npos || tab == 0) {
        throw std::runtime_error(context + ": expected word<TAB>tag");
      }
      lex.pos_table_[to_lower(line.substr(0, tab))] =
          parse_pos_tag(line.substr(tab + 1), context);
    }
  }

  for (const std::string& line : read_data_lines(paths.abbreviations)) {
    if (is_comment_or_blank(line)) continue;
    lex.abbreviations_.insert(to_lower(line));
  }

  return lex;
}

Lexicon Lexicon::from_tables(std::unordered_map<std::string, double> valences,
                             std::unordered_set<std::string> dictionary,
                             std::unordered_map<std::string, PosTag> pos_table,
                             std::set<std::string> abbreviations) {
  Lexicon lex;
  for (auto& [word, value] : valences) {
    if (value < -5.0 || value > 5.0) {
      throw std::runtime_error("valence for '" + word + "' out of range [-5, 5]");
    }
    lex.valences_[to_lower(word)] = value;
  }
  for (const auto& word : dictionary) lex.dictionary_.insert(to_lower(word));
  for (auto& [word, tag] : pos_table) lex.pos_table_[to_lower(word)] = tag;
  for (const auto& a : abbreviations) lex.abbreviations_.insert(to_lower(a));
  return lex;
}

std::optional<double> Lexicon::valence(const std::string& word) const {
  const auto it = valences_.find(to_lower(word));
  if (it == valences_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::in_dictionary(const std::string& word) const {
  return dictionary_.count(to_lower(word)) > 0;
}

std::optional<PosTag> Lexicon::closed_class_tag(const std::string& word) const {
  const auto it = pos_table_.find(to_lower(word));
  if (it == pos_table_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_abbreviation(const std::string& candidate) const {
  return abbreviations_.count(to_lower(candidate)) > 0;
}

}  // namespace infodemic
