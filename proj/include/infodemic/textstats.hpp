#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace infodemic {

enum class TokenKind { word, hashtag, mention, url, number, other };

struct Token {
  std::string text;
  TokenKind kind;
};

enum class PosTag : int {
  noun = 0,
  verb,
  adjective,
  adverb,
  pronoun,
  determiner,
  preposition,
  other,
};

inline constexpr int kPosTagCount = 8;

struct PosCounts {
  std::array<int, kPosTagCount> counts{};

  int& operator[](PosTag tag) { return counts[static_cast<int>(tag)]; }
  int operator[](PosTag tag) const { return counts[static_cast<int>(tag)]; }
  int total() const {
    int sum = 0;
    for (int c : counts) sum += c;
    return sum;
  }
};

struct ReadabilityScores {
  double flesch_ease = 0.0;
  double smog_grade = 0.0;
  double ari = 0.0;
  long total_words = 0;
  long total_sentences = 0;
  long total_syllables = 0;
  long polysyllable_count = 0;
  long total_characters = 0;  // letters and digits only
};

struct LexiconPaths {
  std::string valence;
  std::string dictionary;
  std::string pos_tags;
  std::string abbreviations;
};

// Standard file names under a data directory.
LexiconPaths default_lexicon_paths(const std::string& data_dir);

// Word valences, spell-check dictionary, closed-class POS table and the
// sentence-splitter abbreviation list. Loaded once, immutable, safe to share
// across threads. All lookups are case-insensitive (keys stored lowercase).
class Lexicon {
 public:
  static Lexicon load(const LexiconPaths& paths);

  std::optional<double> valence(const std::string& word) const;
  bool in_dictionary(const std::string& word) const;
  std::optional<PosTag> closed_class_tag(const std::string& word) const;
  // `candidate` includes the trailing period, e.g. "dr.".
  bool is_abbreviation(const std::string& candidate) const;

  const std::unordered_map<std::string, double>& valences() const { return valences_; }
  const std::unordered_set<std::string>& dictionary() const { return dictionary_; }
  const std::unordered_map<std::string, PosTag>& pos_table() const { return pos_table_; }
  const std::set<std::string>& abbreviations() const { return abbreviations_; }

  // Assembles a lexicon from in-memory tables (bundle loading, tests).
  // Enforces the same invariants as load().
  static Lexicon from_tables(std::unordered_map<std::string, double> valences,
                             std::unordered_set<std::string> dictionary,
                             std::unordered_map<std::string, PosTag> pos_table,
                             std::set<std::string> abbreviations);

 private:
  Lexicon() = default;

  std::unordered_map<std::string, double> valences_;
  std::unordered_set<std::string> dictionary_;
  std::unordered_map<std::string, PosTag> pos_table_;
  std::set<std::string> abbreviations_;
};

// Token kinds, in match order: "#"-prefixed hashtags, "@"-prefixed mentions,
// http(s):// runs up to the next space, digit/punctuation runs containing a
// digit, letter/apostrophe runs containing a letter, everything else `other`.
std::vector<Token> tokenize(const std::string& text);

// Splits on '.', '!', '?' runs followed by whitespace or end of text.
// Abbreviations from the lexicon ("dr.", "u.s.") do not terminate. Trailing
// text without a terminator counts as a sentence only if it contains a word.
std::vector<std::string> split_sentences(const std::string& text, const Lexicon& lexicon);

// Maximal vowel groups (aeiouy), minus a trailing silent 'e' that is not part
// of a consonant+"le" ending; never less than 1.
int count_syllables(const std::string& word);

double flesch_reading_ease(long total_words, long total_sentences, long total_syllables);
double smog_grade(long polysyllable_count, long total_sentences);
double automated_readability_index(long characters, long words, long sentences);

// All readability inputs at once; inputs must satisfy words >= 1, sentences >= 1.
ReadabilityScores readability_scores(const std::string& text,
                                     const std::vector<Token>& tokens,
                                     const Lexicon& lexicon);

// Mean valence of matched word tokens, scaled by the lexicon bound 5 into
// [-1, 1]. 0.0 when nothing matches.
double polarity_score(const std::vector<Token>& tokens, const Lexicon& lexicon);

// Word tokens absent from the dictionary. Non-word tokens are skipped.
int misspelled_count(const std::vector<Token>& tokens, const Lexicon& lexicon);

// Closed-class table first, then suffix rules (-ly adverb; -ing/-ed verb;
// -ous/-ful/-ive adjective), fallback noun. Counts sum to the word-token count.
PosCounts pos_tag_counts(const std::vector<Token>& tokens, const Lexicon& lexicon);

// Uppercase alphabetic code points in the raw text (ASCII + Latin-1).
int uppercase_count(const std::string& text);

// Code points in the UTF-8 string (malformed bytes count as one each).
long codepoint_count(const std::string& text);

// Letter/digit code points; the ARI character count.
long alnum_char_count(const std::string& text);

// Lowercased word and hashtag tokens in order; the document form handed to
// TF-IDF. URLs, mentions, numbers and punctuation are excluded.
std::vector<std::string> vectorization_tokens(const std::string& text);

std::string to_lower(const std::string& text);

}  // namespace infodemic
