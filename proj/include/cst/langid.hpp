#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cst/text.hpp"

namespace cst {

// Case-folded word list used for lexicon-membership language detection.
struct Lexicon {
  std::string name;
  std::unordered_set<std::string> words;

  // One word per line; blank lines and lines starting with '#' are skipped.
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon from_words(std::string name,
                            const std::vector<std::string>& words);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words.size(); }
};

struct Token {
  std::string surface;  // after punctuation stripping
  Script script = Script::Other;
  bool counted = false;  // true iff the token has an alphabetic character
};

struct TokenizedText {
  std::vector<Token> tokens;
  std::size_t counted() const;
};

// Whitespace split, then leading/trailing non-alphanumeric characters are
// stripped from each token; tokens emptied by stripping are dropped. The
// script is the majority script over the token's alphabetic characters.
TokenizedText tokenize(std::string_view text);

bool is_resource_rich(const Token& token, const Lexicon& lexicon);

struct Fraction {
  double value = 0.0;
  // Set when the text has no counted tokens; value is 0.0 in that case.
  bool degenerate = false;
};

// Fraction of counted tokens found in the lexicon.
Fraction f_eng(std::string_view text, const Lexicon& lexicon);

// Fraction of counted tokens whose script matches.
Fraction script_fraction(std::string_view text, Script script);

// The pluggable resource-rich-language detector behind f_eng: either
// lexicon membership or script membership.
class EnglishDetector {
 public:
  static EnglishDetector from_lexicon(Lexicon lexicon);
  static EnglishDetector from_script(Script script);
  // Parses "lexicon:<path>" or "script:<latin|devanagari|tamil>".
  static EnglishDetector from_config(std::string_view config);

  Fraction fraction(std::string_view text) const;
  const std::string& describe() const { return describe_; }

 private:
  EnglishDetector() = default;
  bool use_script_ = false;
  Script script_ = Script::Latin;
  Lexicon lexicon_;
  std::string describe_;
};

}  // namespace cst
