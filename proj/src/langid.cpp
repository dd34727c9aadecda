#include "cst/langid.hpp"

#include <array>
#include <fstream>

#include "cst/error.hpp"

namespace cst {

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("langid: cannot open lexicon " + path.string());
  Lexicon lex;
  lex.name = path.stem().string();
  std::string line;
  while (std::getline(in, line)) {
    std::string word = trim(line);
    if (word.empty() || word[0] == '#') continue;
    lex.words.insert(fold_case(word));
  }
  if (lex.words.empty())
    throw Error("langid: lexicon " + path.string() + " has no words");
  return lex;
}

Lexicon Lexicon::from_words(std::string name,
                            const std::vector<std::string>& words) {
  Lexicon lex;
  lex.name = std::move(name);
  for (const auto& w : words) {
    std::string t = trim(w);
    if (!t.empty()) lex.words.insert(fold_case(t));
  }
  if (lex.words.empty()) throw Error("langid: lexicon has no words");
  return lex;
}

bool Lexicon::contains(std::string_view word) const {
  return words.count(fold_case(word)) > 0;
}

std::size_t TokenizedText::counted() const {
  std::size_t n = 0;
  for (const auto& t : tokens)
    if (t.counted) ++n;
  return n;
}

TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  for (const std::string& raw : split_whitespace(text)) {
    // Decode once; keep (offset, codepoint) pairs for the strip below.
    std::vector<std::pair<std::size_t, char32_t>> cps;
    std::size_t i = 0;
    while (i < raw.size()) {
      std::size_t at = i;
      cps.emplace_back(at, next_codepoint(raw, i));
    }
    auto keep = [](char32_t cp) { return is_alphabetic(cp) || is_digit(cp); };
    std::size_t lo = 0, hi = cps.size();
    while (lo < hi && !keep(cps[lo].second)) ++lo;
    while (hi > lo && !keep(cps[hi - 1].second)) --hi;
    if (lo >= hi) continue;

    std::size_t begin = cps[lo].first;
    std::size_t end = hi < cps.size() ? cps[hi].first : raw.size();

    Token token;
    token.surface = raw.substr(begin, end - begin);
    std::array<std::size_t, 4> votes{0, 0, 0, 0};
    bool any_alpha = false;
    for (std::size_t k = lo; k < hi; ++k) {
      char32_t cp = cps[k].second;
      if (!is_alphabetic(cp)) continue;
      any_alpha = true;
      ++votes[static_cast<std::size_t>(script_of(cp))];
    }
    token.counted = any_alpha;
    if (any_alpha) {
      std::size_t best = 0;
      for (std::size_t s = 1; s < votes.size(); ++s) {
        if (votes[s] > votes[best]) best = s;
      }
      token.script = static_cast<Script>(best);
    }
    out.tokens.push_back(std::move(token));
  }
  return out;
}

bool is_resource_rich(const Token& token, const Lexicon& lexicon) {
  return lexicon.contains(token.surface);
}

Fraction f_eng(std::string_view text, const Lexicon& lexicon) {
  auto toks = tokenize(text);
  std::size_t n_words = 0, n_eng = 0;
  for (const auto& t : toks.tokens) {
    if (!t.counted) continue;
    ++n_words;
    if (is_resource_rich(t, lexicon)) ++n_eng;
  }
  if (n_words == 0) return {0.0, true};
  return {static_cast<double>(n_eng) / static_cast<double>(n_words), false};
}

Fraction script_fraction(std::string_view text, Script script) {
  auto toks = tokenize(text);
  std::size_t n_words = 0, n_match = 0;
  for (const auto& t : toks.tokens) {
    if (!t.counted) continue;
    ++n_words;
    if (t.script == script) ++n_match;
  }
  if (n_words == 0) return {0.0, true};
  return {static_cast<double>(n_match) / static_cast<double>(n_words), false};
}

EnglishDetector EnglishDetector::from_lexicon(Lexicon lexicon) {
  EnglishDetector d;
  d.use_script_ = false;
  d.describe_ = "lexicon:" + lexicon.name;
  d.lexicon_ = std::move(lexicon);
  return d;
}

EnglishDetector EnglishDetector::from_script(Script script) {
  EnglishDetector d;
  d.use_script_ = true;
  d.script_ = script;
  d.describe_ = "script:" + std::string(to_string(script));
  return d;
}

EnglishDetector EnglishDetector::from_config(std::string_view config) {
  auto colon = config.find(':');
  if (colon == std::string_view::npos)
    throw Error("langid: detector config must be lexicon:<path> or script:<name>");
  std::string_view kind = config.substr(0, colon);
  std::string_view arg = config.substr(colon + 1);
  if (kind == "lexicon") return from_lexicon(Lexicon::load(std::string(arg)));
  if (kind == "script") {
    if (arg == "latin") return from_script(Script::Latin);
    if (arg == "devanagari") return from_script(Script::Devanagari);
    if (arg == "tamil") return from_script(Script::Tamil);
    throw Error("langid: unknown script '" + std::string(arg) + "'");
  }
  throw Error("langid: unknown detector kind '" + std::string(kind) + "'");
}

Fraction EnglishDetector::fraction(std::string_view text) const {
  return use_script_ ? script_fraction(text, script_) : f_eng(text, lexicon_);
}

}  // namespace cst
