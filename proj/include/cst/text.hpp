#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cst {

enum class Script { Latin, Devanagari, Tamil, Other };

std::string_view to_string(Script s);

// Decodes the codepoint starting at byte offset `i` and advances `i` past it.
// Malformed sequences fall back to the single byte value (Latin-1 style),
// so arbitrary bytes never throw.
char32_t next_codepoint(std::string_view text, std::size_t& i);

bool is_whitespace(char32_t cp);
bool is_digit(char32_t cp);

// True when the codepoint is a letter (or a combining mark that is part of
// a word in an Indic script). Covers Latin, Devanagari, Tamil and the common
// bicameral/abjad/CJK ranges; everything else is treated as non-alphabetic.
bool is_alphabetic(char32_t cp);

// Script of an alphabetic codepoint. Meaningless for non-alphabetic input.
Script script_of(char32_t cp);

// Simple case folding: ASCII plus the Latin-1/Latin-Extended-A ranges.
// Caseless scripts pass through unchanged.
char32_t fold_case(char32_t cp);
std::string fold_case(std::string_view text);

std::string encode_utf8(char32_t cp);

// Split on Unicode whitespace; no other processing.
std::vector<std::string> split_whitespace(std::string_view text);

// Trims ASCII/Unicode whitespace from both ends.
std::string trim(std::string_view text);

}  // namespace cst
