#include "cst/text.hpp"

namespace cst {

std::string_view to_string(Script s) {
  switch (s) {
    case Script::Latin:
      return "latin";
    case Script::Devanagari:
      return "devanagari";
    case Script::Tamil:
      return "tamil";
    case Script::Other:
      return "other";
  }
  return "other";
}

char32_t next_codepoint(std::string_view text, std::size_t& i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  auto is_cont = [&](std::size_t k) {
    return k < text.size() && (byte(k) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && is_cont(i + 1)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x1F) << 6) |
                  (byte(i + 1) & 0x3F);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && is_cont(i + 1) && is_cont(i + 2)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x0F) << 12) |
                  (static_cast<char32_t>(byte(i + 1) & 0x3F) << 6) |
                  (byte(i + 2) & 0x3F);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && is_cont(i + 1) && is_cont(i + 2) &&
      is_cont(i + 3)) {
    char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) |
                  (static_cast<char32_t>(byte(i + 1) & 0x3F) << 12) |
                  (static_cast<char32_t>(byte(i + 2) & 0x3F) << 6) |
                  (byte(i + 3) & 0x3F);
    i += 4;
    return cp;
  }
  // Invalid lead or truncated sequence: consume one byte, keep its value.
  ++i;
  return b0;
}

bool is_whitespace(char32_t cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_digit(char32_t cp) {
  if (cp >= '0' && cp <= '9') return true;
  if (cp >= 0x0966 && cp <= 0x096F) return true;  // Devanagari digits
  if (cp >= 0x0BE6 && cp <= 0x0BEF) return true;  // Tamil digits
  return false;
}

namespace {

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

}  // namespace

bool is_alphabetic(char32_t cp) {
  if (in(cp, 'A', 'Z') || in(cp, 'a', 'z')) return true;
  if (in(cp, 0xC0, 0xFF) && cp != 0xD7 && cp != 0xF7) return true;
  if (in(cp, 0x100, 0x24F)) return true;   // Latin Extended A/B
  if (in(cp, 0x1E00, 0x1EFF)) return true; // Latin Extended Additional
  if (in(cp, 0x0900, 0x097F))              // Devanagari
    return !is_digit(cp) && cp != 0x0964 && cp != 0x0965;
  if (in(cp, 0x0B80, 0x0BFF))              // Tamil
    return !in(cp, 0x0BE6, 0x0BFA);
  // Common non-Latin letter ranges, all classified as Script::Other.
  if (in(cp, 0x0370, 0x03FF) || in(cp, 0x0400, 0x04FF)) return true;
  if (in(cp, 0x0530, 0x058F) || in(cp, 0x0590, 0x05FF)) return true;
  if (in(cp, 0x0600, 0x06FF) || in(cp, 0x0700, 0x074F)) return true;
  if (in(cp, 0x0980, 0x0DFF)) return true;  // other Indic blocks
  if (in(cp, 0x0E00, 0x0EFF)) return true;  // Thai/Lao
  if (in(cp, 0x10A0, 0x10FF)) return true;  // Georgian
  if (in(cp, 0x1100, 0x11FF) || in(cp, 0xAC00, 0xD7AF)) return true;  // Hangul
  if (in(cp, 0x3040, 0x30FF)) return true;  // Kana
  if (in(cp, 0x4E00, 0x9FFF) || in(cp, 0x3400, 0x4DBF)) return true;  // CJK
  return false;
}

Script script_of(char32_t cp) {
  if (in(cp, 'A', 'Z') || in(cp, 'a', 'z') ||
      (in(cp, 0xC0, 0xFF) && cp != 0xD7 && cp != 0xF7) ||
      in(cp, 0x100, 0x24F) || in(cp, 0x1E00, 0x1EFF)) {
    return Script::Latin;
  }
  if (in(cp, 0x0900, 0x097F)) return Script::Devanagari;
  if (in(cp, 0x0B80, 0x0BFF)) return Script::Tamil;
  return Script::Other;
}

char32_t fold_case(char32_t cp) {
  if (in(cp, 'A', 'Z')) return cp + 32;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (in(cp, 0x100, 0x177)) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (in(cp, 0x179, 0x17E)) return (cp % 2 == 1) ? cp + 1 : cp;
  if (in(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 32;  // Greek capitals
  if (in(cp, 0x410, 0x42F)) return cp + 32;                 // Cyrillic
  if (in(cp, 0x400, 0x40F)) return cp + 80;
  return cp;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    out += encode_utf8(fold_case(next_codepoint(text, i)));
  }
  return out;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    char32_t cp = next_codepoint(text, i);
    if (is_whitespace(cp)) {
      if (!current.empty()) {
        out.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.append(text.substr(start, i - start));
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t prev = i;
    if (!is_whitespace(next_codepoint(text, i))) {
      begin = prev;
      break;
    }
    begin = i;
  }
  if (begin >= text.size()) return "";
  // Scan forward remembering the end of the last non-space codepoint.
  std::size_t end = begin;
  i = begin;
  while (i < text.size()) {
    std::size_t prev = i;
    char32_t cp = next_codepoint(text, i);
    if (!is_whitespace(cp)) end = i;
    (void)prev;
  }
  return std::string(text.substr(begin, end - begin));
}

}  // namespace cst
