#include "lcx/textutil.hpp"

namespace lcx {

Codepoint decode_utf8(std::string_view text, std::size_t offset) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  unsigned char b0 = bytes[offset];
  std::size_t remaining = text.size() - offset;
  auto cont = [&](std::size_t i) {
    return i < remaining && (bytes[offset + i] & 0xC0) == 0x80;
  };
  if (b0 < 0x80) return {b0, 1};
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = ((b0 & 0x1Fu) << 6) | (bytes[offset + 1] & 0x3Fu);
    return {cp, 2};
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = ((b0 & 0x0Fu) << 12) | ((bytes[offset + 1] & 0x3Fu) << 6) |
                  (bytes[offset + 2] & 0x3Fu);
    return {cp, 3};
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = ((b0 & 0x07u) << 18) | ((bytes[offset + 1] & 0x3Fu) << 12) |
                  ((bytes[offset + 2] & 0x3Fu) << 6) | (bytes[offset + 3] & 0x3Fu);
    return {cp, 4};
  }
  return {b0, 1};  // invalid byte: pass through
}

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case 0x0B:
    case 0x0C:
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

bool is_ascii_letter(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_letter(char32_t cp) {
  if (is_ascii_letter(cp)) return true;
  // Latin-1 supplement letters (excluding × and ÷) and Latin Extended-A/B.
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  return false;
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    Codepoint cp = decode_utf8(text, i);
    char32_t v = cp.value;
    if (v >= U'A' && v <= U'Z') {
      out.push_back(static_cast<char>(v - U'A' + U'a'));
    } else if (v >= 0xC0 && v <= 0xDE && v != 0xD7) {
      // Latin-1 uppercase -> lowercase, two-byte UTF-8.
      char32_t low = v + 0x20;
      out.push_back(static_cast<char>(0xC0 | (low >> 6)));
      out.push_back(static_cast<char>(0x80 | (low & 0x3F)));
    } else {
      out.append(text.substr(i, cp.length));
    }
    i += cp.length;
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  std::size_t start = 0;
  bool in_token = false;
  while (i < text.size()) {
    Codepoint cp = decode_utf8(text, i);
    if (is_unicode_space(cp.value)) {
      if (in_token) {
        out.push_back(text.substr(start, i - start));
        in_token = false;
      }
    } else if (!in_token) {
      start = i;
      in_token = true;
    }
    i += cp.length;
  }
  if (in_token) out.push_back(text.substr(start));
  return out;
}

std::size_t whitespace_word_count(std::string_view text) {
  return split_whitespace(text).size();
}

bool starts_with_uppercase(std::string_view text) {
  if (text.empty()) return false;
  char32_t cp = decode_utf8(text, 0).value;
  if (cp >= U'A' && cp <= U'Z') return true;
  return cp >= 0xC0 && cp <= 0xDE && cp != 0xD7;
}

}  // namespace lcx
