#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lcx {

// Minimal UTF-8 handling.  Invalid bytes are treated as one codepoint each
// (value = byte) so malformed text degrades instead of crashing.
struct Codepoint {
  char32_t value;
  std::size_t length;  // bytes consumed
};
Codepoint decode_utf8(std::string_view text, std::size_t offset);

bool is_unicode_space(char32_t cp);
bool is_ascii_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);
// Letters for our purposes: ASCII letters plus Latin-1/Latin Extended
// letters, so accented words still count as word tokens.
bool is_letter(char32_t cp);

// Lowercases ASCII and Latin-1 uppercase letters; other codepoints pass
// through unchanged.
std::string fold_case(std::string_view text);

// Splits on runs of Unicode whitespace.  Used for the raw word counts that
// drive corpus length filtering.
std::vector<std::string_view> split_whitespace(std::string_view text);
std::size_t whitespace_word_count(std::string_view text);

bool starts_with_uppercase(std::string_view text);

}  // namespace lcx
