#include "lcx/tokenize.hpp"

#include <array>

#include "lcx/textutil.hpp"

namespace lcx {

namespace {

bool is_word_char(char32_t cp) { return is_letter(cp) || is_ascii_digit(cp); }

// apostrophe variants accepted in clitics
bool is_apostrophe(std::string_view s, std::size_t i, std::size_t* len) {
  if (s[i] == '\'') {
    *len = 1;
    return true;
  }
  Codepoint cp = decode_utf8(s, i);
  if (cp.value == 0x2019) {  // right single quotation mark
    *len = cp.length;
    return true;
  }
  return false;
}

// Returns the byte length of a clitic suffix of `s`, or 0.
std::size_t clitic_suffix(std::string_view s) {
  std::string folded = fold_case(s);
  static constexpr std::array<std::string_view, 7> tails = {
      "n't", "'s", "'re", "'ve", "'ll", "'d", "'m"};
  for (std::string_view tail : tails) {
    // try both ASCII ' and U+2019 in place of the apostrophe
    for (int variant = 0; variant < 2; ++variant) {
      std::string t(tail);
      if (variant == 1) {
        std::size_t apos = t.find('\'');
        t = t.substr(0, apos) + "\xE2\x80\x99" + t.substr(apos + 1);
      }
      if (folded.size() > t.size() &&
          folded.compare(folded.size() - t.size(), t.size(), t) == 0) {
        return t.size();
      }
    }
  }
  return 0;
}

void emit_chunk(std::string_view chunk, std::vector<std::string>& out) {
  // detach leading punctuation
  while (!chunk.empty()) {
    Codepoint cp = decode_utf8(chunk, 0);
    if (is_word_char(cp.value)) break;
    out.emplace_back(chunk.substr(0, cp.length));
    chunk.remove_prefix(cp.length);
  }
  if (chunk.empty()) return;
  // detach trailing punctuation (collected in reverse, flushed in order)
  std::vector<std::string> tail;
  while (!chunk.empty()) {
    std::size_t start = chunk.size() - 1;
    while (start > 0 && (static_cast<unsigned char>(chunk[start]) & 0xC0) == 0x80)
      --start;
    Codepoint cp = decode_utf8(chunk, start);
    std::size_t apos_len;
    if (is_word_char(cp.value)) break;
    // keep a trailing apostrophe that closes a clitic ("dogs'" keeps its
    // apostrophe detached; clitic splitting below needs the apostrophe in
    // place, so only detach when no clitic would match)
    if (start < chunk.size() && is_apostrophe(chunk, start, &apos_len) &&
        clitic_suffix(chunk) > 0)
      break;
    tail.emplace_back(chunk.substr(start));
    chunk.remove_suffix(chunk.size() - start);
  }
  // split clitics off the core
  std::vector<std::string> clitics;
  while (true) {
    std::size_t n = clitic_suffix(chunk);
    if (n == 0) break;
    clitics.emplace_back(chunk.substr(chunk.size() - n));
    chunk.remove_suffix(n);
  }
  if (!chunk.empty()) out.emplace_back(chunk);
  for (auto it = clitics.rbegin(); it != clitics.rend(); ++it)
    out.push_back(std::move(*it));
  for (auto it = tail.rbegin(); it != tail.rend(); ++it)
    out.push_back(std::move(*it));
}

}  // namespace

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  for (std::string_view chunk : split_whitespace(sentence)) emit_chunk(chunk, out);
  return out;
}

}  // namespace lcx
