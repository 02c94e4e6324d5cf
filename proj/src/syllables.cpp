#include "lcx/syllables.hpp"

#include <algorithm>
#include <vector>

#include "lcx/builtin_data.hpp"
#include "lcx/errors.hpp"
#include "lcx/textutil.hpp"

namespace lcx {

SyllableCounter SyllableCounter::from_tsv(std::string_view tsv) {
  SyllableCounter sc;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos < tsv.size()) {
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError("syllable exception row missing tab", lineno);
    std::string word = fold_case(line.substr(0, tab));
    int n = 0;
    for (char c : line.substr(tab + 1)) {
      if (c < '0' || c > '9')
        throw ParseError("syllable exception count not numeric", lineno);
      n = n * 10 + (c - '0');
    }
    sc.exceptions_[word] = n;
  }
  return sc;
}

int SyllableCounter::count(std::string_view word) const {
  std::string w = fold_case(word);
  if (auto it = exceptions_.find(w); it != exceptions_.end()) return it->second;

  // decode once so positional checks work on codepoints, not bytes
  std::vector<char32_t> cps;
  cps.reserve(w.size());
  for (std::size_t i = 0; i < w.size();) {
    Codepoint cp = decode_utf8(w, i);
    cps.push_back(cp.value);
    i += cp.length;
  }
  bool has_letter = std::any_of(cps.begin(), cps.end(),
                                [](char32_t c) { return is_letter(c); });
  if (!has_letter) return 0;

  auto is_vowel = [](char32_t c) {
    return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' ||
           c == U'y';
  };
  int groups = 0;
  bool in_group = false;
  for (char32_t c : cps) {
    if (is_vowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  if (!cps.empty() && cps.back() == U'e') {
    std::size_t n = cps.size();
    bool le_after_consonant = n >= 3 && cps[n - 2] == U'l' &&
                              is_letter(cps[n - 3]) && !is_vowel(cps[n - 3]);
    if (!le_after_consonant) --groups;
  }
  return std::max(1, groups);
}

const SyllableCounter& builtin_syllable_counter() {
  static const SyllableCounter counter =
      SyllableCounter::from_tsv(builtin_data::syllable_exceptions_tsv());
  return counter;
}

}  // namespace lcx
