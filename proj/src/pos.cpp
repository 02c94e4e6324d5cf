#include "lcx/pos.hpp"

#include <array>

#include "lcx/builtin_data.hpp"
#include "lcx/errors.hpp"
#include "lcx/textutil.hpp"

namespace lcx {

namespace {

constexpr std::array<std::string_view, kNumUPos> kUPosNames = {
    "NOUN", "PROPN", "VERB", "AUX",  "ADJ",  "ADV",   "ADP",  "SCONJ", "CCONJ",
    "DET",  "PRON",  "NUM",  "PART", "INTJ", "PUNCT", "SYM",  "X"};

}  // namespace

std::string_view to_string(UPos pos) {
  return kUPosNames[static_cast<unsigned>(pos)];
}

std::optional<UPos> upos_from_string(std::string_view name) {
  for (int i = 0; i < kNumUPos; ++i)
    if (kUPosNames[i] == name) return static_cast<UPos>(i);
  return std::nullopt;
}

std::optional<UPos> upos_from_ptb(std::string_view tag) {
  if (tag.empty()) return std::nullopt;
  auto starts = [&](std::string_view p) {
    return tag.size() >= p.size() && tag.substr(0, p.size()) == p;
  };
  if (tag == "NNP" || tag == "NNPS") return UPos::PROPN;
  if (starts("NN")) return UPos::NOUN;
  if (tag == "MD") return UPos::AUX;
  if (starts("VB")) return UPos::VERB;
  if (starts("JJ")) return UPos::ADJ;
  if (tag == "WRB" || starts("RB")) return UPos::ADV;
  if (tag == "IN") return UPos::ADP;
  if (tag == "CC") return UPos::CCONJ;
  if (tag == "DT" || tag == "PDT" || tag == "WDT") return UPos::DET;
  if (tag == "PRP" || tag == "PRP$" || tag == "WP" || tag == "WP$" ||
      tag == "EX")
    return UPos::PRON;
  if (tag == "CD") return UPos::NUM;
  if (tag == "RP" || tag == "POS" || tag == "TO") return UPos::PART;
  if (tag == "UH") return UPos::INTJ;
  if (tag == "SYM" || tag == "#" || tag == "$") return UPos::SYM;
  if (tag == "." || tag == "," || tag == ":" || tag == "``" || tag == "''" ||
      tag == "-LRB-" || tag == "-RRB-" || tag == "HYPH" || tag == "NFP")
    return UPos::PUNCT;
  if (tag == "FW" || tag == "LS" || tag == "XX" || tag == "ADD" ||
      tag == "GW" || tag == "AFX")
    return UPos::X;
  return std::nullopt;
}

TagLexicon TagLexicon::from_tsv(std::string_view tsv) {
  TagLexicon lex;
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
      throw ParseError("tag lexicon row missing tab", lineno);
    std::string word = fold_case(line.substr(0, tab));
    auto tagname = line.substr(tab + 1);
    auto tag = upos_from_string(tagname);
    if (!tag)
      throw ParseError("unknown tag '" + std::string(tagname) + "'", lineno);
    lex.entries_[word] = *tag;
  }
  return lex;
}

std::optional<UPos> TagLexicon::lookup(std::string_view folded_word) const {
  auto it = entries_.find(std::string(folded_word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const TagLexicon& builtin_tag_lexicon() {
  static const TagLexicon lex =
      TagLexicon::from_tsv(builtin_data::tag_lexicon_tsv());
  return lex;
}

bool token_is_word(std::string_view surface) {
  for (std::size_t i = 0; i < surface.size();) {
    Codepoint cp = decode_utf8(surface, i);
    if (is_letter(cp.value)) return true;
    i += cp.length;
  }
  return false;
}

namespace {

std::optional<UPos> clitic_tag(std::string_view folded) {
  if (folded == "n't" || folded == "'s") return UPos::PART;
  if (folded == "'re" || folded == "'ve" || folded == "'ll" ||
      folded == "'d" || folded == "'m")
    return UPos::AUX;
  return std::nullopt;
}

bool ends_with(std::string_view s, std::string_view tail) {
  return s.size() >= tail.size() &&
         s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

std::optional<UPos> suffix_tag(std::string_view w) {
  std::size_t n = w.size();
  if (ends_with(w, "ly")) return UPos::ADV;
  if ((ends_with(w, "ing") && n > 4) || (ends_with(w, "ed") && n > 3) ||
      ends_with(w, "ize") || ends_with(w, "ise") || ends_with(w, "ify"))
    return UPos::VERB;
  if (ends_with(w, "tion") || ends_with(w, "sion") || ends_with(w, "ment") ||
      ends_with(w, "ness") || ends_with(w, "ity") || ends_with(w, "ship") ||
      ends_with(w, "hood") || ends_with(w, "ism") || ends_with(w, "ist"))
    return UPos::NOUN;
  if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") ||
      ends_with(w, "able") || ends_with(w, "ible") || ends_with(w, "less") ||
      ends_with(w, "ish") || ends_with(w, "est") || ends_with(w, "al"))
    return UPos::ADJ;
  return std::nullopt;
}

bool all_digits_or_number_punct(std::string_view s) {
  bool digit = false;
  for (std::size_t i = 0; i < s.size();) {
    Codepoint cp = decode_utf8(s, i);
    if (is_ascii_digit(cp.value))
      digit = true;
    else if (cp.value != U'.' && cp.value != U',' && cp.value != U'-' &&
             cp.value != U'%')
      return false;
    i += cp.length;
  }
  return digit;
}

}  // namespace

std::vector<UPos> tag_tokens(const std::vector<std::string>& tokens,
                             const TagLexicon& lexicon) {
  std::vector<UPos> tags;
  tags.reserve(tokens.size());
  bool first_word = true;
  for (const std::string& tok : tokens) {
    if (!token_is_word(tok)) {
      tags.push_back(all_digits_or_number_punct(tok) ? UPos::NUM : UPos::PUNCT);
      continue;
    }
    std::string folded = fold_case(tok);
    UPos tag;
    if (auto t = clitic_tag(folded)) {
      tag = *t;
    } else if (auto t2 = lexicon.lookup(folded)) {
      tag = *t2;
    } else if (!first_word && starts_with_uppercase(tok)) {
      tag = UPos::PROPN;
    } else if (auto t3 = suffix_tag(folded)) {
      tag = *t3;
    } else {
      tag = UPos::NOUN;
    }
    tags.push_back(tag);
    first_word = false;
  }
  return tags;
}

}  // namespace lcx
