#pragma once
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lcx {

// Universal part-of-speech tags.
enum class UPos : unsigned char {
  NOUN,
  PROPN,
  VERB,
  AUX,
  ADJ,
  ADV,
  ADP,
  SCONJ,
  CCONJ,
  DET,
  PRON,
  NUM,
  PART,
  INTJ,
  PUNCT,
  SYM,
  X,
};
inline constexpr int kNumUPos = 17;

std::string_view to_string(UPos pos);
std::optional<UPos> upos_from_string(std::string_view name);
// Treebank-style tag (NN, VBZ, JJR, ...) to the universal set.
std::optional<UPos> upos_from_ptb(std::string_view tag);

// Word list with one tag per word, used by the built-in tagger.
class TagLexicon {
 public:
  TagLexicon() = default;
  static TagLexicon from_tsv(std::string_view tsv);

  std::optional<UPos> lookup(std::string_view folded_word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, UPos> entries_;
};

const TagLexicon& builtin_tag_lexicon();

// Tags one sentence of surface tokens.  Order of precedence: clitic table,
// lexicon lookup on the case-folded form, digit rule, capitalised-unknown
// rule (not sentence-initial), suffix rules, default NOUN.
std::vector<UPos> tag_tokens(const std::vector<std::string>& tokens,
                             const TagLexicon& lexicon);

// True when the token counts as a word (contains at least one letter).
bool token_is_word(std::string_view surface);

}  // namespace lcx
