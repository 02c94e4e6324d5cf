#pragma once
#include <optional>
#include <string>
#include <vector>

#include "lcx/pos.hpp"
#include "lcx/tree.hpp"

namespace lcx {

// Annotation depth.  builtin: segmentation, tokens, tags and syllables from
// the bundled resources; no trees or dependencies.  full: tokens, tags,
// lemmas and dependencies from CoNLL-U plus bracketed constituency trees.
enum class Tier { builtin, full };

std::string_view to_string(Tier tier);
std::optional<Tier> tier_from_string(std::string_view name);

struct Token {
  std::string surface;
  std::string lemma;
  UPos pos = UPos::X;
  int syllables = 0;
  bool is_word = false;
  // dependency fields are only present at the full tier
  std::optional<int> head;  // 0 = root, otherwise 1-based index in sentence
  std::optional<std::string> dep_label;
};

struct Sentence {
  std::vector<Token> tokens;
  std::optional<ParseTree> tree;
};

struct AnnotatedDocument {
  std::string id;
  Tier tier = Tier::builtin;
  std::vector<Sentence> sentences;

  std::size_t word_count() const;
  std::size_t token_count() const;
};

}  // namespace lcx
