#include "lcx/annotate.hpp"

#include "lcx/errors.hpp"
#include "lcx/textutil.hpp"
#include "lcx/tokenize.hpp"

namespace lcx {

std::string_view to_string(Tier tier) {
  return tier == Tier::builtin ? "builtin" : "full";
}

std::optional<Tier> tier_from_string(std::string_view name) {
  if (name == "builtin") return Tier::builtin;
  if (name == "full") return Tier::full;
  return std::nullopt;
}

std::size_t AnnotatedDocument::word_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences)
    for (const Token& t : s.tokens)
      if (t.is_word) ++n;
  return n;
}

std::size_t AnnotatedDocument::token_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences) n += s.tokens.size();
  return n;
}

namespace {

AnnotatedDocument annotate_builtin(const std::string& id,
                                   const std::string& text,
                                   const AnnotationResources& res) {
  const TagLexicon& lex = res.tags ? *res.tags : builtin_tag_lexicon();
  const SyllableCounter& syl =
      res.syllables ? *res.syllables : builtin_syllable_counter();
  const SentenceSegmenter& seg =
      res.segmenter ? *res.segmenter : builtin_segmenter();

  AnnotatedDocument doc;
  doc.id = id;
  doc.tier = Tier::builtin;
  for (const std::string& sent_text : seg.segment(text)) {
    Sentence sent;
    std::vector<std::string> surfaces = tokenize(sent_text);
    std::vector<UPos> tags = tag_tokens(surfaces, lex);
    sent.tokens.reserve(surfaces.size());
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
      Token tok;
      tok.surface = std::move(surfaces[i]);
      tok.lemma = fold_case(tok.surface);
      tok.pos = tags[i];
      tok.is_word = token_is_word(tok.surface);
      tok.syllables = tok.is_word ? syl.count(tok.surface) : 0;
      sent.tokens.push_back(std::move(tok));
    }
    if (!sent.tokens.empty()) doc.sentences.push_back(std::move(sent));
  }
  return doc;
}

AnnotatedDocument annotate_full(const std::string& id,
                                const AnnotationResources& res) {
  if (!res.parsed)
    throw ConfigError("full tier requires a dependency annotation file");
  auto it = res.parsed->find(id);
  if (it == res.parsed->end())
    throw AlignmentError("no dependency annotation for record '" + id + "'");
  AnnotatedDocument doc = it->second;
  doc.id = id;
  doc.tier = Tier::full;
  if (doc.sentences.empty())
    throw AlignmentError("annotation for record '" + id + "' has no sentences");

  if (!res.trees)
    throw ConfigError("full tier requires a tree file");
  auto tit = res.trees->find(id);
  if (tit == res.trees->end())
    throw AlignmentError("no trees for record '" + id + "'");
  const std::vector<ParseTree>& trees = tit->second;
  if (trees.size() != doc.sentences.size())
    throw AlignmentError(
        "record '" + id + "': " + std::to_string(trees.size()) +
        " trees for " + std::to_string(doc.sentences.size()) + " sentences");

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    Sentence& sent = doc.sentences[s];
    const ParseTree& tree = trees[s];
    // word tokens must match the tree's non-punctuation leaves in order
    std::vector<std::string_view> leaves = tree_leaves(tree.root, true);
    std::vector<const Token*> words;
    for (const Token& t : sent.tokens)
      if (t.is_word) words.push_back(&t);
    if (leaves.size() != words.size())
      throw AlignmentError("record '" + id + "', sentence " +
                           std::to_string(s + 1) + ": tree has " +
                           std::to_string(leaves.size()) + " word leaves for " +
                           std::to_string(words.size()) + " word tokens");
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      if (fold_case(leaves[k]) != fold_case(words[k]->surface))
        throw AlignmentError("record '" + id + "', sentence " +
                             std::to_string(s + 1) + ": leaf '" +
                             std::string(leaves[k]) + "' vs token '" +
                             words[k]->surface + "'");
    }
    sent.tree = tree;
  }
  return doc;
}

}  // namespace

AnnotatedDocument annotate(const std::string& id, const std::string& text,
                           Tier tier, const AnnotationResources& res) {
  if (tier == Tier::builtin) return annotate_builtin(id, text, res);
  (void)text;  // the gold annotation supersedes the raw text at full tier
  return annotate_full(id, res);
}

}  // namespace lcx
