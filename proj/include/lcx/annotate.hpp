#pragma once
#include <map>
#include <string>
#include <vector>

#include "lcx/document.hpp"
#include "lcx/segment.hpp"
#include "lcx/syllables.hpp"
#include "lcx/tree.hpp"

namespace lcx {

// Everything annotation needs.  Null members fall back to the bundled
// resources; the full-tier maps must be supplied when tier == full.
struct AnnotationResources {
  const TagLexicon* tags = nullptr;
  const SyllableCounter* syllables = nullptr;
  const SentenceSegmenter* segmenter = nullptr;
  const std::map<std::string, AnnotatedDocument>* parsed = nullptr;
  const std::map<std::string, std::vector<ParseTree>>* trees = nullptr;
};

// Annotates one record's text.  builtin tier: segment, tokenize, tag and
// count syllables with the bundled resources; lemma = case-folded surface.
// full tier: takes the sentences from `parsed` (keyed by id), attaches one
// tree per sentence from `trees`, and checks that non-punctuation tree
// leaves line up with the word tokens.
AnnotatedDocument annotate(const std::string& id, const std::string& text,
                           Tier tier, const AnnotationResources& res = {});

}  // namespace lcx
