#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "lcx/document.hpp"

namespace lcx {

// Grammatical prominence of an entity within one sentence.
enum class EntityRole : std::uint8_t { none = 0, other = 1, object = 2, subject = 3 };

inline int role_rank(EntityRole r) {
  switch (r) {
    case EntityRole::subject: return 3;
    case EntityRole::object: return 2;
    case EntityRole::other: return 1;
    default: return 0;
  }
}

// Sentence-by-entity occurrence table.  Entities are NOUN/PROPN/PRON tokens
// keyed by case-folded lemma, in order of first mention.  A sentence's role
// for an entity is the highest-ranked role among its mentions there:
// subject when any mention's dependency label starts with "nsubj", object
// for "obj"/"iobj" (and subtypes), otherwise other.
struct EntityGrid {
  std::vector<std::string> entities;
  std::vector<std::vector<EntityRole>> roles;     // [sentence][entity]
  std::vector<std::vector<std::uint32_t>> counts; // mention counts
  std::size_t sentence_count = 0;
  std::size_t total_mentions = 0;

  // distinct entities mentioned in sentence s
  std::size_t distinct_in_sentence(std::size_t s) const;
};

EntityGrid build_entity_grid(const AnnotatedDocument& doc);

// Pairwise sentence-link scores used by the coherence measures.  Edges run
// over every ordered sentence pair (i < j).
struct CoherenceScores {
  double unique = 0.0;       // 1 per pair sharing at least one entity
  double weighted = 0.0;     // number of shared entities
  double accumulated = 0.0;  // sum over shared entities of rank(i)*rank(j)
  double unique_dist = 0.0;      // same three, each edge damped by the
  double weighted_dist = 0.0;    // sentence gap (j - i)
  double accumulated_dist = 0.0;
};

// Sums edge scores over all sentence pairs (i < j), dividing the *_dist
// variants by the gap (j - i).  Total is later normalised by sentence count.
CoherenceScores coherence_scores(const EntityGrid& grid);

}  // namespace lcx
