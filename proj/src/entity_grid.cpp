#include "lcx/entity_grid.hpp"

#include <unordered_map>

#include "lcx/textutil.hpp"

namespace lcx {

std::size_t EntityGrid::distinct_in_sentence(std::size_t s) const {
  std::size_t n = 0;
  for (std::size_t e = 0; e < entities.size(); ++e)
    if (roles[s][e] != EntityRole::none) ++n;
  return n;
}

EntityGrid build_entity_grid(const AnnotatedDocument& doc) {
  EntityGrid grid;
  grid.sentence_count = doc.sentences.size();
  std::unordered_map<std::string, std::size_t> index;

  grid.roles.resize(grid.sentence_count);
  grid.counts.resize(grid.sentence_count);
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    for (const Token& tok : doc.sentences[s].tokens) {
      if (tok.pos != UPos::NOUN && tok.pos != UPos::PROPN &&
          tok.pos != UPos::PRON)
        continue;
      const std::string key = fold_case(tok.lemma);
      auto [it, inserted] = index.emplace(key, grid.entities.size());
      if (inserted) grid.entities.push_back(key);
      std::size_t e = it->second;
      for (std::size_t row = 0; row < grid.sentence_count; ++row) {
        if (grid.roles[row].size() < grid.entities.size()) {
          grid.roles[row].resize(grid.entities.size(), EntityRole::none);
          grid.counts[row].resize(grid.entities.size(), 0);
        }
      }
      ++grid.counts[s][e];
      ++grid.total_mentions;
      EntityRole mention_role = EntityRole::other;
      if (tok.dep_label) {
        const std::string& d = *tok.dep_label;
        if (d.rfind("nsubj", 0) == 0)
          mention_role = EntityRole::subject;
        else if (d.rfind("obj", 0) == 0 || d.rfind("iobj", 0) == 0)
          mention_role = EntityRole::object;
      }
      if (role_rank(mention_role) > role_rank(grid.roles[s][e]))
        grid.roles[s][e] = mention_role;
    }
  }
  return grid;
}

CoherenceScores coherence_scores(const EntityGrid& grid) {
  CoherenceScores cs;
  std::size_t n = grid.sentence_count;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double shared = 0;
      double rank_sum = 0;
      for (std::size_t e = 0; e < grid.entities.size(); ++e) {
        EntityRole ri = grid.roles[i][e];
        EntityRole rj = grid.roles[j][e];
        if (ri == EntityRole::none || rj == EntityRole::none) continue;
        shared += 1.0;
        rank_sum += role_rank(ri) * role_rank(rj);
      }
      if (shared == 0) continue;
      double dist = static_cast<double>(j - i);
      cs.unique += 1.0;
      cs.weighted += shared;
      cs.accumulated += rank_sum;
      cs.unique_dist += 1.0 / dist;
      cs.weighted_dist += shared / dist;
      cs.accumulated_dist += rank_sum / dist;
    }
  }
  return cs;
}

}  // namespace lcx
