#include "lcx/features.hpp"

#include <array>
#include <cmath>
#include <set>
#include <unordered_map>

#include "lcx/entity_grid.hpp"
#include "lcx/errors.hpp"
#include "lcx/textutil.hpp"

namespace lcx {

namespace {

const FeatureDef kRegistry[] = {
#include "registry_table.inc"
};

constexpr std::array<std::string_view, kNumFamilies> kFamilyNames = {
    "shallow", "formula", "pos",    "ttr",   "variation",
    "phrasal", "tree",    "psycho", "discourse"};

}  // namespace

std::string_view to_string(Family family) {
  return kFamilyNames[static_cast<unsigned>(family)];
}

std::optional<Family> family_from_string(std::string_view name) {
  for (int i = 0; i < kNumFamilies; ++i)
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  return std::nullopt;
}

std::span<const FeatureDef> registry() {
  static_assert(sizeof(kRegistry) / sizeof(kRegistry[0]) == kFeatureCount);
  return kRegistry;
}

int feature_index(std::string_view id) {
  static const std::unordered_map<std::string_view, int> index = [] {
    std::unordered_map<std::string_view, int> m;
    for (std::size_t i = 0; i < kFeatureCount; ++i) m[kRegistry[i].id] = i;
    return m;
  }();
  auto it = index.find(id);
  return it == index.end() ? -1 : it->second;
}

FamilySlice family_slice(Family family) {
  FamilySlice slice;
  bool seen = false;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (kRegistry[i].family != family) continue;
    if (!seen) {
      slice.offset = i;
      seen = true;
    }
    ++slice.count;
  }
  return slice;
}

Ratio safe_ratio(double numerator, double denominator) {
  if (denominator == 0.0) return {0.0, true};
  return {numerator / denominator, false};
}

namespace formulas {

double flesch_kincaid(double T, double S, double Syl) {
  return 0.39 * (T / S) + 11.8 * (Syl / T) - 15.59;
}

double new_ari(double Ch, double T, double S) {
  return 5.84 * (Ch / T) + 0.37 * (T / S) - 26.01;
}

double coleman_liau(double Ch, double T, double S) {
  double L = 100.0 * Ch / T;   // characters per 100 words
  double Sc = 100.0 * S / T;   // sentences per 100 words
  return 0.0588 * L - 0.296 * Sc - 15.8;
}

double smog(double Poly, double S) {
  return 1.0430 * std::sqrt(Poly * 30.0 / S) + 3.1291;
}

double gunning_fog(double T, double S, double Poly) {
  return 0.4 * (T / S + 100.0 * Poly / T);
}

double linsear(double easy, double hard, double S) {
  double r = (easy + 3.0 * hard) / S;
  return r <= 20.0 ? r / 2.0 - 1.0 : r / 2.0;
}

}  // namespace formulas

namespace {

// Raw counts shared by several families.
struct DocCounts {
  std::size_t S = 0;
  std::size_t T = 0;        // word tokens
  std::size_t syllables = 0;
  std::size_t chars = 0;    // codepoints of word-token surfaces
  std::size_t letters = 0;  // letter codepoints only
  std::size_t poly = 0;     // words with >= 3 syllables
  std::size_t easy = 0;     // words with <= 2 syllables
};

DocCounts doc_counts(const AnnotatedDocument& doc) {
  DocCounts c;
  c.S = doc.sentences.size();
  for (const Sentence& sent : doc.sentences) {
    for (const Token& tok : sent.tokens) {
      if (!tok.is_word) continue;
      ++c.T;
      c.syllables += tok.syllables;
      for (std::size_t i = 0; i < tok.surface.size();) {
        Codepoint cp = decode_utf8(tok.surface, i);
        ++c.chars;
        if (is_letter(cp.value)) ++c.letters;
        i += cp.length;
      }
      if (tok.syllables >= 3)
        ++c.poly;
      else
        ++c.easy;
    }
  }
  return c;
}

FeatureValue ratio_value(double num, double den) {
  Ratio r = safe_ratio(num, den);
  return {r.value, true, r.degenerate};
}

FeatureValue plain_value(double v) { return {v, true, false}; }
FeatureValue unavailable() { return {0.0, false, false}; }

bool has_full_trees(const AnnotatedDocument& doc) {
  if (doc.tier != Tier::full || doc.sentences.empty()) return false;
  for (const Sentence& s : doc.sentences)
    if (!s.tree) return false;
  return true;
}

}  // namespace

std::vector<FeatureValue> extract_shallow(const AnnotatedDocument& doc) {
  DocCounts c = doc_counts(doc);
  double T = static_cast<double>(c.T);
  double S = static_cast<double>(c.S);
  std::vector<FeatureValue> out;
  out.reserve(8);
  out.push_back(plain_value(T * S));
  out.push_back(plain_value(std::sqrt(T * S)));
  if (c.S >= 2 && c.T >= 1)
    out.push_back(plain_value(std::log(T) / std::log(S)));
  else
    out.push_back(unavailable());
  out.push_back(ratio_value(T, S));
  out.push_back(ratio_value(static_cast<double>(c.syllables), S));
  out.push_back(ratio_value(static_cast<double>(c.syllables), T));
  out.push_back(ratio_value(static_cast<double>(c.chars), S));
  out.push_back(ratio_value(static_cast<double>(c.chars), T));
  return out;
}

std::vector<FeatureValue> extract_formula(const AnnotatedDocument& doc) {
  DocCounts c = doc_counts(doc);
  std::vector<FeatureValue> out;
  out.reserve(6);
  if (c.T == 0 || c.S == 0) {
    out.assign(6, unavailable());
    return out;
  }
  double T = static_cast<double>(c.T);
  double S = static_cast<double>(c.S);
  double syl = static_cast<double>(c.syllables);
  double poly = static_cast<double>(c.poly);
  out.push_back(plain_value(formulas::flesch_kincaid(T, S, syl)));
  out.push_back(plain_value(formulas::new_ari(static_cast<double>(c.chars), T, S)));
  out.push_back(
      plain_value(formulas::coleman_liau(static_cast<double>(c.letters), T, S)));
  out.push_back(plain_value(formulas::smog(poly, S)));
  out.push_back(plain_value(formulas::gunning_fog(T, S, poly)));
  out.push_back(plain_value(
      formulas::linsear(static_cast<double>(c.easy), poly, S)));
  return out;
}

namespace {

struct PosClassCounts {
  double noun = 0, verb = 0, adj = 0, adv = 0, sconj = 0, cconj = 0;
  double content = 0, function = 0;
};

PosClassCounts pos_class_counts(const AnnotatedDocument& doc) {
  PosClassCounts c;
  for (const Sentence& sent : doc.sentences) {
    for (const Token& tok : sent.tokens) {
      if (!tok.is_word) continue;
      bool content = false;
      switch (tok.pos) {
        case UPos::NOUN:
        case UPos::PROPN:
          ++c.noun;
          content = true;
          break;
        case UPos::VERB:
        case UPos::AUX:
          ++c.verb;
          content = true;
          break;
        case UPos::ADJ:
          ++c.adj;
          content = true;
          break;
        case UPos::ADV:
          ++c.adv;
          content = true;
          break;
        case UPos::SCONJ:
          ++c.sconj;
          break;
        case UPos::CCONJ:
          ++c.cconj;
          break;
        default:
          break;
      }
      if (content)
        ++c.content;
      else
        ++c.function;
    }
  }
  return c;
}

}  // namespace

std::vector<FeatureValue> extract_pos(const AnnotatedDocument& doc) {
  DocCounts dc = doc_counts(doc);
  PosClassCounts c = pos_class_counts(doc);
  double S = static_cast<double>(dc.S);
  double T = static_cast<double>(dc.T);
  std::vector<FeatureValue> out;
  out.reserve(47);
  // per class: per-sentence, per-token, then ratios to the other classes in
  // catalog order
  struct ClassRow {
    double count;
    std::array<double, 5> others;
  };
  const std::array<ClassRow, 6> rows = {{
      {c.noun, {c.adj, c.verb, c.adv, c.sconj, c.cconj}},
      {c.verb, {c.adj, c.noun, c.adv, c.sconj, c.cconj}},
      {c.adj, {c.noun, c.verb, c.adv, c.sconj, c.cconj}},
      {c.adv, {c.adj, c.noun, c.verb, c.sconj, c.cconj}},
      {c.sconj, {c.adj, c.noun, c.verb, c.adv, c.cconj}},
      {c.cconj, {c.adj, c.noun, c.verb, c.adv, c.sconj}},
  }};
  for (const ClassRow& row : rows) {
    out.push_back(ratio_value(row.count, S));
    out.push_back(ratio_value(row.count, T));
    for (double other : row.others) out.push_back(ratio_value(row.count, other));
  }
  out.push_back(ratio_value(c.content, S));
  out.push_back(ratio_value(c.content, T));
  out.push_back(ratio_value(c.function, S));
  out.push_back(ratio_value(c.function, T));
  out.push_back(ratio_value(c.content, c.function));
  return out;
}

std::vector<FeatureValue> extract_ttr(const AnnotatedDocument& doc) {
  std::set<std::string> types;
  std::set<std::string> content_types;
  std::size_t tokens = 0;
  std::size_t content_tokens = 0;
  for (const Sentence& sent : doc.sentences) {
    for (const Token& tok : sent.tokens) {
      if (!tok.is_word) continue;
      std::string folded = fold_case(tok.surface);
      ++tokens;
      bool content = tok.pos == UPos::NOUN || tok.pos == UPos::PROPN ||
                     tok.pos == UPos::VERB || tok.pos == UPos::AUX ||
                     tok.pos == UPos::ADJ || tok.pos == UPos::ADV;
      if (content) {
        ++content_tokens;
        content_types.insert(folded);
      }
      types.insert(std::move(folded));
    }
  }
  double V = static_cast<double>(types.size());
  double T = static_cast<double>(tokens);
  std::vector<FeatureValue> out;
  out.reserve(5);
  out.push_back(ratio_value(V, T));
  out.push_back(ratio_value(V, std::sqrt(2.0 * T)));
  if (tokens >= 2)
    out.push_back(plain_value(std::log(V) / std::log(T)));
  else
    out.push_back(unavailable());
  if (tokens >= 2 && types.size() < tokens) {
    double lt = std::log(T);
    out.push_back(plain_value(lt * lt / (lt - std::log(V))));
  } else {
    out.push_back(unavailable());
  }
  out.push_back(ratio_value(static_cast<double>(content_types.size()),
                            static_cast<double>(content_tokens)));
  return out;
}

std::vector<FeatureValue> extract_variation(const AnnotatedDocument& doc) {
  // class index: 0 noun, 1 verb, 2 adj, 3 adv
  std::array<std::set<std::string>, 4> types;
  std::array<double, 4> tokens{};
  for (const Sentence& sent : doc.sentences) {
    for (const Token& tok : sent.tokens) {
      if (!tok.is_word) continue;
      int cls = -1;
      switch (tok.pos) {
        case UPos::NOUN:
        case UPos::PROPN: cls = 0; break;
        case UPos::VERB:
        case UPos::AUX: cls = 1; break;
        case UPos::ADJ: cls = 2; break;
        case UPos::ADV: cls = 3; break;
        default: break;
      }
      if (cls < 0) continue;
      types[cls].insert(tok.lemma);
      ++tokens[cls];
    }
  }
  std::vector<FeatureValue> out;
  out.reserve(12);
  for (int cls = 0; cls < 4; ++cls) {
    double ty = static_cast<double>(types[cls].size());
    double tk = tokens[cls];
    out.push_back(ratio_value(ty, tk));
    out.push_back(ratio_value(ty * ty, tk));
    out.push_back(ratio_value(ty, std::sqrt(2.0 * tk)));
  }
  return out;
}

std::vector<FeatureValue> extract_phrasal(const AnnotatedDocument& doc) {
  std::vector<FeatureValue> out;
  if (!has_full_trees(doc)) {
    out.assign(42, unavailable());
    return out;
  }
  PhraseCounts total;
  for (const Sentence& sent : doc.sentences) {
    PhraseCounts pc = count_phrases(sent.tree->root);
    total.noun_phrases += pc.noun_phrases;
    total.verb_phrases += pc.verb_phrases;
    total.sub_clauses += pc.sub_clauses;
    total.prep_phrases += pc.prep_phrases;
    total.adj_phrases += pc.adj_phrases;
    total.adv_phrases += pc.adv_phrases;
  }
  DocCounts dc = doc_counts(doc);
  double S = static_cast<double>(dc.S);
  double T = static_cast<double>(dc.T);
  const std::array<double, 6> counts = {
      static_cast<double>(total.noun_phrases),
      static_cast<double>(total.verb_phrases),
      static_cast<double>(total.sub_clauses),
      static_cast<double>(total.prep_phrases),
      static_cast<double>(total.adj_phrases),
      static_cast<double>(total.adv_phrases)};
  out.reserve(42);
  for (int self = 0; self < 6; ++self) {
    out.push_back(ratio_value(counts[self], S));
    out.push_back(ratio_value(counts[self], T));
    for (int other = 0; other < 6; ++other) {
      if (other == self) continue;
      out.push_back(ratio_value(counts[self], counts[other]));
    }
  }
  return out;
}

std::vector<FeatureValue> extract_tree(const AnnotatedDocument& doc) {
  std::vector<FeatureValue> out;
  if (!has_full_trees(doc)) {
    out.assign(4, unavailable());
    return out;
  }
  double height_sum = 0;
  double flat_sum = 0;
  for (const Sentence& sent : doc.sentences) {
    height_sum += tree_height(sent.tree->root);
    flat_sum += flattened_tree_height(sent.tree->root);
  }
  DocCounts dc = doc_counts(doc);
  out.reserve(4);
  out.push_back(ratio_value(height_sum, static_cast<double>(dc.S)));
  out.push_back(ratio_value(height_sum, static_cast<double>(dc.T)));
  out.push_back(ratio_value(flat_sum, static_cast<double>(dc.S)));
  out.push_back(ratio_value(flat_sum, static_cast<double>(dc.T)));
  return out;
}

std::vector<FeatureValue> extract_psycho(const AnnotatedDocument& doc,
                                         const NormSet* norms) {
  std::vector<FeatureValue> out;
  out.reserve(26);
  DocCounts dc = doc_counts(doc);
  double S = static_cast<double>(dc.S);
  double T = static_cast<double>(dc.T);
  FamilySlice slice = family_slice(Family::psycho);
  auto defs = registry();
  for (std::size_t i = slice.offset; i < slice.offset + slice.count; i += 2) {
    std::string_view tag = defs[i].requires_tag;  // "lexicon:<name>"
    std::string name(tag.substr(tag.find(':') + 1));
    const NormLexicon* lex = norms ? norms->find(name) : nullptr;
    if (!lex) {
      out.push_back(unavailable());
      out.push_back(unavailable());
      continue;
    }
    double sum = 0.0;
    for (const Sentence& sent : doc.sentences)
      for (const Token& tok : sent.tokens) {
        if (!tok.is_word) continue;
        if (auto v = lookup(*lex, tok)) sum += *v;
      }
    out.push_back(ratio_value(sum, S));
    out.push_back(ratio_value(sum, T));
  }
  return out;
}

std::vector<FeatureValue> extract_discourse(const AnnotatedDocument& doc) {
  EntityGrid grid = build_entity_grid(doc);
  DocCounts dc = doc_counts(doc);
  double S = static_cast<double>(dc.S);
  double T = static_cast<double>(dc.T);
  double mentions = static_cast<double>(grid.total_mentions);
  double unique_sum = 0;
  for (std::size_t s = 0; s < grid.sentence_count; ++s)
    unique_sum += static_cast<double>(grid.distinct_in_sentence(s));

  std::vector<FeatureValue> out;
  out.reserve(10);
  out.push_back(ratio_value(mentions, S));
  out.push_back(ratio_value(mentions, T));
  out.push_back(ratio_value(unique_sum, S));
  out.push_back(ratio_value(unique_sum, T));
  if (grid.sentence_count < 2) {
    for (int i = 0; i < 6; ++i) out.push_back(unavailable());
    return out;
  }
  CoherenceScores cs = coherence_scores(grid);
  out.push_back(plain_value(cs.accumulated / S));
  out.push_back(plain_value(cs.weighted / S));
  out.push_back(plain_value(cs.unique / S));
  out.push_back(plain_value(cs.accumulated_dist / S));
  out.push_back(plain_value(cs.weighted_dist / S));
  out.push_back(plain_value(cs.unique_dist / S));
  return out;
}

FeatureVector extract(const AnnotatedDocument& doc,
                      const ExtractResources& res) {
  if (doc.sentences.empty())
    throw DomainError("empty document: " + doc.id);
  FeatureVector fv;
  fv.doc_id = doc.id;
  fv.values.reserve(kFeatureCount);
  auto append = [&fv](std::vector<FeatureValue> part) {
    for (FeatureValue& v : part) fv.values.push_back(v);
  };
  append(extract_shallow(doc));
  append(extract_formula(doc));
  append(extract_pos(doc));
  append(extract_ttr(doc));
  append(extract_variation(doc));
  append(extract_phrasal(doc));
  append(extract_tree(doc));
  append(extract_psycho(doc, res.norms));
  append(extract_discourse(doc));
  if (fv.values.size() != kFeatureCount)
    throw InternalError("feature vector size mismatch");
  return fv;
}

}  // namespace lcx
