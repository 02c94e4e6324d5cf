// Acceptance gate: each criterion below prints exactly one line,
//   [PASS] criterion N: <title>   or   [FAIL] criterion N: <title>: <why>
// and the process exits 0/1 accordingly.  Run as: lcx_acceptance <1..10>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "lcx/annotate.hpp"
#include "lcx/conllu.hpp"
#include "lcx/corpus.hpp"
#include "lcx/errors.hpp"
#include "lcx/feature_io.hpp"
#include "lcx/features.hpp"
#include "lcx/norms.hpp"
#include "lcx/parallel.hpp"
#include "lcx/report.hpp"
#include "lcx/stats.hpp"
#include "lcx/syllables.hpp"
#include "lcx/textutil.hpp"
#include "lcx/tree.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Failure {
  std::string why;
};

#define ACHECK(cond, msg)                 \
  do {                                    \
    if (!(cond)) throw Failure{(msg)};    \
  } while (0)

std::string fixture(const std::string& name) {
  return std::string(LCX_FIXTURE_DIR) + "/" + name;
}

std::string scratch_dir(const std::string& name) {
  fs::path dir = fs::path(LCX_TEST_TMP) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::string num(double v) { return lcx::format_double(v); }

bool rel_close(double a, double b, double tol) {
  if (a == b) return true;
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol * scale;
}

bool abs_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

json load_json_file(const std::string& path) {
  return json::parse(lcx::read_text_file(path));
}

const lcx::NormSet& norms() {
  static lcx::NormSet set = lcx::load_norm_set(
      lcx::load_lexicon_profiles(fixture("norms/profiles.json")));
  return set;
}

// Builtin-tier feature extraction for one side of a pair corpus.
std::vector<lcx::FeatureVector> extract_side(
    const std::vector<lcx::PairRecord>& records, bool continuation) {
  lcx::ExtractResources res;
  res.norms = &norms();
  std::vector<lcx::FeatureVector> out(records.size());
  lcx::parallel_for(records.size(), 8, [&](std::size_t i) {
    const lcx::PairRecord& rec = records[i];
    lcx::AnnotatedDocument doc = lcx::annotate(
        rec.id, continuation ? rec.continuation : rec.prompt,
        lcx::Tier::builtin);
    out[i] = lcx::extract(doc, res);
  });
  return out;
}

const lcx::TestResult& find_cell(
    const std::vector<lcx::SignificanceTable>& tables, const std::string& id) {
  for (const lcx::SignificanceTable& table : tables)
    for (const lcx::SignificanceRow& row : table.rows)
      if (row.feature_id == id) {
        ACHECK(!row.per_model.empty(), "no model column for " + id);
        return row.per_model[0];
      }
  throw Failure{"feature not found in tables: " + id};
}

lcx::Token word(const std::string& surface, lcx::UPos pos) {
  lcx::Token t;
  t.surface = surface;
  t.lemma = lcx::fold_case(surface);
  t.pos = pos;
  t.is_word = true;
  t.syllables = 1;
  return t;
}

lcx::AnnotatedDocument doc_of(
    const std::vector<std::vector<lcx::Token>>& sentences) {
  lcx::AnnotatedDocument doc;
  doc.id = "case";
  doc.tier = lcx::Tier::builtin;
  for (const auto& toks : sentences) {
    lcx::Sentence s;
    s.tokens = toks;
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

// ------------------------------------------------------------------ 1

void criterion_registry() {
  auto defs = lcx::registry();
  ACHECK(defs.size() == 160,
         "registry has " + std::to_string(defs.size()) + " features, want 160");

  std::ifstream in(std::string(LCX_DATA_DIR) + "/feature_catalog.tsv");
  ACHECK(in.good(), "cannot open data/feature_catalog.tsv");
  std::string line;
  std::size_t row = 0;
  std::map<std::string, std::size_t> family_sizes;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (true) {
      std::size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(pos));
        break;
      }
      cols.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    ACHECK(cols.size() >= 4, "catalog row " + std::to_string(row + 1) +
                                 " has fewer than 4 columns");
    ACHECK(row < defs.size(), "catalog has more rows than the registry");
    const lcx::FeatureDef& def = defs[row];
    ACHECK(cols[0] == def.id, "catalog row " + std::to_string(row + 1) +
                                  ": id '" + cols[0] + "' vs registry '" +
                                  std::string(def.id) + "'");
    ACHECK(cols[1] == lcx::to_string(def.family),
           "family mismatch for " + cols[0]);
    ACHECK(cols[2] == def.label, "label mismatch for " + cols[0] + ": '" +
                                     cols[2] + "' vs '" +
                                     std::string(def.label) + "'");
    ACHECK(cols[3] == def.requires_tag, "requires mismatch for " + cols[0]);
    ++family_sizes[cols[1]];
    ++row;
  }
  ACHECK(row == 160, "catalog lists " + std::to_string(row) + " features");

  const std::pair<const char*, std::size_t> want[] = {
      {"shallow", 8}, {"formula", 6},   {"pos", 47},
      {"ttr", 5},     {"variation", 12}, {"phrasal", 42},
      {"tree", 4},    {"psycho", 26},   {"discourse", 10}};
  for (const auto& [name, n] : want)
    ACHECK(family_sizes[name] == n,
           std::string("family ") + name + " has " +
               std::to_string(family_sizes[name]) + " features, want " +
               std::to_string(n));
}

// ------------------------------------------------------------------ 2

void criterion_bonferroni() {
  double threshold = lcx::bonferroni_threshold(0.05, 3);
  ACHECK(rel_close(threshold, 0.05 / 3.0, 1e-12),
         "threshold " + num(threshold) + " != 0.05/3");
  std::string display = lcx::format_fixed(threshold, 4);
  ACHECK(display == "0.0167",
         "threshold displays as " + display + ", want 0.0167");
}

// ------------------------------------------------------------------ 3

void criterion_welch_oracle() {
  json oracle = load_json_file(fixture("welch_oracle.json"));
  const auto& cases = oracle.at("welch");
  ACHECK(cases.size() == 50,
         "oracle has " + std::to_string(cases.size()) + " cases, want 50");
  std::size_t idx = 0;
  for (const auto& c : cases) {
    std::vector<double> a = c.at("a").get<std::vector<double>>();
    std::vector<double> b = c.at("b").get<std::vector<double>>();
    lcx::WelchResult w = lcx::welch_t(lcx::summarize(a), lcx::summarize(b));
    double p = lcx::p_two_tailed(w);
    std::string tag = "welch case " + std::to_string(idx);
    ACHECK(rel_close(w.t, c.at("t").get<double>(), 1e-9),
           tag + ": t " + num(w.t) + " vs " + num(c.at("t").get<double>()));
    ACHECK(rel_close(w.df, c.at("df").get<double>(), 1e-9),
           tag + ": df " + num(w.df) + " vs " + num(c.at("df").get<double>()));
    ACHECK(abs_close(p, c.at("p").get<double>(), 1e-9),
           tag + ": p " + num(p) + " vs " + num(c.at("p").get<double>()));
    ++idx;
  }
  idx = 0;
  for (const auto& c : oracle.at("p_spot")) {
    double p = lcx::p_two_tailed(c.at("t").get<double>(),
                                 c.at("df").get<double>());
    ACHECK(abs_close(p, c.at("p").get<double>(), 1e-9),
           "p_spot case " + std::to_string(idx) + ": " + num(p) + " vs " +
               num(c.at("p").get<double>()));
    ++idx;
  }
}

// ------------------------------------------------------------------ 4

void criterion_formula_oracle() {
  json cases = load_json_file(fixture("formula_cases.json"));
  ACHECK(cases.size() == 10,
         std::to_string(cases.size()) + " formula cases, want 10");
  for (const auto& c : cases) {
    std::string name = c.at("formula").get<std::string>();
    auto get = [&](const char* key) { return c.at(key).get<double>(); };
    double got = 0.0;
    if (name == "flesch_kincaid")
      got = lcx::formulas::flesch_kincaid(get("T"), get("S"), get("Syl"));
    else if (name == "new_ari")
      got = lcx::formulas::new_ari(get("Ch"), get("T"), get("S"));
    else if (name == "coleman_liau")
      got = lcx::formulas::coleman_liau(get("Ch"), get("T"), get("S"));
    else if (name == "smog")
      got = lcx::formulas::smog(get("Poly"), get("S"));
    else if (name == "gunning_fog")
      got = lcx::formulas::gunning_fog(get("T"), get("S"), get("Poly"));
    else if (name == "linsear")
      got = lcx::formulas::linsear(get("easy"), get("hard"), get("S"));
    else
      throw Failure{"unknown formula case: " + name};
    double want = c.at("expected").get<double>();
    ACHECK(abs_close(got, want, 1e-6),
           name + ": " + num(got) + " vs expected " + num(want));
  }
}

// ------------------------------------------------------------------ 5

void criterion_identity_run() {
  lcx::LoadResult loaded = lcx::load_pairs(fixture("synthetic_pairs.jsonl"));
  ACHECK(loaded.corpus.records.size() == 100,
         "fixture corpus has " + std::to_string(loaded.corpus.records.size()) +
             " pairs, want 100");
  for (const lcx::PairRecord& rec : loaded.corpus.records)
    ACHECK(rec.prompt == rec.continuation,
           "fixture pair " + rec.id + " is not an identity pair");

  auto prompts = extract_side(loaded.corpus.records, false);
  auto conts = extract_side(loaded.corpus.records, true);
  lcx::LabelledVectors models;
  models.emplace_back("human", conts);
  auto tables = lcx::compare(prompts, models, 0.05, 3);
  ACHECK(tables.size() == 9, "expected nine family tables");

  std::size_t testable = 0, significant = 0;
  for (const lcx::SignificanceTable& table : tables)
    for (const lcx::SignificanceRow& row : table.rows)
      for (const lcx::TestResult& cell : row.per_model) {
        if (cell.significant) ++significant;
        if (!cell.testable) continue;
        ++testable;
        ACHECK(cell.p == 1.0, "identity run: " + row.feature_id +
                                  " has p = " + num(cell.p) + ", want 1");
      }
  ACHECK(significant == 0,
         std::to_string(significant) + " significant cells, want 0");
  ACHECK(testable >= 100, "only " + std::to_string(testable) +
                              " testable cells; identity run looks degenerate");
}

// ------------------------------------------------------------------ 6

void criterion_sensitivity_run() {
  lcx::LoadResult loaded =
      lcx::load_pairs(fixture("synthetic_pairs_injected.jsonl"));
  ACHECK(loaded.corpus.records.size() == 100, "injected corpus size != 100");

  json expected = load_json_file(fixture("sensitivity_expected.json"));
  // Injected continuations must differ from the prompts by the advertised
  // out-of-vocabulary words.
  std::string first_word =
      expected.at("injected_words").at(0).get<std::string>();
  ACHECK(loaded.corpus.records[0].continuation.find(first_word) !=
             std::string::npos,
         "injected continuation lacks the out-of-vocabulary words");

  auto prompts = extract_side(loaded.corpus.records, false);
  auto conts = extract_side(loaded.corpus.records, true);
  lcx::LabelledVectors models;
  models.emplace_back("human", conts);
  auto tables = lcx::compare(prompts, models, 0.05, 3);

  for (const auto& [id, stats] :
       expected.at("significant_features").items()) {
    const lcx::TestResult& cell = find_cell(tables, id);
    ACHECK(cell.testable, id + " is untestable");
    ACHECK(cell.significant,
           id + " not significant (p = " + num(cell.p) + ")");
    ACHECK(rel_close(cell.t, stats.at("t").get<double>(), 1e-9),
           id + ": t " + num(cell.t) + " vs oracle " +
               num(stats.at("t").get<double>()));
    ACHECK(rel_close(cell.df, stats.at("df").get<double>(), 1e-9),
           id + ": df " + num(cell.df) + " vs oracle " +
               num(stats.at("df").get<double>()));
    ACHECK(abs_close(cell.p, stats.at("p").get<double>(), 1e-9),
           id + ": p " + num(cell.p) + " vs oracle " +
               num(stats.at("p").get<double>()));
  }
  for (const auto& id_json : expected.at("identical_features")) {
    std::string id = id_json.get<std::string>();
    const lcx::TestResult& cell = find_cell(tables, id);
    ACHECK(cell.testable, id + " is untestable");
    ACHECK(!cell.significant, id + " flipped significant unexpectedly");
    ACHECK(cell.p == 1.0,
           id + " has p = " + num(cell.p) + ", want exactly 1");
  }
}

// ------------------------------------------------------------------ 7

struct DocCountsLite {
  double T = 0, S = 0, V = 0;
};

DocCountsLite count_doc(const lcx::AnnotatedDocument& doc) {
  DocCountsLite c;
  std::set<std::string> types;
  c.S = static_cast<double>(doc.sentences.size());
  for (const lcx::Sentence& s : doc.sentences)
    for (const lcx::Token& t : s.tokens) {
      if (!t.is_word) continue;
      ++c.T;
      types.insert(lcx::fold_case(t.surface));
    }
  c.V = static_cast<double>(types.size());
  return c;
}

lcx::AnnotatedDocument duplicate_doc(const lcx::AnnotatedDocument& doc,
                                     int k) {
  lcx::AnnotatedDocument out = doc;
  out.sentences.clear();
  for (int i = 0; i < k; ++i)
    for (const lcx::Sentence& s : doc.sentences) out.sentences.push_back(s);
  return out;
}

bool sentence_has_entity(const lcx::Sentence& s) {
  for (const lcx::Token& t : s.tokens)
    if (t.is_word && (t.pos == lcx::UPos::NOUN || t.pos == lcx::UPos::PROPN ||
                      t.pos == lcx::UPos::PRON))
      return true;
  return false;
}

void check_duplication(const lcx::AnnotatedDocument& doc,
                       const lcx::ExtractResources& res, int k) {
  lcx::FeatureVector base = lcx::extract(doc, res);
  lcx::FeatureVector dup = lcx::extract(duplicate_doc(doc, k), res);
  DocCountsLite c = count_doc(doc);
  double dk = static_cast<double>(k);

  // Closed-form predictions for the scale-sensitive features.
  std::map<std::string, double> predicted;
  predicted["total_tokens_x_sentences"] = dk * dk * c.T * c.S;
  predicted["sqrt_tokens_x_sentences"] = dk * std::sqrt(c.T * c.S);
  predicted["log_tokens_over_log_sentences"] =
      std::log(dk * c.T) / std::log(dk * c.S);
  int sttr = lcx::feature_index("simple_ttr");
  predicted["simple_ttr"] = base.values[sttr].value / dk;
  predicted["corrected_ttr"] =
      base.values[sttr + 1].value / std::sqrt(dk);
  predicted["bilog_ttr"] = std::log(c.V) / std::log(dk * c.T);
  {
    double lt = std::log(dk * c.T);
    predicted["uber_index"] = lt * lt / (lt - std::log(c.V));
  }
  predicted["lexical_diversity"] =
      base.values[lcx::feature_index("lexical_diversity")].value / dk;
  const char* variation_ids[] = {
      "simple_noun_variation", "squared_noun_variation",
      "corrected_noun_variation", "simple_verb_variation",
      "squared_verb_variation", "corrected_verb_variation",
      "simple_adj_variation", "squared_adj_variation",
      "corrected_adj_variation", "simple_adv_variation",
      "squared_adv_variation", "corrected_adv_variation"};
  for (const char* vid : variation_ids) {
    int i = lcx::feature_index(vid);
    double scale = std::string_view(vid).find("corrected_") == 0
                       ? std::sqrt(dk)
                       : dk;
    predicted[vid] = base.values[i].value / scale;
  }
  std::set<std::string> coherence_ids = {
      "local_coherence_pa",      "local_coherence_pw",
      "local_coherence_pu",      "local_coherence_dist_pa",
      "local_coherence_dist_pw", "local_coherence_dist_pu"};

  bool has_entities = false;
  for (const lcx::Sentence& s : doc.sentences)
    if (sentence_has_entity(s)) has_entities = true;

  auto defs = lcx::registry();
  for (std::size_t i = 0; i < lcx::kFeatureCount; ++i) {
    std::string id(defs[i].id);
    std::string tag =
        doc.id + " k=" + std::to_string(k) + " feature " + id;
    const lcx::FeatureValue& b = base.values[i];
    const lcx::FeatureValue& d = dup.values[i];
    auto pit = predicted.find(id);
    if (pit != predicted.end()) {
      ACHECK(d.available, tag + ": duplicated value unavailable");
      ACHECK(rel_close(d.value, pit->second, 1e-9),
             tag + ": got " + num(d.value) + ", predicted " +
                 num(pit->second));
      continue;
    }
    if (coherence_ids.count(id)) {
      ACHECK(b.available && d.available, tag + ": coherence unavailable");
      if (has_entities)
        ACHECK(d.value > b.value,
               tag + ": expected strict increase, got " + num(b.value) +
                   " -> " + num(d.value));
      else
        ACHECK(d.value == b.value, tag + ": expected no change");
      continue;
    }
    // Everything else is invariant under duplication.
    ACHECK(b.available == d.available, tag + ": availability flipped");
    if (b.available)
      ACHECK(rel_close(b.value, d.value, 1e-9),
             tag + ": " + num(b.value) + " -> " + num(d.value));
  }
}

void criterion_duplication() {
  lcx::ExtractResources res;
  res.norms = &norms();

  std::vector<lcx::AnnotatedDocument> docs;
  lcx::LoadResult loaded = lcx::load_pairs(fixture("synthetic_pairs.jsonl"));
  for (std::size_t i = 0; i < 16; ++i) {
    const lcx::PairRecord& rec = loaded.corpus.records[i];
    docs.push_back(
        lcx::annotate(rec.id, rec.prompt, lcx::Tier::builtin));
  }
  auto parsed = lcx::read_conllu(fixture("full/sample.conllu"),
                                 lcx::builtin_syllable_counter());
  auto trees = lcx::read_tree_file(fixture("full/sample.trees"));
  lcx::AnnotationResources ares;
  ares.parsed = &parsed;
  ares.trees = &trees;
  for (const char* id : {"full_a", "full_b", "full_c", "full_d"})
    docs.push_back(lcx::annotate(id, "", lcx::Tier::full, ares));
  ACHECK(docs.size() == 20, "duplication suite needs 20 documents");

  for (const lcx::AnnotatedDocument& doc : docs)
    for (int k : {2, 3}) check_duplication(doc, res, k);
}

// ------------------------------------------------------------------ 8

void criterion_correlation_shape() {
  // Pearson oracle spot checks first.
  json oracle = load_json_file(fixture("welch_oracle.json"));
  for (const auto& c : oracle.at("pearson")) {
    double r = lcx::pearson(c.at("x").get<std::vector<double>>(),
                            c.at("y").get<std::vector<double>>());
    ACHECK(abs_close(r, c.at("r").get<double>(), 1e-9),
           "pearson oracle: " + num(r) + " vs " +
               num(c.at("r").get<double>()));
  }

  lcx::LoadResult loaded = lcx::load_pairs(fixture("synthetic_pairs.jsonl"));
  auto human = extract_side(loaded.corpus.records, true);

  // Identical input: every ranked correlation is exactly 1.
  lcx::LabelledVectors self;
  self.emplace_back("human", human);
  lcx::CorrelationTable identity = lcx::correlate(human, self, 10);
  ACHECK(identity.per_model.size() == 1, "expected one model block");
  const lcx::ModelCorrelation& mc = identity.per_model[0];
  ACHECK(mc.rows.size() == 10, "identity run lists " +
                                   std::to_string(mc.rows.size()) +
                                   " rows, want exactly 10");
  for (const lcx::CorrelationRow& row : mc.rows)
    ACHECK(row.r == 1.0,
           "identity r for " + row.feature_id + " is " + num(row.r));
  ACHECK(!identity.weak_note, "identity run must not print the weak note");

  // A perturbed model side still yields 10 rows in descending order.
  lcx::LoadResult injected =
      lcx::load_pairs(fixture("synthetic_pairs_injected.jsonl"));
  auto model_side = extract_side(injected.corpus.records, true);
  lcx::LabelledVectors perturbed;
  perturbed.emplace_back("injected", model_side);
  lcx::CorrelationTable shape = lcx::correlate(human, perturbed, 10);
  const lcx::ModelCorrelation& pm = shape.per_model[0];
  ACHECK(pm.rows.size() == 10, "perturbed run lists " +
                                   std::to_string(pm.rows.size()) + " rows");
  for (std::size_t i = 1; i < pm.rows.size(); ++i)
    ACHECK(pm.rows[i - 1].r >= pm.rows[i].r,
           "rows not in descending r at rank " + std::to_string(i + 1));

  // Weak correlations across the board raise the caveat note.
  auto grid = [](double (*f)(std::size_t), const char* prefix) {
    std::vector<lcx::FeatureVector> out;
    for (std::size_t d = 0; d < 5; ++d) {
      lcx::FeatureVector fv;
      fv.doc_id = std::string(prefix) + std::to_string(d);
      fv.values.resize(lcx::kFeatureCount);
      for (std::size_t i = 0; i < lcx::kFeatureCount; ++i)
        fv.values[i] = {f(d), true, false};
      out.push_back(std::move(fv));
    }
    return out;
  };
  auto x_of = [](std::size_t d) { return static_cast<double>(d + 1); };
  auto y_of = [](std::size_t d) {
    const double pattern[] = {5, 3, 1, 2, 4};  // r = -0.3 against 1..5
    return pattern[d];
  };
  auto hx = grid(x_of, "w");
  auto hy = grid(y_of, "w");
  lcx::LabelledVectors weak_models;
  weak_models.emplace_back("weak", hy);
  lcx::CorrelationTable weak = lcx::correlate(hx, weak_models, 10);
  ACHECK(weak.weak_note, "weak-correlation run did not set the note");
  std::string md = lcx::render(weak, lcx::RenderFormat::markdown);
  ACHECK(md.find("All correlations fall below 0.50") != std::string::npos,
         "weak note missing from the markdown artifact");
}

// ------------------------------------------------------------------ 9

void criterion_discourse_cases() {
  int first = lcx::feature_index("local_coherence_pa");
  int dist_pu = lcx::feature_index("local_coherence_dist_pu");
  int pu = lcx::feature_index("local_coherence_pu");

  // Two sentences sharing one entity in plain (other/other) roles: the
  // three transition scores and their distance-weighted forms are all 1/2.
  auto shared = lcx::extract_discourse(doc_of({
      {word("The", lcx::UPos::DET), word("dog", lcx::UPos::NOUN),
       word("ran", lcx::UPos::VERB)},
      {word("A", lcx::UPos::DET), word("dog", lcx::UPos::NOUN),
       word("sat", lcx::UPos::VERB)},
  }));
  int base = lcx::family_slice(lcx::Family::discourse).offset;
  for (int i = first; i <= dist_pu; ++i) {
    ACHECK(shared[i - base].available, "shared-pair coherence unavailable");
    ACHECK(shared[i - base].value == 0.5,
           "shared pair: " + std::string(lcx::registry()[i].id) + " = " +
               num(shared[i - base].value) + ", want 1/2");
  }

  // Disjoint sentences: all six scores are exactly zero.
  auto disjoint = lcx::extract_discourse(doc_of({
      {word("dog", lcx::UPos::NOUN)},
      {word("cat", lcx::UPos::NOUN)},
  }));
  for (int i = first; i <= dist_pu; ++i)
    ACHECK(disjoint[i - base].value == 0.0,
           "disjoint pair: " + std::string(lcx::registry()[i].id) + " = " +
               num(disjoint[i - base].value) + ", want 0");

  // Only sentences 1 and 3 share an entity: the unique transition score is
  // 1/3 and its distance-weighted form is (1/2)/3 = 1/6.
  auto spread = lcx::extract_discourse(doc_of({
      {word("dog", lcx::UPos::NOUN)},
      {word("cat", lcx::UPos::NOUN)},
      {word("dog", lcx::UPos::NOUN)},
  }));
  ACHECK(spread[pu - base].value == 1.0 / 3.0,
         "distance-3 case: unique score " + num(spread[pu - base].value) +
             ", want 1/3");
  ACHECK(spread[dist_pu - base].value == 1.0 / 6.0,
         "distance-3 case: distance-weighted unique score " +
             num(spread[dist_pu - base].value) + ", want 1/6");
}

// ------------------------------------------------------------------ 10

int run_cli(const std::string& args) {
  std::string cmd = std::string(LCX_CLI_PATH) + " " + args + " >/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void run_pipeline(const std::string& dir) {
  ACHECK(run_cli("ingest --pairs " + fixture("synthetic_pairs.jsonl") +
                 " --out " + dir + "/ingest") == 0,
         "ingest failed in " + dir);
  ACHECK(run_cli("extract --pairs " + dir +
                 "/ingest/pairs_filtered.jsonl --out " + dir +
                 "/features --tier builtin --format both --workers 8 "
                 "--lexicons " +
                 fixture("norms/profiles.json")) == 0,
         "extract failed in " + dir);
  ACHECK(run_cli("compare --prompts " + dir +
                 "/features/features_human_prompt.csv --continuations "
                 "human=" +
                 dir +
                 "/features/features_human_continuation.csv --out " + dir +
                 "/compare --alpha 0.05 --groups 3 --format markdown") == 0,
         "compare failed in " + dir);
  ACHECK(run_cli("correlate --human " + dir +
                 "/features/features_human_continuation.csv --model human=" +
                 dir +
                 "/features/features_human_continuation.csv --out " + dir +
                 "/correlate --top 10 --format markdown") == 0,
         "correlate failed in " + dir);
}

void criterion_determinism() {
  std::string dir1 = scratch_dir("acceptance_run1");
  std::string dir2 = scratch_dir("acceptance_run2");
  run_pipeline(dir1);
  run_pipeline(dir2);

  auto collect = [](const std::string& root) {
    std::map<std::string, fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root))
      if (entry.is_regular_file())
        files[fs::relative(entry.path(), root).string()] = entry.path();
    return files;
  };
  auto files1 = collect(dir1);
  auto files2 = collect(dir2);
  ACHECK(!files1.empty(), "first pipeline run produced no files");
  ACHECK(files1.size() == files2.size(),
         "runs produced different file counts: " +
             std::to_string(files1.size()) + " vs " +
             std::to_string(files2.size()));
  for (const auto& [rel, path1] : files1) {
    auto it = files2.find(rel);
    ACHECK(it != files2.end(), "second run is missing " + rel);
    std::string a = lcx::read_text_file(path1.string());
    std::string b = lcx::read_text_file(it->second.string());
    ACHECK(a == b, "outputs differ between runs: " + rel);
  }
  ACHECK(files1.count("compare/significance_shallow.json") == 1,
         "pipeline did not produce the significance tables");
  ACHECK(files1.count("correlate/correlation.json") == 1,
         "pipeline did not produce the correlation table");
}

struct Criterion {
  int number;
  const char* title;
  void (*run)();
};

const Criterion kCriteria[] = {
    {1, "feature registry matches the golden catalog", criterion_registry},
    {2, "Bonferroni threshold 0.05/3 displays as 0.0167",
     criterion_bonferroni},
    {3, "Welch t/df/p match the 50-case reference oracle",
     criterion_welch_oracle},
    {4, "readability formulas reproduce 10 fixed cases",
     criterion_formula_oracle},
    {5, "identity corpus yields p = 1 and no significant cells",
     criterion_identity_run},
    {6, "syllable injection flips exactly the predicted features",
     criterion_sensitivity_run},
    {7, "sentence duplication preserves averages and scales the rest",
     criterion_duplication},
    {8, "correlation table keeps shape, identity r = 1, weak note",
     criterion_correlation_shape},
    {9, "entity-grid hand cases reproduce exactly",
     criterion_discourse_cases},
    {10, "two 8-worker pipeline runs are byte-identical",
     criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <criterion 1..10>\n", argv[0]);
    return 2;
  }
  int n = std::atoi(argv[1]);
  const Criterion* chosen = nullptr;
  for (const Criterion& c : kCriteria)
    if (c.number == n) chosen = &c;
  if (!chosen) {
    std::fprintf(stderr, "no such criterion: %s\n", argv[1]);
    return 2;
  }
  try {
    chosen->run();
    std::printf("[PASS] criterion %d: %s\n", chosen->number, chosen->title);
    return 0;
  } catch (const Failure& f) {
    std::printf("[FAIL] criterion %d: %s: %s\n", chosen->number, chosen->title,
                f.why.c_str());
    return 1;
  } catch (const std::exception& e) {
    std::printf("[FAIL] criterion %d: %s: unexpected error: %s\n",
                chosen->number, chosen->title, e.what());
    return 1;
  }
}
