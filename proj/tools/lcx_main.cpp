// lcx: linguistic complexity toolkit for prompt/continuation corpora.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
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
#include "lcx/tree.hpp"
#include "lcx/version.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? std::string("model") : out;
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw lcx::IoError("cannot create output directory: " + dir);
}

// writes and records the file in the manifest
void emit(const std::string& out_dir, const std::string& name,
          std::string_view content, lcx::RunManifest& manifest) {
  lcx::write_text_file((fs::path(out_dir) / name).string(), content);
  manifest.outputs.push_back({name, lcx::fnv1a64_hex(content)});
}

void finish_manifest(const std::string& out_dir, const std::string& name,
                     lcx::RunManifest& manifest) {
  manifest.tool_version = lcx::kVersion;
  lcx::write_text_file((fs::path(out_dir) / name).string(),
                       lcx::manifest_json(manifest));
}

std::pair<std::string, std::string> split_model_arg(const std::string& arg) {
  std::size_t eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
    throw lcx::ConfigError("expected NAME=FILE, got '" + arg + "'");
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

void print_issues(const std::vector<lcx::LineIssue>& issues,
                  const std::string& path) {
  for (const auto& issue : issues)
    std::fprintf(stderr, "warning: %s line %zu: %s\n", path.c_str(),
                 issue.line, issue.message.c_str());
}

// ----------------------------------------------------------------- ingest

struct IngestOpts {
  std::string pairs, out_dir;
  std::size_t min_prompt = 30, min_cont = 150, max_cont = 300;
};

void run_ingest(const IngestOpts& o) {
  ensure_out_dir(o.out_dir);
  lcx::LoadResult loaded = lcx::load_pairs(o.pairs);
  print_issues(loaded.issues, o.pairs);
  lcx::FilterSettings settings{o.min_prompt, o.min_cont, o.max_cont};
  lcx::FilterResult filtered = lcx::filter_pairs(loaded.corpus, settings);

  lcx::RunManifest manifest;
  manifest.command = "ingest";
  std::string pairs_out = (fs::path(o.out_dir) / "pairs_filtered.jsonl").string();
  lcx::write_pairs(filtered.corpus, pairs_out);
  manifest.outputs.push_back(
      {"pairs_filtered.jsonl",
       lcx::fnv1a64_hex(lcx::read_text_file(pairs_out))});
  emit(o.out_dir, "filter_report.json",
       lcx::filter_report_json(filtered.report, settings, loaded.issues),
       manifest);
  manifest.corpus_sizes.emplace_back("input", filtered.report.input);
  manifest.corpus_sizes.emplace_back("kept", filtered.report.kept);
  finish_manifest(o.out_dir, "ingest_manifest.json", manifest);
  std::printf("kept %zu of %zu records -> %s\n", filtered.report.kept,
              filtered.report.input, pairs_out.c_str());
}

// ------------------------------------------------------- annotation loading

struct TierInputs {
  lcx::Tier tier = lcx::Tier::builtin;
  std::map<std::string, lcx::AnnotatedDocument> parsed;
  std::map<std::string, std::vector<lcx::ParseTree>> trees;

  lcx::AnnotationResources resources() const {
    lcx::AnnotationResources res;
    if (tier == lcx::Tier::full) {
      res.parsed = &parsed;
      res.trees = &trees;
    }
    return res;
  }
};

TierInputs load_tier_inputs(const std::string& tier_name,
                            const std::string& conllu_path,
                            const std::string& trees_path) {
  TierInputs in;
  auto tier = lcx::tier_from_string(tier_name);
  if (!tier)
    throw lcx::ConfigError("unknown tier '" + tier_name +
                           "' (want builtin or full)");
  in.tier = *tier;
  if (in.tier == lcx::Tier::full) {
    if (conllu_path.empty() || trees_path.empty())
      throw lcx::ConfigError("tier full needs both --conllu and --trees");
    in.parsed = lcx::read_conllu(conllu_path, lcx::builtin_syllable_counter());
    in.trees = lcx::read_tree_file(trees_path);
  }
  return in;
}

// record-side annotation key at the full tier
std::string side_key(const std::string& id, const char* side) {
  return id + "/" + side;
}

// --------------------------------------------------------------- annotate

ordered_json token_json(const lcx::Token& t) {
  ordered_json j;
  j["surface"] = t.surface;
  j["lemma"] = t.lemma;
  j["pos"] = std::string(lcx::to_string(t.pos));
  j["syllables"] = t.syllables;
  j["is_word"] = t.is_word;
  if (t.head) j["head"] = *t.head;
  if (t.dep_label) j["dep"] = *t.dep_label;
  return j;
}

ordered_json doc_json(const lcx::AnnotatedDocument& doc) {
  ordered_json j;
  j["id"] = doc.id;
  j["tier"] = std::string(lcx::to_string(doc.tier));
  ordered_json sentences = ordered_json::array();
  for (const lcx::Sentence& s : doc.sentences) {
    ordered_json sj;
    ordered_json toks = ordered_json::array();
    for (const lcx::Token& t : s.tokens) toks.push_back(token_json(t));
    sj["tokens"] = std::move(toks);
    if (s.tree) sj["tree"] = lcx::render_tree(*s.tree);
    sentences.push_back(std::move(sj));
  }
  j["sentences"] = std::move(sentences);
  return j;
}

struct AnnotateOpts {
  std::string pairs, out_dir, tier = "builtin", conllu, trees, side = "both";
};

void run_annotate(const AnnotateOpts& o) {
  ensure_out_dir(o.out_dir);
  if (o.side != "prompt" && o.side != "continuation" && o.side != "both")
    throw lcx::ConfigError("--side must be prompt, continuation or both");
  lcx::LoadResult loaded = lcx::load_pairs(o.pairs);
  print_issues(loaded.issues, o.pairs);
  TierInputs tin = load_tier_inputs(o.tier, o.conllu, o.trees);
  lcx::AnnotationResources res = tin.resources();

  lcx::RunManifest manifest;
  manifest.command = "annotate";
  auto annotate_side = [&](const char* side) {
    ordered_json docs = ordered_json::array();
    for (const lcx::PairRecord& rec : loaded.corpus.records) {
      const std::string& text =
          std::string_view(side) == "prompt" ? rec.prompt : rec.continuation;
      std::string key = tin.tier == lcx::Tier::full
                            ? side_key(rec.id, side)
                            : rec.id;
      lcx::AnnotatedDocument doc = lcx::annotate(key, text, tin.tier, res);
      doc.id = rec.id;
      docs.push_back(doc_json(doc));
    }
    emit(o.out_dir, std::string("annotated_") + side + ".json",
         docs.dump(1) + "\n", manifest);
  };
  if (o.side == "prompt" || o.side == "both") annotate_side("prompt");
  if (o.side == "continuation" || o.side == "both")
    annotate_side("continuation");
  manifest.corpus_sizes.emplace_back("records", loaded.corpus.records.size());
  finish_manifest(o.out_dir, "annotate_manifest.json", manifest);
  std::printf("annotated %zu records -> %s\n", loaded.corpus.records.size(),
              o.out_dir.c_str());
}

// ----------------------------------------------------------------- extract

struct ExtractOpts {
  std::string pairs, out_dir, tier = "builtin", conllu, trees, lexicons;
  std::string format = "csv";
  std::size_t workers = 0;
};

void run_extract(const ExtractOpts& o) {
  ensure_out_dir(o.out_dir);
  if (o.format != "csv" && o.format != "json" && o.format != "both")
    throw lcx::ConfigError("--format must be csv, json or both");
  lcx::LoadResult loaded = lcx::load_pairs(o.pairs);
  print_issues(loaded.issues, o.pairs);
  TierInputs tin = load_tier_inputs(o.tier, o.conllu, o.trees);
  lcx::AnnotationResources res = tin.resources();

  lcx::NormSet norms;
  lcx::ExtractResources xres;
  if (!o.lexicons.empty()) {
    norms = lcx::load_norm_set(lcx::load_lexicon_profiles(o.lexicons));
    xres.norms = &norms;
  } else {
    std::fprintf(stderr,
                 "warning: no --lexicons profile given; psycholinguistic "
                 "features will be unavailable\n");
  }

  std::size_t workers =
      o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  const auto& records = loaded.corpus.records;
  std::vector<lcx::FeatureVector> prompt_vecs(records.size());
  std::vector<lcx::FeatureVector> cont_vecs(records.size());
  lcx::parallel_for(records.size(), workers, [&](std::size_t i) {
    const lcx::PairRecord& rec = records[i];
    std::string pkey = tin.tier == lcx::Tier::full ? side_key(rec.id, "prompt")
                                                   : rec.id;
    std::string ckey = tin.tier == lcx::Tier::full
                           ? side_key(rec.id, "continuation")
                           : rec.id;
    lcx::AnnotatedDocument pdoc =
        lcx::annotate(pkey, rec.prompt, tin.tier, res);
    pdoc.id = rec.id;
    lcx::AnnotatedDocument cdoc =
        lcx::annotate(ckey, rec.continuation, tin.tier, res);
    cdoc.id = rec.id;
    prompt_vecs[i] = lcx::extract(pdoc, xres);
    cont_vecs[i] = lcx::extract(cdoc, xres);
  });

  // group by model label, preserving record order
  std::vector<std::string> model_order;
  std::map<std::string, std::vector<std::size_t>> by_model;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto [it, inserted] = by_model.emplace(records[i].model,
                                           std::vector<std::size_t>{});
    if (inserted) model_order.push_back(records[i].model);
    it->second.push_back(i);
  }

  lcx::RunManifest manifest;
  manifest.command = "extract";
  for (const std::string& model : model_order) {
    std::vector<lcx::FeatureVector> p, c;
    for (std::size_t i : by_model[model]) {
      p.push_back(prompt_vecs[i]);
      c.push_back(cont_vecs[i]);
    }
    std::string base = sanitize_label(model);
    if (o.format == "csv" || o.format == "both") {
      emit(o.out_dir, "features_" + base + "_prompt.csv",
           lcx::features_to_csv(p), manifest);
      emit(o.out_dir, "features_" + base + "_continuation.csv",
           lcx::features_to_csv(c), manifest);
    }
    if (o.format == "json" || o.format == "both") {
      emit(o.out_dir, "features_" + base + "_prompt.json",
           lcx::features_to_json(p), manifest);
      emit(o.out_dir, "features_" + base + "_continuation.json",
           lcx::features_to_json(c), manifest);
    }
    manifest.corpus_sizes.emplace_back(model, by_model[model].size());
  }
  finish_manifest(o.out_dir, "extract_manifest.json", manifest);
  std::printf("extracted %zu records (%zu model groups) -> %s\n",
              records.size(), model_order.size(), o.out_dir.c_str());
}

// ----------------------------------------------------------------- compare

struct CompareOpts {
  std::string prompts, out_dir, format = "markdown";
  std::vector<std::string> model_args;
  double alpha = 0.05;
  std::size_t groups = 3;
};

void run_compare(const CompareOpts& o) {
  ensure_out_dir(o.out_dir);
  auto rf = lcx::render_format_from_string(o.format);
  if (!rf) throw lcx::ConfigError("--format must be markdown, csv or json");

  std::vector<lcx::FeatureVector> prompts = lcx::read_feature_file(o.prompts);
  lcx::LabelledVectors models;
  for (const std::string& arg : o.model_args) {
    auto [name, path] = split_model_arg(arg);
    models.emplace_back(name, lcx::read_feature_file(path));
  }

  std::vector<lcx::SignificanceTable> tables =
      lcx::compare(prompts, models, o.alpha, o.groups);

  lcx::RunManifest manifest;
  manifest.command = "compare";
  manifest.alpha = o.alpha;
  manifest.groups = o.groups;
  manifest.alpha_used = tables.front().alpha_used;
  manifest.corpus_sizes.emplace_back("prompts", prompts.size());
  for (const auto& [name, vecs] : models)
    manifest.corpus_sizes.emplace_back(name, vecs.size());

  for (const lcx::SignificanceTable& table : tables) {
    std::string base = "significance_" + std::string(to_string(table.family));
    emit(o.out_dir, base + ".json", lcx::render(table, lcx::RenderFormat::json),
         manifest);
    if (*rf == lcx::RenderFormat::markdown)
      emit(o.out_dir, base + ".md",
           lcx::render(table, lcx::RenderFormat::markdown), manifest);
    else if (*rf == lcx::RenderFormat::csv)
      emit(o.out_dir, base + ".csv",
           lcx::render(table, lcx::RenderFormat::csv), manifest);
  }
  finish_manifest(o.out_dir, "compare_manifest.json", manifest);

  std::size_t significant = 0, testable = 0;
  for (const auto& table : tables)
    for (const auto& row : table.rows)
      for (const auto& cell : row.per_model) {
        if (cell.testable) ++testable;
        if (cell.significant) ++significant;
      }
  std::printf(
      "compared %zu features x %zu models at alpha_used=%s: %zu of %zu "
      "testable cells significant -> %s\n",
      lcx::kFeatureCount, models.size(),
      lcx::format_fixed(manifest.alpha_used, 6).c_str(), significant, testable,
      o.out_dir.c_str());
}

// --------------------------------------------------------------- correlate

struct CorrelateOpts {
  std::string human, out_dir, format = "markdown";
  std::vector<std::string> model_args;
  std::size_t top_k = 10;
};

void run_correlate(const CorrelateOpts& o) {
  ensure_out_dir(o.out_dir);
  auto rf = lcx::render_format_from_string(o.format);
  if (!rf) throw lcx::ConfigError("--format must be markdown, csv or json");

  std::vector<lcx::FeatureVector> human = lcx::read_feature_file(o.human);
  lcx::LabelledVectors models;
  for (const std::string& arg : o.model_args) {
    auto [name, path] = split_model_arg(arg);
    models.emplace_back(name, lcx::read_feature_file(path));
  }

  lcx::CorrelationTable table = lcx::correlate(human, models, o.top_k);

  lcx::RunManifest manifest;
  manifest.command = "correlate";
  manifest.corpus_sizes.emplace_back("human", human.size());
  for (const auto& [name, vecs] : models)
    manifest.corpus_sizes.emplace_back(name, vecs.size());

  emit(o.out_dir, "correlation.json",
       lcx::render(table, lcx::RenderFormat::json), manifest);
  if (*rf == lcx::RenderFormat::markdown)
    emit(o.out_dir, "correlation.md",
         lcx::render(table, lcx::RenderFormat::markdown), manifest);
  else if (*rf == lcx::RenderFormat::csv)
    emit(o.out_dir, "correlation.csv",
         lcx::render(table, lcx::RenderFormat::csv), manifest);
  finish_manifest(o.out_dir, "correlate_manifest.json", manifest);

  for (const auto& mc : table.per_model)
    std::printf("%s: %zu ranked features, max r = %s\n", mc.model.c_str(),
                mc.rows.size(),
                mc.defined_count ? lcx::format_p(mc.max_r).c_str() : "n/a");
  if (table.weak_note)
    std::printf(
        "note: all correlations fall below 0.50; the continuations are at "
        "best weakly correlated with the human ones on these features.\n");
}

// ------------------------------------------------------------------ report

struct ReportOpts {
  std::string tables_dir, out_dir, format = "markdown";
};

void run_report(const ReportOpts& o) {
  ensure_out_dir(o.out_dir);
  auto rf = lcx::render_format_from_string(o.format);
  if (!rf) throw lcx::ConfigError("--format must be markdown, csv or json");
  std::string ext = *rf == lcx::RenderFormat::markdown
                        ? ".md"
                        : (*rf == lcx::RenderFormat::csv ? ".csv" : ".json");

  lcx::RunManifest manifest;
  manifest.command = "report";
  std::size_t rendered = 0;
  std::vector<fs::path> entries;
  for (const auto& entry : fs::directory_iterator(o.tables_dir))
    entries.push_back(entry.path());
  std::sort(entries.begin(), entries.end());
  for (const fs::path& path : entries) {
    std::string name = path.filename().string();
    if (name.rfind("significance_", 0) == 0 &&
        name.size() > 5 && name.substr(name.size() - 5) == ".json") {
      auto table = lcx::parse_significance_json(lcx::read_text_file(path.string()));
      emit(o.out_dir, name.substr(0, name.size() - 5) + ext,
           lcx::render(table, *rf), manifest);
      ++rendered;
    } else if (name == "correlation.json") {
      auto table = lcx::parse_correlation_json(lcx::read_text_file(path.string()));
      emit(o.out_dir, "correlation" + ext, lcx::render(table, *rf), manifest);
      ++rendered;
    }
  }
  if (rendered == 0)
    throw lcx::IoError("no stored table json found under " + o.tables_dir);
  finish_manifest(o.out_dir, "report_manifest.json", manifest);
  std::printf("re-rendered %zu tables -> %s\n", rendered, o.out_dir.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lcx: linguistic complexity analysis for prompt/continuation "
               "corpora"};
  app.set_version_flag("--version", lcx::kVersion);
  app.set_config("--config", "",
                 "read options from a key=value config file (command line "
                 "flags win)");
  app.require_subcommand(1);

  IngestOpts ingest;
  auto* cmd_ingest = app.add_subcommand(
      "ingest", "validate and length-filter a pair corpus");
  cmd_ingest->add_option("--pairs", ingest.pairs, "input JSONL pair file")
      ->required();
  cmd_ingest->add_option("--out", ingest.out_dir, "output directory")
      ->required();
  cmd_ingest
      ->add_option("--min-prompt-words", ingest.min_prompt,
                   "minimum prompt length in whitespace words")
      ->capture_default_str();
  cmd_ingest
      ->add_option("--min-cont-words", ingest.min_cont,
                   "minimum continuation length")
      ->capture_default_str();
  cmd_ingest
      ->add_option("--max-cont-words", ingest.max_cont,
                   "maximum continuation length")
      ->capture_default_str();

  AnnotateOpts annotate;
  auto* cmd_annotate = app.add_subcommand(
      "annotate", "write the annotation layers for inspection");
  cmd_annotate->add_option("--pairs", annotate.pairs, "input JSONL pair file")
      ->required();
  cmd_annotate->add_option("--out", annotate.out_dir, "output directory")
      ->required();
  cmd_annotate
      ->add_option("--tier", annotate.tier,
                   "annotation tier: builtin or full")
      ->capture_default_str();
  cmd_annotate->add_option("--conllu", annotate.conllu,
                           "dependency annotation file (tier full)");
  cmd_annotate->add_option("--trees", annotate.trees,
                           "bracketed tree file (tier full)");
  cmd_annotate
      ->add_option("--side", annotate.side,
                   "which side to annotate: prompt, continuation or both")
      ->capture_default_str();

  ExtractOpts extract;
  auto* cmd_extract = app.add_subcommand(
      "extract", "extract the 160-feature battery per record side");
  cmd_extract->add_option("--pairs", extract.pairs, "input JSONL pair file")
      ->required();
  cmd_extract->add_option("--out", extract.out_dir, "output directory")
      ->required();
  cmd_extract
      ->add_option("--tier", extract.tier, "annotation tier: builtin or full")
      ->capture_default_str();
  cmd_extract->add_option("--conllu", extract.conllu,
                          "dependency annotation file (tier full)");
  cmd_extract->add_option("--trees", extract.trees,
                          "bracketed tree file (tier full)");
  cmd_extract->add_option("--lexicons", extract.lexicons,
                          "norm lexicon profile json");
  cmd_extract
      ->add_option("--format", extract.format,
                   "feature file format: csv, json or both")
      ->capture_default_str();
  cmd_extract
      ->add_option("--workers", extract.workers,
                   "worker threads (0 = all cores)")
      ->capture_default_str();

  CompareOpts compare;
  auto* cmd_compare = app.add_subcommand(
      "compare", "Welch-test prompt vs continuation features per model");
  cmd_compare
      ->add_option("--prompts", compare.prompts, "prompt-side feature file")
      ->required();
  cmd_compare
      ->add_option("--continuations", compare.model_args,
                   "model continuation feature file as NAME=FILE (repeat per "
                   "model)")
      ->required();
  cmd_compare->add_option("--out", compare.out_dir, "output directory")
      ->required();
  cmd_compare
      ->add_option("--alpha", compare.alpha, "family-wise significance level")
      ->capture_default_str();
  cmd_compare
      ->add_option("--groups", compare.groups,
                   "comparison group count for the Bonferroni correction")
      ->capture_default_str();
  cmd_compare
      ->add_option("--format", compare.format,
                   "table format: markdown, csv or json (json always written)")
      ->capture_default_str();

  CorrelateOpts correlate;
  auto* cmd_correlate = app.add_subcommand(
      "correlate", "rank features by model-vs-human continuation correlation");
  cmd_correlate
      ->add_option("--human", correlate.human, "human continuation feature file")
      ->required();
  cmd_correlate
      ->add_option("--model", correlate.model_args,
                   "model continuation feature file as NAME=FILE (repeat per "
                   "model)")
      ->required();
  cmd_correlate->add_option("--out", correlate.out_dir, "output directory")
      ->required();
  cmd_correlate
      ->add_option("--top", correlate.top_k, "rows to keep per model")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd_correlate
      ->add_option("--format", correlate.format,
                   "table format: markdown, csv or json (json always written)")
      ->capture_default_str();

  ReportOpts report;
  auto* cmd_report = app.add_subcommand(
      "report", "re-render stored table json to another format");
  cmd_report
      ->add_option("--tables", report.tables_dir,
                   "directory holding significance_*.json / correlation.json")
      ->required();
  cmd_report->add_option("--out", report.out_dir, "output directory")
      ->required();
  cmd_report
      ->add_option("--format", report.format,
                   "target format: markdown, csv or json")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*cmd_ingest) run_ingest(ingest);
    if (*cmd_annotate) run_annotate(annotate);
    if (*cmd_extract) run_extract(extract);
    if (*cmd_compare) run_compare(compare);
    if (*cmd_correlate) run_correlate(correlate);
    if (*cmd_report) run_report(report);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const lcx::InternalError& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  } catch (const lcx::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
