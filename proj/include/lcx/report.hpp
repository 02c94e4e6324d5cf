#pragma once
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lcx/features.hpp"
#include "lcx/stats.hpp"

namespace lcx {

enum class RenderFormat { markdown, csv, json };
std::string_view to_string(RenderFormat f);
std::optional<RenderFormat> render_format_from_string(std::string_view name);

// One family's worth of per-feature, per-model test outcomes.
struct SignificanceRow {
  std::string feature_id;
  std::string label;
  std::vector<TestResult> per_model;  // aligned with SignificanceTable.models
};

struct SignificanceTable {
  Family family = Family::shallow;
  std::vector<std::string> models;
  double alpha_used = 0.0;
  double alpha = 0.0;
  std::size_t groups = 0;
  std::vector<SignificanceRow> rows;
};

// Labelled feature files for the model side of a comparison.
using LabelledVectors =
    std::vector<std::pair<std::string, std::vector<FeatureVector>>>;

// Welch-tests every feature's prompt sample against each model's
// continuation sample at bonferroni(alpha, m).  Documents where the feature
// is unavailable on either side drop out of both samples.  Model files must
// cover exactly the prompt file's doc ids.
std::vector<SignificanceTable> compare(
    const std::vector<FeatureVector>& prompt_vectors,
    const LabelledVectors& model_vectors, double alpha, std::size_t m);

struct CorrelationRow {
  std::string feature_id;
  std::string label;
  double r = 0.0;
  std::size_t n = 0;
};

struct CorrelationSkip {
  std::string feature_id;
  std::string reason;
};

struct ModelCorrelation {
  std::string model;
  std::vector<CorrelationRow> rows;  // descending r, ties by feature id
  std::vector<CorrelationSkip> undefined;
  std::size_t defined_count = 0;
  double max_r = 0.0;  // only meaningful when defined_count > 0
};

struct CorrelationTable {
  std::size_t top_k = 0;
  std::vector<ModelCorrelation> per_model;
  // set when every defined correlation stays below 0.50
  bool weak_note = false;
};

// Pearson r per feature between aligned human and model continuations,
// ranked descending, cut to top_k.  Ids are matched by intersection; an
// empty intersection is an error.  Constant or unavailable features land in
// `undefined`.
CorrelationTable correlate(const std::vector<FeatureVector>& human_vectors,
                           const LabelledVectors& model_vectors,
                           std::size_t top_k);

std::string render(const SignificanceTable& table, RenderFormat format);
std::string render(const CorrelationTable& table, RenderFormat format);

// Round-trip parsers for the json renderings (used by the re-render command).
SignificanceTable parse_significance_json(std::string_view text);
CorrelationTable parse_correlation_json(std::string_view text);

// p/r display rule for markdown: six decimals, trailing zeros trimmed.
std::string format_p(double p);

struct ManifestEntry {
  std::string path;    // relative to the output dir
  std::string hash;    // fnv1a64 of the bytes written
};

struct RunManifest {
  std::string command;
  std::string tool_version;
  double alpha = 0.0;
  std::size_t groups = 0;
  double alpha_used = 0.0;
  std::vector<std::pair<std::string, std::size_t>> corpus_sizes;
  std::vector<ManifestEntry> outputs;
};

std::string manifest_json(const RunManifest& manifest);

}  // namespace lcx
