#pragma once
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcx {

// One prompt/continuation pair.
struct PairRecord {
  std::string id;
  std::string prompt;
  std::string continuation;
  std::string model;
};

struct FilterSettings {
  std::size_t min_prompt_words = 30;
  std::size_t min_continuation_words = 150;
  std::size_t max_continuation_words = 300;
};

struct Provenance {
  std::string source_path;
  std::optional<FilterSettings> filter;  // set once filtering was applied
};

struct Corpus {
  std::vector<PairRecord> records;
  Provenance provenance;

  std::vector<std::string> model_labels() const;  // distinct, sorted
};

// A skipped input line: number plus what was wrong with it.
struct LineIssue {
  std::size_t line = 0;
  std::string message;
};

struct LoadResult {
  Corpus corpus;
  std::vector<LineIssue> issues;
};

// Reads JSONL with objects {"id","prompt","continuation","model"}.  Records
// missing a required string field and lines that are not valid JSON objects
// are reported in `issues` and skipped.  A duplicate id is an error.
LoadResult load_pairs(const std::string& path);

struct FilterReport {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t dropped_short_prompt = 0;
  std::size_t dropped_short_continuation = 0;
  std::size_t dropped_long_continuation = 0;
  // kept counts per model label
  std::map<std::string, std::size_t> kept_by_model;
};

struct FilterResult {
  Corpus corpus;
  FilterReport report;
};

// Keeps records whose prompt has at least min_prompt_words words and whose
// continuation length lies in [min, max] (inclusive).  Words are maximal
// runs of non-whitespace in the raw text.  A record failing several rules
// counts once, under the first rule in the order above.
FilterResult filter_pairs(const Corpus& corpus, const FilterSettings& s = {});

void write_pairs(const Corpus& corpus, const std::string& path);
std::string filter_report_json(const FilterReport& report,
                               const FilterSettings& settings,
                               const std::vector<LineIssue>& input_issues = {});

}  // namespace lcx
