#include "lcx/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "lcx/errors.hpp"
#include "lcx/textutil.hpp"

namespace lcx {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> Corpus::model_labels() const {
  std::vector<std::string> labels;
  for (const PairRecord& r : records)
    if (std::find(labels.begin(), labels.end(), r.model) == labels.end())
      labels.push_back(r.model);
  std::sort(labels.begin(), labels.end());
  return labels;
}

LoadResult load_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pair file: " + path);

  LoadResult result;
  result.corpus.provenance.source_path = path;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // skip blank lines silently
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    ordered_json obj = ordered_json::parse(line, nullptr, false);
    if (obj.is_discarded()) {
      result.issues.push_back({lineno, "not valid JSON"});
      continue;
    }
    if (!obj.is_object()) {
      result.issues.push_back({lineno, "not a JSON object"});
      continue;
    }
    PairRecord rec;
    bool ok = true;
    for (const char* field : {"id", "prompt", "continuation", "model"}) {
      auto it = obj.find(field);
      if (it == obj.end() || !it->is_string()) {
        result.issues.push_back(
            {lineno, std::string("missing string field '") + field + "'"});
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    rec.id = obj["id"].get<std::string>();
    rec.prompt = obj["prompt"].get<std::string>();
    rec.continuation = obj["continuation"].get<std::string>();
    rec.model = obj["model"].get<std::string>();
    if (rec.id.empty()) {
      result.issues.push_back({lineno, "empty id"});
      continue;
    }
    if (!seen_ids.insert(rec.id).second)
      throw ValidationError("duplicate record id '" + rec.id + "' at line " +
                            std::to_string(lineno) + " of " + path);
    result.corpus.records.push_back(std::move(rec));
  }
  return result;
}

FilterResult filter_pairs(const Corpus& corpus, const FilterSettings& s) {
  FilterResult out;
  out.corpus.provenance = corpus.provenance;
  out.corpus.provenance.filter = s;
  out.report.input = corpus.records.size();
  for (const PairRecord& rec : corpus.records) {
    std::size_t pw = whitespace_word_count(rec.prompt);
    std::size_t cw = whitespace_word_count(rec.continuation);
    if (pw < s.min_prompt_words) {
      ++out.report.dropped_short_prompt;
      continue;
    }
    if (cw < s.min_continuation_words) {
      ++out.report.dropped_short_continuation;
      continue;
    }
    if (cw > s.max_continuation_words) {
      ++out.report.dropped_long_continuation;
      continue;
    }
    ++out.report.kept;
    ++out.report.kept_by_model[rec.model];
    out.corpus.records.push_back(rec);
  }
  return out;
}

void write_pairs(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write pair file: " + path);
  for (const PairRecord& rec : corpus.records) {
    ordered_json obj;
    obj["id"] = rec.id;
    obj["prompt"] = rec.prompt;
    obj["continuation"] = rec.continuation;
    obj["model"] = rec.model;
    out << obj.dump() << '\n';
  }
  if (!out) throw IoError("failed writing pair file: " + path);
}

std::string filter_report_json(const FilterReport& report,
                               const FilterSettings& settings,
                               const std::vector<LineIssue>& input_issues) {
  ordered_json j;
  j["settings"] = {{"min_prompt_words", settings.min_prompt_words},
                   {"min_continuation_words", settings.min_continuation_words},
                   {"max_continuation_words", settings.max_continuation_words}};
  ordered_json issues = ordered_json::array();
  for (const LineIssue& issue : input_issues)
    issues.push_back({{"line", issue.line}, {"message", issue.message}});
  j["input_issues"] = std::move(issues);
  j["input"] = report.input;
  j["kept"] = report.kept;
  j["dropped"] = {{"short_prompt", report.dropped_short_prompt},
                  {"short_continuation", report.dropped_short_continuation},
                  {"long_continuation", report.dropped_long_continuation}};
  ordered_json by_model = ordered_json::object();
  for (const auto& [model, n] : report.kept_by_model) by_model[model] = n;
  j["kept_by_model"] = by_model;
  return j.dump(2) + "\n";
}

}  // namespace lcx
