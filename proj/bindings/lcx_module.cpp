// Python bindings for the linguistic complexity toolkit.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lcx/annotate.hpp"
#include "lcx/corpus.hpp"
#include "lcx/errors.hpp"
#include "lcx/features.hpp"
#include "lcx/segment.hpp"
#include "lcx/stats.hpp"
#include "lcx/syllables.hpp"
#include "lcx/tokenize.hpp"
#include "lcx/version.hpp"

namespace py = pybind11;

namespace {

py::dict record_dict(const lcx::PairRecord& rec) {
  py::dict d;
  d["id"] = rec.id;
  d["prompt"] = rec.prompt;
  d["continuation"] = rec.continuation;
  d["model"] = rec.model;
  return d;
}

lcx::PairRecord record_from_dict(const py::dict& d) {
  lcx::PairRecord rec;
  rec.id = d["id"].cast<std::string>();
  rec.prompt = d["prompt"].cast<std::string>();
  rec.continuation = d["continuation"].cast<std::string>();
  rec.model = d["model"].cast<std::string>();
  return rec;
}

}  // namespace

PYBIND11_MODULE(lcx, m) {
  m.doc() = "Linguistic complexity analysis for prompt/continuation corpora";
  m.attr("__version__") = lcx::kVersion;
  m.attr("FEATURE_COUNT") = lcx::kFeatureCount;

  py::register_exception<lcx::Error>(m, "LcxError", PyExc_RuntimeError);

  m.def("registry", [] {
    py::list out;
    for (const lcx::FeatureDef& def : lcx::registry()) {
      py::dict d;
      d["id"] = std::string(def.id);
      d["family"] = std::string(lcx::to_string(def.family));
      d["label"] = std::string(def.label);
      d["requires"] = std::string(def.requires_tag);
      out.append(d);
    }
    return out;
  }, "All feature definitions in report order");

  m.def("count_syllables", [](const std::string& word) {
    return lcx::builtin_syllable_counter().count(word);
  }, py::arg("word"));

  m.def("segment_sentences", [](const std::string& text) {
    return lcx::builtin_segmenter().segment(text);
  }, py::arg("text"));

  m.def("tokenize", [](const std::string& text) {
    return lcx::tokenize(text);
  }, py::arg("text"));

  m.def("annotate_text", [](const std::string& id, const std::string& text) {
    lcx::AnnotatedDocument doc = lcx::annotate(id, text, lcx::Tier::builtin);
    py::dict out;
    out["id"] = doc.id;
    out["tier"] = std::string(lcx::to_string(doc.tier));
    py::list sentences;
    for (const lcx::Sentence& s : doc.sentences) {
      py::list tokens;
      for (const lcx::Token& t : s.tokens) {
        py::dict td;
        td["surface"] = t.surface;
        td["lemma"] = t.lemma;
        td["pos"] = std::string(lcx::to_string(t.pos));
        td["syllables"] = t.syllables;
        td["is_word"] = t.is_word;
        tokens.append(td);
      }
      sentences.append(tokens);
    }
    out["sentences"] = sentences;
    return out;
  }, py::arg("id"), py::arg("text"),
     "Bundled-resource annotation of one text");

  m.def("extract_text", [](const std::string& id, const std::string& text) {
    lcx::AnnotatedDocument doc = lcx::annotate(id, text, lcx::Tier::builtin);
    lcx::FeatureVector vec = lcx::extract(doc);
    py::dict values;
    auto defs = lcx::registry();
    for (std::size_t i = 0; i < lcx::kFeatureCount; ++i) {
      py::str key{std::string(defs[i].id)};
      if (vec.values[i].available)
        values[key] = vec.values[i].value;
      else
        values[key] = py::none();
    }
    py::dict out;
    out["doc_id"] = vec.doc_id;
    out["values"] = values;
    return out;
  }, py::arg("id"), py::arg("text"),
     "Full feature battery for one text; None marks unavailable features");

  m.def("load_pairs", [](const std::string& path) {
    lcx::LoadResult res = lcx::load_pairs(path);
    py::list records;
    for (const lcx::PairRecord& rec : res.corpus.records)
      records.append(record_dict(rec));
    py::list issues;
    for (const lcx::LineIssue& issue : res.issues) {
      py::dict d;
      d["line"] = issue.line;
      d["message"] = issue.message;
      issues.append(d);
    }
    py::dict out;
    out["records"] = records;
    out["issues"] = issues;
    return out;
  }, py::arg("path"), "Read a JSONL pair corpus");

  m.def("filter_pairs",
        [](const py::list& records, std::size_t min_prompt_words,
           std::size_t min_continuation_words,
           std::size_t max_continuation_words) {
    lcx::Corpus corpus;
    for (const auto& item : records)
      corpus.records.push_back(record_from_dict(item.cast<py::dict>()));
    lcx::FilterSettings settings{min_prompt_words, min_continuation_words,
                                 max_continuation_words};
    lcx::FilterResult res = lcx::filter_pairs(corpus, settings);
    py::list kept;
    for (const lcx::PairRecord& rec : res.corpus.records)
      kept.append(record_dict(rec));
    py::dict report;
    report["input"] = res.report.input;
    report["kept"] = res.report.kept;
    report["dropped_short_prompt"] = res.report.dropped_short_prompt;
    report["dropped_short_continuation"] =
        res.report.dropped_short_continuation;
    report["dropped_long_continuation"] = res.report.dropped_long_continuation;
    py::dict out;
    out["records"] = kept;
    out["report"] = report;
    return out;
  }, py::arg("records"), py::arg("min_prompt_words") = 30,
     py::arg("min_continuation_words") = 150,
     py::arg("max_continuation_words") = 300,
     "Length-filter pair records");

  m.def("welch_t", [](const std::vector<double>& a,
                      const std::vector<double>& b) {
    lcx::WelchResult res = lcx::welch_t(lcx::summarize(a), lcx::summarize(b));
    py::dict out;
    out["t"] = res.t;
    out["df"] = res.df;
    out["p"] = lcx::p_two_tailed(res);
    out["infinite_t"] = res.infinite_t;
    return out;
  }, py::arg("a"), py::arg("b"),
     "Welch's unequal-variance t-test, two tailed");

  m.def("p_two_tailed", [](double t, double df) {
    return lcx::p_two_tailed(t, df);
  }, py::arg("t"), py::arg("df"));

  m.def("bonferroni", [](double alpha, std::size_t m) {
    return lcx::bonferroni_threshold(alpha, m);
  }, py::arg("alpha"), py::arg("m"),
     "Per-comparison threshold alpha / m");

  m.def("pearson", [](const std::vector<double>& x,
                      const std::vector<double>& y) {
    return lcx::pearson(x, y);
  }, py::arg("x"), py::arg("y"), "Pearson correlation coefficient");
}
