#include "lcx/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "lcx/errors.hpp"
#include "lcx/feature_io.hpp"
#include "lcx/version.hpp"

namespace lcx {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(RenderFormat f) {
  switch (f) {
    case RenderFormat::markdown: return "markdown";
    case RenderFormat::csv: return "csv";
    default: return "json";
  }
}

std::optional<RenderFormat> render_format_from_string(std::string_view name) {
  if (name == "markdown" || name == "md") return RenderFormat::markdown;
  if (name == "csv") return RenderFormat::csv;
  if (name == "json") return RenderFormat::json;
  return std::nullopt;
}

std::string format_p(double p) {
  if (std::isnan(p)) return "n/a";
  std::string s = format_fixed(p, 6);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

namespace {

// id -> vector index, with duplicate detection
std::map<std::string, std::size_t> index_by_id(
    const std::vector<FeatureVector>& vectors, const std::string& what) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!out.emplace(vectors[i].doc_id, i).second)
      throw ValidationError("duplicate doc id '" + vectors[i].doc_id +
                            "' in " + what);
  }
  return out;
}

std::string id_diff_summary(const std::map<std::string, std::size_t>& a,
                            const std::map<std::string, std::size_t>& b) {
  std::vector<std::string> only_a, only_b;
  for (const auto& [id, _] : a)
    if (!b.count(id)) only_a.push_back(id);
  for (const auto& [id, _] : b)
    if (!a.count(id)) only_b.push_back(id);
  auto preview = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < 5; ++i) {
      if (i) s += ", ";
      s += v[i];
    }
    if (v.size() > 5) s += ", ...";
    return s;
  };
  std::string msg;
  if (!only_a.empty())
    msg += std::to_string(only_a.size()) +
           " ids only in prompts [" + preview(only_a) + "]";
  if (!only_b.empty()) {
    if (!msg.empty()) msg += "; ";
    msg += std::to_string(only_b.size()) +
           " ids only in continuations [" + preview(only_b) + "]";
  }
  return msg;
}

}  // namespace

std::vector<SignificanceTable> compare(
    const std::vector<FeatureVector>& prompt_vectors,
    const LabelledVectors& model_vectors, double alpha, std::size_t m) {
  double alpha_used = bonferroni_threshold(alpha, m);
  auto prompt_index = index_by_id(prompt_vectors, "prompt file");

  // validate alignment up front and index every model file once
  std::vector<std::map<std::string, std::size_t>> model_indexes;
  for (const auto& [label, vectors] : model_vectors) {
    auto model_index = index_by_id(vectors, "file for model '" + label + "'");
    if (model_index.size() != prompt_index.size() ||
        !std::equal(prompt_index.begin(), prompt_index.end(),
                    model_index.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; }))
      throw AlignmentError("doc ids of model '" + label +
                           "' do not match the prompt file: " +
                           id_diff_summary(prompt_index, model_index));
    model_indexes.push_back(std::move(model_index));
  }

  auto defs = registry();
  std::vector<SignificanceTable> tables;
  for (int f = 0; f < kNumFamilies; ++f) {
    SignificanceTable table;
    table.family = static_cast<Family>(f);
    table.alpha = alpha;
    table.groups = m;
    table.alpha_used = alpha_used;
    for (const auto& [label, _] : model_vectors) table.models.push_back(label);
    tables.push_back(std::move(table));
  }

  for (std::size_t fi = 0; fi < kFeatureCount; ++fi) {
    const FeatureDef& def = defs[fi];
    SignificanceRow row;
    row.feature_id = std::string(def.id);
    row.label = std::string(def.label);
    for (std::size_t mi = 0; mi < model_vectors.size(); ++mi) {
      const auto& vectors = model_vectors[mi].second;
      std::vector<double> a, b;
      for (const auto& [doc_id, pi] : prompt_index) {
        const FeatureValue& pv = prompt_vectors[pi].values[fi];
        const FeatureValue& cv =
            vectors[model_indexes[mi].at(doc_id)].values[fi];
        if (!pv.available || !cv.available) continue;  // pairwise exclusion
        a.push_back(pv.value);
        b.push_back(cv.value);
      }
      row.per_model.push_back(run_welch_test(row.feature_id, a, b, alpha_used));
    }
    tables[static_cast<int>(def.family)].rows.push_back(std::move(row));
  }
  return tables;
}

CorrelationTable correlate(const std::vector<FeatureVector>& human_vectors,
                           const LabelledVectors& model_vectors,
                           std::size_t top_k) {
  if (top_k < 1) throw DomainError("top_k must be at least 1");
  auto human_index = index_by_id(human_vectors, "human file");
  auto defs = registry();

  CorrelationTable table;
  table.top_k = top_k;
  bool any_defined = false;
  double overall_max = 0.0;

  for (const auto& [label, vectors] : model_vectors) {
    auto model_index = index_by_id(vectors, "file for model '" + label + "'");
    std::vector<std::pair<std::size_t, std::size_t>> aligned;  // human, model
    for (const auto& [doc_id, hi] : human_index) {
      auto it = model_index.find(doc_id);
      if (it != model_index.end()) aligned.emplace_back(hi, it->second);
    }
    if (aligned.empty())
      throw DomainError("no shared doc ids between the human file and model '" +
                        label + "'");

    ModelCorrelation mc;
    mc.model = label;
    std::vector<CorrelationRow> defined;
    for (std::size_t fi = 0; fi < kFeatureCount; ++fi) {
      std::vector<double> x, y;
      for (const auto& [hi, mi] : aligned) {
        const FeatureValue& hv = human_vectors[hi].values[fi];
        const FeatureValue& mv = vectors[mi].values[fi];
        if (!hv.available || !mv.available) continue;
        x.push_back(hv.value);
        y.push_back(mv.value);
      }
      std::string id(defs[fi].id);
      if (x.size() < 2) {
        mc.undefined.push_back({id, "fewer than two aligned observations"});
        continue;
      }
      try {
        double r = pearson(x, y);
        defined.push_back({id, std::string(defs[fi].label), r, x.size()});
      } catch (const DomainError&) {
        mc.undefined.push_back({id, "constant values on one side"});
      }
    }
    std::sort(defined.begin(), defined.end(),
              [](const CorrelationRow& a, const CorrelationRow& b) {
                if (a.r != b.r) return a.r > b.r;
                return a.feature_id < b.feature_id;
              });
    mc.defined_count = defined.size();
    if (!defined.empty()) {
      mc.max_r = defined.front().r;
      any_defined = true;
      overall_max = std::max(overall_max, mc.max_r);
    }
    if (defined.size() > top_k) defined.resize(top_k);
    mc.rows = std::move(defined);
    table.per_model.push_back(std::move(mc));
  }
  table.weak_note = any_defined && overall_max < 0.50;
  return table;
}

namespace {

std::string family_heading(Family family) {
  switch (family) {
    case Family::shallow: return "Shallow features";
    case Family::formula: return "Readability formula features";
    case Family::pos: return "Part-of-speech features";
    case Family::ttr: return "Type-token ratio features";
    case Family::variation: return "Lexical variation features";
    case Family::phrasal: return "Phrasal features";
    case Family::tree: return "Tree depth features";
    case Family::psycho: return "Psycholinguistic features";
    default: return "Discourse features";
  }
}

std::string cell_for(const TestResult& t) {
  if (!t.testable) return "n/a";
  std::string p = format_p(t.p);
  if (!t.significant) return "**" + p + "**";
  return p;
}

std::string markdown_significance(const SignificanceTable& table) {
  std::string out;
  out += "## " + family_heading(table.family) + "\n\n";
  out += "Welch t-test, prompts vs continuations per model. Significance "
         "threshold alpha = " +
         format_fixed(table.alpha_used, 4) + " (" + format_p(table.alpha) +
         "/" + std::to_string(table.groups) +
         ", Bonferroni). Non-significant cells are shown in **bold**; "
         "untestable cells as n/a.\n\n";
  out += "| Feature |";
  for (const std::string& m : table.models) out += " " + m + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < table.models.size(); ++i) out += "---|";
  out += "\n";
  for (const SignificanceRow& row : table.rows) {
    out += "| " + row.label + " |";
    for (const TestResult& t : row.per_model) out += " " + cell_for(t) + " |";
    out += "\n";
  }
  return out;
}

std::string csv_significance(const SignificanceTable& table) {
  std::string out =
      "family,feature_id,label,model,t,df,p,significant,alpha_used,n,"
      "testable,note\n";
  for (const SignificanceRow& row : table.rows) {
    for (std::size_t mi = 0; mi < table.models.size(); ++mi) {
      const TestResult& t = row.per_model[mi];
      out += std::string(to_string(table.family)) + ',' + row.feature_id + ',' +
             '"' + row.label + '"' + ',' + table.models[mi] + ',';
      out += (t.testable ? format_double(t.t) : "") + std::string(",");
      out += (t.testable ? format_double(t.df) : "") + std::string(",");
      out += (t.testable ? format_double(t.p) : "") + std::string(",");
      out += t.significant ? "1" : "0";
      out += ',' + format_double(t.alpha_used) + ',' +
             std::to_string(std::min(t.n_a, t.n_b)) + ',' +
             (t.testable ? "1" : "0") + ',' + t.note + "\n";
    }
  }
  return out;
}

ordered_json test_to_json(const TestResult& t) {
  ordered_json j;
  j["testable"] = t.testable;
  if (t.testable) {
    if (t.infinite_t)
      j["t"] = t.t > 0 ? "inf" : "-inf";
    else
      j["t"] = t.t;
    j["df"] = t.df;
    j["p"] = t.p;
  } else {
    j["t"] = nullptr;
    j["df"] = nullptr;
    j["p"] = nullptr;
    j["note"] = t.note;
  }
  j["significant"] = t.significant;
  j["n"] = std::min(t.n_a, t.n_b);
  j["infinite_t"] = t.infinite_t;
  return j;
}

std::string json_significance(const SignificanceTable& table) {
  ordered_json j;
  j["family"] = std::string(to_string(table.family));
  j["alpha"] = table.alpha;
  j["groups"] = table.groups;
  j["alpha_used"] = table.alpha_used;
  j["alpha_used_display"] = format_fixed(table.alpha_used, 6);
  j["models"] = table.models;
  ordered_json rows = ordered_json::array();
  for (const SignificanceRow& row : table.rows) {
    ordered_json r;
    r["feature_id"] = row.feature_id;
    r["label"] = row.label;
    ordered_json cells = ordered_json::object();
    for (std::size_t mi = 0; mi < table.models.size(); ++mi)
      cells[table.models[mi]] = test_to_json(row.per_model[mi]);
    r["cells"] = std::move(cells);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(1) + "\n";
}

std::string markdown_correlation(const CorrelationTable& table) {
  std::string out;
  out += "## Top correlated features, model vs human continuations\n\n";
  for (const ModelCorrelation& mc : table.per_model) {
    out += "### " + mc.model + "\n\n";
    out += "| Rank | Feature | r |\n|---|---|---|\n";
    for (std::size_t i = 0; i < mc.rows.size(); ++i) {
      out += "| " + std::to_string(i + 1) + " | " + mc.rows[i].label + " | " +
             format_p(mc.rows[i].r) + " |\n";
    }
    if (!mc.undefined.empty())
      out += "\n" + std::to_string(mc.undefined.size()) +
             " features had undefined correlations and were left out of the "
             "ranking.\n";
    out += "\n";
  }
  if (table.weak_note)
    out += "All correlations fall below 0.50; the model and human "
           "continuations are at best weakly correlated on these features.\n";
  return out;
}

std::string csv_correlation(const CorrelationTable& table) {
  std::string out = "model,rank,feature_id,label,r,n\n";
  for (const ModelCorrelation& mc : table.per_model) {
    for (std::size_t i = 0; i < mc.rows.size(); ++i) {
      const CorrelationRow& row = mc.rows[i];
      out += mc.model + ',' + std::to_string(i + 1) + ',' + row.feature_id +
             ',' + '"' + row.label + '"' + ',' + format_double(row.r) + ',' +
             std::to_string(row.n) + "\n";
    }
  }
  return out;
}

std::string json_correlation(const CorrelationTable& table) {
  ordered_json j;
  j["top_k"] = table.top_k;
  j["weak_note"] = table.weak_note;
  ordered_json models = ordered_json::array();
  for (const ModelCorrelation& mc : table.per_model) {
    ordered_json m;
    m["model"] = mc.model;
    m["defined_count"] = mc.defined_count;
    if (mc.defined_count > 0) m["max_r"] = mc.max_r;
    ordered_json rows = ordered_json::array();
    for (const CorrelationRow& row : mc.rows) {
      ordered_json r;
      r["feature_id"] = row.feature_id;
      r["label"] = row.label;
      r["r"] = row.r;
      r["n"] = row.n;
      rows.push_back(std::move(r));
    }
    m["rows"] = std::move(rows);
    ordered_json undef = ordered_json::array();
    for (const CorrelationSkip& skip : mc.undefined) {
      ordered_json u;
      u["feature_id"] = skip.feature_id;
      u["reason"] = skip.reason;
      undef.push_back(std::move(u));
    }
    m["undefined"] = std::move(undef);
    models.push_back(std::move(m));
  }
  j["models"] = std::move(models);
  return j.dump(1) + "\n";
}

}  // namespace

std::string render(const SignificanceTable& table, RenderFormat format) {
  switch (format) {
    case RenderFormat::markdown: return markdown_significance(table);
    case RenderFormat::csv: return csv_significance(table);
    case RenderFormat::json: return json_significance(table);
  }
  throw DomainError("unknown render format");
}

std::string render(const CorrelationTable& table, RenderFormat format) {
  switch (format) {
    case RenderFormat::markdown: return markdown_correlation(table);
    case RenderFormat::csv: return csv_correlation(table);
    case RenderFormat::json: return json_correlation(table);
  }
  throw DomainError("unknown render format");
}

SignificanceTable parse_significance_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw ParseError("significance table json is malformed");
  SignificanceTable table;
  auto fam = family_from_string(j.at("family").get<std::string>());
  if (!fam) throw ParseError("unknown family in significance table json");
  table.family = *fam;
  table.alpha = j.at("alpha").get<double>();
  table.groups = j.at("groups").get<std::size_t>();
  table.alpha_used = j.at("alpha_used").get<double>();
  for (const auto& m : j.at("models"))
    table.models.push_back(m.get<std::string>());
  for (const auto& rj : j.at("rows")) {
    SignificanceRow row;
    row.feature_id = rj.at("feature_id").get<std::string>();
    row.label = rj.at("label").get<std::string>();
    for (const std::string& model : table.models) {
      const auto& cell = rj.at("cells").at(model);
      TestResult t;
      t.feature_id = row.feature_id;
      t.alpha_used = table.alpha_used;
      t.testable = cell.at("testable").get<bool>();
      t.infinite_t = cell.value("infinite_t", false);
      if (t.testable) {
        if (cell.at("t").is_string()) {
          std::string ts = cell.at("t").get<std::string>();
          t.t = ts == "inf" ? HUGE_VAL : -HUGE_VAL;
        } else {
          t.t = cell.at("t").get<double>();
        }
        t.df = cell.at("df").get<double>();
        t.p = cell.at("p").get<double>();
      } else {
        t.t = t.df = t.p = std::nan("");
        t.note = cell.value("note", "");
      }
      t.significant = cell.at("significant").get<bool>();
      t.n_a = t.n_b = cell.at("n").get<std::size_t>();
      row.per_model.push_back(std::move(t));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CorrelationTable parse_correlation_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw ParseError("correlation table json is malformed");
  CorrelationTable table;
  table.top_k = j.at("top_k").get<std::size_t>();
  table.weak_note = j.at("weak_note").get<bool>();
  for (const auto& mj : j.at("models")) {
    ModelCorrelation mc;
    mc.model = mj.at("model").get<std::string>();
    mc.defined_count = mj.at("defined_count").get<std::size_t>();
    if (mj.contains("max_r")) mc.max_r = mj.at("max_r").get<double>();
    for (const auto& rj : mj.at("rows")) {
      CorrelationRow row;
      row.feature_id = rj.at("feature_id").get<std::string>();
      row.label = rj.at("label").get<std::string>();
      row.r = rj.at("r").get<double>();
      row.n = rj.at("n").get<std::size_t>();
      mc.rows.push_back(std::move(row));
    }
    for (const auto& uj : mj.at("undefined"))
      mc.undefined.push_back({uj.at("feature_id").get<std::string>(),
                              uj.at("reason").get<std::string>()});
    table.per_model.push_back(std::move(mc));
  }
  return table;
}

std::string manifest_json(const RunManifest& manifest) {
  ordered_json j;
  j["tool"] = "lcx";
  j["version"] = manifest.tool_version;
  j["command"] = manifest.command;
  if (manifest.groups > 0) {
    j["alpha"] = manifest.alpha;
    j["groups"] = manifest.groups;
    j["alpha_used"] = manifest.alpha_used;
    j["alpha_used_display"] = format_fixed(manifest.alpha_used, 6);
  }
  ordered_json sizes = ordered_json::object();
  for (const auto& [name, n] : manifest.corpus_sizes) sizes[name] = n;
  j["corpus_sizes"] = std::move(sizes);
  ordered_json outputs = ordered_json::array();
  for (const ManifestEntry& e : manifest.outputs) {
    ordered_json o;
    o["path"] = e.path;
    o["fnv1a64"] = e.hash;
    outputs.push_back(std::move(o));
  }
  j["outputs"] = std::move(outputs);
  return j.dump(1) + "\n";
}

}  // namespace lcx
