#include "lcx/feature_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lcx/errors.hpp"

namespace lcx {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw InternalError("number formatting failed");
  return std::string(buf, end);
}

std::string format_fixed(double v, int decimals) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed,
                    decimals);
  if (ec != std::errc{}) throw InternalError("number formatting failed");
  return std::string(buf, end);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = fnv1a64(data);
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xF];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf, 16);
}

namespace {

double parse_double_strict(std::string_view s, std::size_t lineno) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size())
    throw ParseError("bad numeric cell '" + std::string(s) + "'", lineno);
  return v;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  // cells never contain commas or quotes (ids and numbers only)
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t c = line.find(',', pos);
    if (c == std::string_view::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, c - pos));
    pos = c + 1;
  }
  return out;
}

}  // namespace

std::string features_to_csv(const std::vector<FeatureVector>& vectors) {
  auto defs = registry();
  std::string out;
  out += "doc_id";
  for (const FeatureDef& d : defs) {
    out += ',';
    out += d.id;
  }
  for (const FeatureDef& d : defs) {
    out += ',';
    out += d.id;
    out += "_available";
  }
  out += '\n';
  for (const FeatureVector& fv : vectors) {
    if (fv.values.size() != kFeatureCount)
      throw ValidationError("feature vector for '" + fv.doc_id +
                            "' has wrong length");
    out += fv.doc_id;
    for (const FeatureValue& v : fv.values) {
      out += ',';
      out += format_double(v.available ? v.value : 0.0);
    }
    for (const FeatureValue& v : fv.values) {
      out += ',';
      out += v.available ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::vector<FeatureVector> features_from_csv(std::string_view text) {
  auto defs = registry();
  std::vector<FeatureVector> out;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (!saw_header) {
      if (cells.size() != 1 + 2 * kFeatureCount)
        throw ParseError("feature csv header has " +
                             std::to_string(cells.size()) + " columns, want " +
                             std::to_string(1 + 2 * kFeatureCount),
                         lineno);
      if (cells[0] != "doc_id")
        throw ParseError("feature csv must start with doc_id column", lineno);
      for (std::size_t i = 0; i < kFeatureCount; ++i) {
        if (cells[1 + i] != defs[i].id)
          throw ParseError("feature csv column " + std::to_string(i + 2) +
                               " is '" + std::string(cells[1 + i]) +
                               "', want '" + std::string(defs[i].id) + "'",
                           lineno);
        std::string want = std::string(defs[i].id) + "_available";
        if (cells[1 + kFeatureCount + i] != want)
          throw ParseError("feature csv availability column mismatch at '" +
                               std::string(cells[1 + kFeatureCount + i]) + "'",
                           lineno);
      }
      saw_header = true;
      continue;
    }
    if (cells.size() != 1 + 2 * kFeatureCount)
      throw ParseError("feature csv row has wrong column count", lineno);
    FeatureVector fv;
    fv.doc_id = std::string(cells[0]);
    fv.values.resize(kFeatureCount);
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      std::string_view avail = cells[1 + kFeatureCount + i];
      if (avail != "0" && avail != "1")
        throw ParseError("availability cell must be 0 or 1", lineno);
      fv.values[i].available = avail == "1";
      fv.values[i].value =
          fv.values[i].available ? parse_double_strict(cells[1 + i], lineno)
                                 : 0.0;
    }
    out.push_back(std::move(fv));
  }
  if (!saw_header) throw ParseError("feature csv is empty");
  return out;
}

std::string features_to_json(const std::vector<FeatureVector>& vectors) {
  using ordered_json = nlohmann::ordered_json;
  auto defs = registry();
  ordered_json doc;
  ordered_json ids = ordered_json::array();
  for (const FeatureDef& d : defs) ids.push_back(std::string(d.id));
  doc["ids"] = std::move(ids);
  ordered_json docs = ordered_json::array();
  for (const FeatureVector& fv : vectors) {
    if (fv.values.size() != kFeatureCount)
      throw ValidationError("feature vector for '" + fv.doc_id +
                            "' has wrong length");
    ordered_json rec;
    rec["doc_id"] = fv.doc_id;
    ordered_json values = ordered_json::array();
    ordered_json available = ordered_json::array();
    ordered_json degenerate = ordered_json::array();
    for (const FeatureValue& v : fv.values) {
      values.push_back(v.available ? v.value : 0.0);
      available.push_back(v.available);
      degenerate.push_back(v.degenerate);
    }
    rec["values"] = std::move(values);
    rec["available"] = std::move(available);
    rec["degenerate"] = std::move(degenerate);
    docs.push_back(std::move(rec));
  }
  doc["documents"] = std::move(docs);
  return doc.dump(1) + "\n";
}

std::vector<FeatureVector> features_from_json(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("feature json is not valid JSON");
  if (!doc.is_object() || !doc.contains("ids") || !doc.contains("documents"))
    throw ParseError("feature json needs 'ids' and 'documents'");
  auto defs = registry();
  const auto& ids = doc["ids"];
  if (!ids.is_array() || ids.size() != kFeatureCount)
    throw ParseError("feature json ids must list all registry features");
  for (std::size_t i = 0; i < kFeatureCount; ++i)
    if (ids[i].get<std::string>() != defs[i].id)
      throw ParseError("feature json id mismatch at position " +
                       std::to_string(i));
  std::vector<FeatureVector> out;
  for (const auto& rec : doc["documents"]) {
    FeatureVector fv;
    fv.doc_id = rec.at("doc_id").get<std::string>();
    const auto& values = rec.at("values");
    const auto& available = rec.at("available");
    if (values.size() != kFeatureCount || available.size() != kFeatureCount)
      throw ParseError("feature json row length mismatch for '" + fv.doc_id +
                       "'");
    const nlohmann::json* degenerate =
        rec.contains("degenerate") ? &rec["degenerate"] : nullptr;
    fv.values.resize(kFeatureCount);
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      fv.values[i].available = available[i].get<bool>();
      fv.values[i].value =
          fv.values[i].available ? values[i].get<double>() : 0.0;
      if (degenerate) fv.values[i].degenerate = (*degenerate)[i].get<bool>();
    }
    out.push_back(std::move(fv));
  }
  return out;
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing file: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<FeatureVector> read_feature_file(const std::string& path) {
  std::string text = read_text_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return features_from_json(text);
  return features_from_csv(text);
}

}  // namespace lcx
