#include "lcx/norms.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "lcx/errors.hpp"
#include "lcx/textutil.hpp"

namespace lcx {

std::string_view to_string(KeyKind kind) {
  return kind == KeyKind::surface ? "surface" : "lemma";
}

std::optional<KeyKind> key_kind_from_string(std::string_view name) {
  if (name == "surface") return KeyKind::surface;
  if (name == "lemma") return KeyKind::lemma;
  return std::nullopt;
}

namespace {

std::vector<std::string> split_on(std::string_view line, char delim) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t hit = line.find(delim, pos);
    if (hit == std::string_view::npos) {
      out.emplace_back(line.substr(pos));
      break;
    }
    out.emplace_back(line.substr(pos, hit - pos));
    pos = hit + 1;
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  // tolerate surrounding spaces
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

NormLexicon load_norm_lexicon(const LexiconSchema& schema) {
  std::ifstream in(schema.path);
  if (!in)
    throw IoError("cannot open norm table '" + schema.name +
                  "': " + schema.path);
  NormLexicon lex;
  lex.name = schema.name;
  lex.key_kind = schema.key_kind;

  std::string line;
  if (!std::getline(in, line))
    throw ParseError("norm table '" + schema.name + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split_on(line, schema.delimiter);
  auto col_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw ParseError("norm table '" + schema.name + "' has no column '" +
                     name + "'");
  };
  std::size_t key_col = col_index(schema.key_column);
  std::size_t value_col = col_index(schema.value_column);

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_on(line, schema.delimiter);
    if (cells.size() <= std::max(key_col, value_col)) {
      lex.skipped_rows.push_back({lineno, "too few columns"});
      continue;
    }
    std::string key = fold_case(cells[key_col]);
    if (key.empty()) {
      lex.skipped_rows.push_back({lineno, "empty key"});
      continue;
    }
    std::optional<double> value = parse_double(cells[value_col]);
    if (!value) {
      lex.skipped_rows.push_back({lineno, "non-numeric value '" +
                                              cells[value_col] + "'"});
      continue;
    }
    auto [it, inserted] = lex.entries.emplace(std::move(key), *value);
    (void)it;
    if (!inserted) ++lex.duplicate_keys;  // first row wins
  }
  return lex;
}

std::vector<LexiconSchema> load_lexicon_profiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon profile file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded())
    throw ParseError("lexicon profile file is not valid JSON: " + path);
  if (!doc.is_array())
    throw ParseError("lexicon profile file must hold a JSON array: " + path);

  std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<LexiconSchema> out;
  for (const auto& item : doc) {
    if (!item.is_object())
      throw ParseError("lexicon profile entries must be objects: " + path);
    LexiconSchema s;
    for (const char* field : {"name", "path", "key_column", "value_column"}) {
      if (!item.contains(field) || !item[field].is_string())
        throw ParseError(std::string("lexicon profile entry missing '") +
                         field + "': " + path);
    }
    s.name = item["name"].get<std::string>();
    std::filesystem::path p = item["path"].get<std::string>();
    s.path = p.is_absolute() ? p.string() : (base / p).string();
    s.key_column = item["key_column"].get<std::string>();
    s.value_column = item["value_column"].get<std::string>();
    if (item.contains("delimiter")) {
      std::string d = item["delimiter"].get<std::string>();
      if (d == "\\t" || d == "tab")
        s.delimiter = '\t';
      else if (d.size() == 1)
        s.delimiter = d[0];
      else
        throw ParseError("bad delimiter for lexicon '" + s.name + "'");
    }
    if (item.contains("key_kind")) {
      auto kk = key_kind_from_string(item["key_kind"].get<std::string>());
      if (!kk)
        throw ParseError("bad key_kind for lexicon '" + s.name +
                         "' (want surface|lemma)");
      s.key_kind = *kk;
    }
    out.push_back(std::move(s));
  }
  return out;
}

NormSet load_norm_set(const std::vector<LexiconSchema>& schemas) {
  NormSet set;
  for (const LexiconSchema& schema : schemas) {
    if (set.by_name.count(schema.name))
      throw ValidationError("duplicate lexicon name '" + schema.name + "'");
    set.by_name.emplace(schema.name, load_norm_lexicon(schema));
  }
  return set;
}

std::optional<double> lookup(const NormLexicon& lex, const Token& token) {
  const std::string key = lex.key_kind == KeyKind::surface
                              ? fold_case(token.surface)
                              : token.lemma;
  auto it = lex.entries.find(key);
  if (it == lex.entries.end()) return std::nullopt;
  return it->second;
}

Coverage coverage(const NormLexicon& lex, const AnnotatedDocument& doc) {
  Coverage cov;
  for (const Sentence& s : doc.sentences) {
    for (const Token& t : s.tokens) {
      if (!t.is_word) continue;
      ++cov.words;
      if (lookup(lex, t)) ++cov.covered;
    }
  }
  cov.ratio = cov.words == 0
                  ? 0.0
                  : static_cast<double>(cov.covered) / cov.words;
  return cov;
}

}  // namespace lcx
