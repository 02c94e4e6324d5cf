#pragma once
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcx/corpus.hpp"
#include "lcx/document.hpp"

namespace lcx {

// Whether a norm table is keyed by the case-folded surface form or by lemma.
enum class KeyKind { surface, lemma };

std::string_view to_string(KeyKind kind);
std::optional<KeyKind> key_kind_from_string(std::string_view name);

// Where and how to read one norm table.
struct LexiconSchema {
  std::string name;
  std::string path;        // relative paths resolve against the profile file
  char delimiter = '\t';
  std::string key_column;
  std::string value_column;
  KeyKind key_kind = KeyKind::surface;
};

// One word-to-value table (age-of-acquisition norms, frequency norms, ...).
struct NormLexicon {
  std::string name;
  KeyKind key_kind = KeyKind::surface;
  std::unordered_map<std::string, double> entries;
  std::size_t duplicate_keys = 0;         // later rows for a key are ignored
  std::vector<LineIssue> skipped_rows;    // rows with unparseable values
};

// Loads one table.  Header row names the columns; rows with a non-numeric
// value cell are reported in skipped_rows and dropped.
NormLexicon load_norm_lexicon(const LexiconSchema& schema);

// Reads a JSON array of schema objects: name, path, delimiter, key_column,
// value_column, key_kind.
std::vector<LexiconSchema> load_lexicon_profiles(const std::string& path);

struct NormSet {
  std::map<std::string, NormLexicon> by_name;
  const NormLexicon* find(const std::string& name) const {
    auto it = by_name.find(name);
    return it == by_name.end() ? nullptr : &it->second;
  }
};

NormSet load_norm_set(const std::vector<LexiconSchema>& schemas);

// Value for one token, keyed per the lexicon's key kind.
std::optional<double> lookup(const NormLexicon& lex, const Token& token);

struct Coverage {
  double ratio = 0.0;      // covered word tokens / word tokens
  std::size_t covered = 0;
  std::size_t words = 0;   // no words at all leaves ratio at 0
};

Coverage coverage(const NormLexicon& lex, const AnnotatedDocument& doc);

}  // namespace lcx
