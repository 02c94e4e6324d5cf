#include "lcx/conllu.hpp"

#include <charconv>
#include <fstream>

#include "lcx/errors.hpp"
#include "lcx/textutil.hpp"

namespace lcx {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return out;
}

}  // namespace

std::map<std::string, AnnotatedDocument> read_conllu(
    const std::string& path, const SyllableCounter& syllables) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotation file: " + path);

  std::map<std::string, AnnotatedDocument> docs;
  std::string current_id;
  Sentence sentence;
  std::string line;
  std::size_t lineno = 0;

  auto flush_sentence = [&]() {
    if (sentence.tokens.empty()) return;
    if (current_id.empty())
      throw ParseError("sentence before any '# id =' header", lineno);
    AnnotatedDocument& doc = docs[current_id];
    doc.id = current_id;
    doc.tier = Tier::full;
    doc.sentences.push_back(std::move(sentence));
    sentence = Sentence{};
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence();
      continue;
    }
    if (line[0] == '#') {
      std::string_view rest = std::string_view(line).substr(1);
      while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      if (rest.substr(0, 2) == "id") {
        rest.remove_prefix(2);
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '='))
          rest.remove_prefix(1);
        if (rest.empty()) throw ParseError("empty id in annotation file", lineno);
        flush_sentence();
        current_id = std::string(rest);
        docs[current_id].id = current_id;
        docs[current_id].tier = Tier::full;
      }
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() < 8)
      throw ParseError("annotation row has fewer than 8 columns", lineno);

    std::string_view idcol = cols[0];
    // skip multiword ranges and empty nodes
    if (idcol.find('-') != std::string_view::npos ||
        idcol.find('.') != std::string_view::npos)
      continue;
    int index = 0;
    auto [p1, ec1] = std::from_chars(idcol.data(), idcol.data() + idcol.size(),
                                     index);
    if (ec1 != std::errc{} || p1 != idcol.data() + idcol.size())
      throw ParseError("bad token index '" + std::string(idcol) + "'", lineno);
    if (index != static_cast<int>(sentence.tokens.size()) + 1)
      throw ParseError("token indices must count up from 1", lineno);

    Token tok;
    tok.surface = std::string(cols[1]);
    tok.lemma = cols[2] == "_" ? fold_case(cols[1]) : fold_case(cols[2]);
    auto tag = upos_from_string(cols[3]);
    if (!tag) tag = upos_from_ptb(cols[3]);
    if (!tag)
      throw ParseError("unknown tag '" + std::string(cols[3]) + "'", lineno);
    tok.pos = *tag;
    tok.is_word = token_is_word(tok.surface);
    tok.syllables = tok.is_word ? syllables.count(tok.surface) : 0;

    if (cols[6] != "_") {
      int head = 0;
      auto [p2, ec2] =
          std::from_chars(cols[6].data(), cols[6].data() + cols[6].size(), head);
      if (ec2 != std::errc{} || p2 != cols[6].data() + cols[6].size() ||
          head < 0)
        throw ParseError("bad head index '" + std::string(cols[6]) + "'", lineno);
      tok.head = head;
    }
    if (cols[7] != "_") tok.dep_label = std::string(cols[7]);
    sentence.tokens.push_back(std::move(tok));
  }
  flush_sentence();

  // heads must stay inside their sentence
  for (auto& [id, doc] : docs) {
    for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
      const auto& toks = doc.sentences[s].tokens;
      for (const Token& t : toks) {
        if (t.head && *t.head > static_cast<int>(toks.size()))
          throw ParseError("head index out of range in record " + id +
                           ", sentence " + std::to_string(s + 1));
      }
    }
  }
  return docs;
}

}  // namespace lcx
