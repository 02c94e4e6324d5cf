#include <doctest.h>

#include "lcx/conllu.hpp"
#include "lcx/errors.hpp"
#include "lcx/syllables.hpp"

#include "test_support.hpp"

using namespace lcx;

namespace {
std::map<std::string, AnnotatedDocument> read_text(const std::string& name,
                                                   const std::string& body) {
  std::string dir = lcxtest::tmp_dir("conllu_" + name);
  std::string path = dir + "/t.conllu";
  lcxtest::spit(path, body);
  return read_conllu(path, builtin_syllable_counter());
}
}  // namespace

TEST_SUITE_BEGIN("conllu");

TEST_CASE("fixture file loads with dependencies and lemmas") {
  auto docs = read_conllu(lcxtest::fixture_path("full/sample.conllu"),
                          builtin_syllable_counter());
  REQUIRE(docs.size() == 4);
  const AnnotatedDocument& a = docs.at("full_a");
  CHECK(a.tier == Tier::full);
  REQUIRE(a.sentences.size() == 3);
  const Sentence& s1 = a.sentences[0];
  REQUIRE(s1.tokens.size() == 7);
  CHECK(s1.tokens[1].surface == "engineer");
  CHECK(s1.tokens[1].lemma == "engineer");
  CHECK(s1.tokens[1].pos == UPos::NOUN);
  REQUIRE(s1.tokens[1].dep_label.has_value());
  CHECK(*s1.tokens[1].dep_label == "nsubj");
  REQUIRE(s1.tokens[1].head.has_value());
  CHECK(*s1.tokens[1].head == 3);
  CHECK(s1.tokens[2].lemma == "fix");
  CHECK(*s1.tokens[2].head == 0);  // root
  CHECK(s1.tokens[6].pos == UPos::PUNCT);
  CHECK_FALSE(s1.tokens[6].is_word);
  CHECK(s1.tokens[1].syllables == 3);
}

TEST_CASE("treebank tags in column four are accepted") {
  auto docs = read_text("ptb",
      "# id = d\n"
      "1\tdogs\tdog\tNNS\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tran\trun\tVBD\t_\t_\t0\troot\t_\t_\n");
  const auto& d = docs.at("d");
  CHECK(d.sentences[0].tokens[0].pos == UPos::NOUN);
  CHECK(d.sentences[0].tokens[1].pos == UPos::VERB);
}

TEST_CASE("multiword ranges and empty nodes are skipped") {
  auto docs = read_text("mwt",
      "# id = d\n"
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\tdo\tAUX\t_\t_\t0\troot\t_\t_\n"
      "2\tn't\tnot\tPART\t_\t_\t1\tadvmod\t_\t_\n"
      "2.1\tghost\tghost\tNOUN\t_\t_\t_\t_\t_\t_\n");
  REQUIRE(docs.at("d").sentences.size() == 1);
  CHECK(docs.at("d").sentences[0].tokens.size() == 2);
}

TEST_CASE("underscore lemma falls back to the folded surface") {
  auto docs = read_text("lemma",
      "# id = d\n"
      "1\tDogs\t_\tNOUN\t_\t_\t0\troot\t_\t_\n");
  CHECK(docs.at("d").sentences[0].tokens[0].lemma == "dogs");
}

TEST_CASE("token rows before a header are rejected") {
  CHECK_THROWS_AS(
      read_text("nohdr", "1\tdog\tdog\tNOUN\t_\t_\t0\troot\t_\t_\n"),
      ParseError);
}

TEST_CASE("bad indices and heads are rejected") {
  CHECK_THROWS_AS(read_text("idx",
      "# id = d\n"
      "2\tdog\tdog\tNOUN\t_\t_\t0\troot\t_\t_\n"),
      ParseError);
  CHECK_THROWS_AS(read_text("head",
      "# id = d\n"
      "1\tdog\tdog\tNOUN\t_\t_\t9\tnsubj\t_\t_\n"),
      ParseError);
}

TEST_CASE("unknown tags are rejected") {
  CHECK_THROWS_AS(read_text("tag",
      "# id = d\n"
      "1\tdog\tdog\tWIBBLE\t_\t_\t0\troot\t_\t_\n"),
      ParseError);
}

TEST_SUITE_END();
