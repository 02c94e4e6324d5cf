#include <doctest.h>

#include "lcx/corpus.hpp"
#include "lcx/errors.hpp"

#include "test_support.hpp"

using namespace lcx;

namespace {
LoadResult load_text(const std::string& name, const std::string& body) {
  std::string dir = lcxtest::tmp_dir("corpus_" + name);
  std::string path = dir + "/pairs.jsonl";
  lcxtest::spit(path, body);
  return load_pairs(path);
}

PairRecord rec(const std::string& id, int prompt_words, int cont_words) {
  PairRecord r;
  r.id = id;
  r.model = "m";
  for (int i = 0; i < prompt_words; ++i)
    r.prompt += (i ? " w" : "w");
  for (int i = 0; i < cont_words; ++i)
    r.continuation += (i ? " w" : "w");
  return r;
}
}  // namespace

TEST_SUITE_BEGIN("corpus");

TEST_CASE("fixture corpus loads cleanly") {
  LoadResult r = load_pairs(lcxtest::fixture_path("synthetic_pairs.jsonl"));
  CHECK(r.issues.empty());
  CHECK(r.corpus.records.size() == 100);
  CHECK(r.corpus.records[0].id == "pair_000");
  CHECK(r.corpus.model_labels() == std::vector<std::string>{"human"});
}

TEST_CASE("bad lines are reported and skipped") {
  LoadResult r = load_text("bad",
      "{\"id\": \"a\", \"prompt\": \"p\", \"continuation\": \"c\", \"model\": \"m\"}\n"
      "not json at all\n"
      "[1, 2]\n"
      "{\"id\": \"b\", \"prompt\": \"p\", \"model\": \"m\"}\n"
      "{\"id\": \"\", \"prompt\": \"p\", \"continuation\": \"c\", \"model\": \"m\"}\n"
      "{\"id\": \"c\", \"prompt\": 7, \"continuation\": \"c\", \"model\": \"m\"}\n"
      "{\"id\": \"d\", \"prompt\": \"p\", \"continuation\": \"c\", \"model\": \"m\"}\n");
  CHECK(r.corpus.records.size() == 2);
  REQUIRE(r.issues.size() == 5);
  CHECK(r.issues[0].line == 2);
  CHECK(r.issues[1].line == 3);
  CHECK(r.issues[2].line == 4);
  CHECK(r.issues[3].line == 5);
  CHECK(r.issues[4].line == 6);
}

TEST_CASE("duplicate ids are a hard error") {
  CHECK_THROWS_AS(load_text("dup",
      "{\"id\": \"a\", \"prompt\": \"p\", \"continuation\": \"c\", \"model\": \"m\"}\n"
      "{\"id\": \"a\", \"prompt\": \"q\", \"continuation\": \"d\", \"model\": \"m\"}\n"),
      ValidationError);
}

TEST_CASE("missing file is an io error") {
  CHECK_THROWS_AS(load_pairs("/nonexistent/nope.jsonl"), IoError);
}

TEST_CASE("length filter bounds are inclusive") {
  Corpus c;
  c.records = {rec("exact", 30, 150), rec("upper", 30, 300),
               rec("short_p", 29, 200), rec("short_c", 30, 149),
               rec("long_c", 30, 301)};
  FilterResult r = filter_pairs(c);
  REQUIRE(r.corpus.records.size() == 2);
  CHECK(r.corpus.records[0].id == "exact");
  CHECK(r.corpus.records[1].id == "upper");
  CHECK(r.report.input == 5);
  CHECK(r.report.kept == 2);
  CHECK(r.report.dropped_short_prompt == 1);
  CHECK(r.report.dropped_short_continuation == 1);
  CHECK(r.report.dropped_long_continuation == 1);
}

TEST_CASE("first failing rule wins the drop attribution") {
  Corpus c;
  c.records = {rec("both", 10, 10)};  // short prompt AND short continuation
  FilterResult r = filter_pairs(c);
  CHECK(r.report.dropped_short_prompt == 1);
  CHECK(r.report.dropped_short_continuation == 0);
}

TEST_CASE("custom thresholds") {
  Corpus c;
  c.records = {rec("a", 3, 5), rec("b", 2, 5)};
  FilterResult r = filter_pairs(c, FilterSettings{3, 4, 6});
  CHECK(r.corpus.records.size() == 1);
  CHECK(r.report.kept_by_model.at("m") == 1);
}

TEST_CASE("write and reload round trip") {
  Corpus c;
  c.records = {rec("a", 3, 5), rec("b", 2, 5)};
  c.records[0].prompt = "caf\xc3\xa9 \"quoted\"";
  std::string dir = lcxtest::tmp_dir("corpus_rt");
  write_pairs(c, dir + "/out.jsonl");
  LoadResult back = load_pairs(dir + "/out.jsonl");
  REQUIRE(back.corpus.records.size() == 2);
  CHECK(back.corpus.records[0].prompt == c.records[0].prompt);
  CHECK(back.corpus.records[1].continuation == c.records[1].continuation);
}

TEST_CASE("filter report json carries settings counts and issues") {
  Corpus c;
  c.records = {rec("a", 30, 150)};
  FilterResult r = filter_pairs(c);
  std::vector<LineIssue> issues = {{7, "boom"}};
  auto j = nlohmann::json::parse(
      filter_report_json(r.report, FilterSettings{}, issues));
  CHECK(j["settings"]["min_prompt_words"] == 30);
  CHECK(j["input"] == 1);
  CHECK(j["kept"] == 1);
  CHECK(j["input_issues"][0]["line"] == 7);
}

TEST_SUITE_END();
