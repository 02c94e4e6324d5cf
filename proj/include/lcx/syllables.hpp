#pragma once
#include <string>
#include <string_view>
#include <unordered_map>

namespace lcx {

// Rule-based syllable estimator with an exception table.  Counting rule:
// case-fold, then count maximal runs of [aeiouy]; a word-final "e" drops one
// count unless it closes a consonant+"le" ending; words containing letters
// always count at least 1, letterless tokens count 0.
class SyllableCounter {
 public:
  SyllableCounter() = default;
  // exceptions_tsv: lines of "word<TAB>count", '#' comments allowed.
  static SyllableCounter from_tsv(std::string_view exceptions_tsv);

  int count(std::string_view word) const;
  std::size_t exception_count() const { return exceptions_.size(); }

 private:
  std::unordered_map<std::string, int> exceptions_;
};

// Counter backed by the bundled exception table.
const SyllableCounter& builtin_syllable_counter();

}  // namespace lcx
