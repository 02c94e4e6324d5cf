#pragma once
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace lcx {

// Splits raw text into sentences.  A run of [.!?] ends a sentence when it is
// followed by whitespace and then an uppercase letter.  A run consisting only
// of periods does not split when the word directly in front of it is on the
// abbreviation stoplist.  Text with no terminator forms one final sentence.
class SentenceSegmenter {
 public:
  SentenceSegmenter() = default;
  // stoplist_tsv: one case-folded abbreviation per line (first tab-field).
  static SentenceSegmenter from_tsv(std::string_view stoplist_tsv);

  std::vector<std::string> segment(std::string_view text) const;
  bool is_abbreviation(std::string_view word) const;
  std::size_t stoplist_size() const { return abbreviations_.size(); }

 private:
  std::unordered_set<std::string> abbreviations_;
};

const SentenceSegmenter& builtin_segmenter();

}  // namespace lcx
