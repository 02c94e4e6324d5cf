#include "lcx/segment.hpp"

#include "lcx/builtin_data.hpp"
#include "lcx/textutil.hpp"

namespace lcx {

SentenceSegmenter SentenceSegmenter::from_tsv(std::string_view tsv) {
  SentenceSegmenter seg;
  std::size_t pos = 0;
  while (pos < tsv.size()) {
    std::size_t end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    std::string_view word =
        tab == std::string_view::npos ? line : line.substr(0, tab);
    if (!word.empty()) seg.abbreviations_.insert(fold_case(word));
  }
  return seg;
}

bool SentenceSegmenter::is_abbreviation(std::string_view word) const {
  return abbreviations_.count(fold_case(word)) > 0;
}

namespace {

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size()) {
    Codepoint cp = decode_utf8(s, b);
    if (!is_unicode_space(cp.value)) break;
    b += cp.length;
  }
  std::size_t e = s.size();
  while (e > b) {
    // walk back one codepoint: find the start byte
    std::size_t start = e - 1;
    while (start > b && (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80)
      --start;
    Codepoint cp = decode_utf8(s, start);
    if (!is_unicode_space(cp.value)) break;
    e = start;
  }
  return s.substr(b, e - b);
}

}  // namespace

std::vector<std::string> SentenceSegmenter::segment(std::string_view text) const {
  std::vector<std::string> out;
  std::size_t sent_start = 0;
  std::size_t i = 0;
  auto flush = [&](std::size_t end) {
    std::string_view sent = trim(text.substr(sent_start, end - sent_start));
    if (!sent.empty()) out.emplace_back(sent);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      i += decode_utf8(text, i).length;
      continue;
    }
    // extent of the terminator run
    std::size_t run_end = i;
    bool only_periods = true;
    while (run_end < text.size() && (text[run_end] == '.' ||
                                     text[run_end] == '!' ||
                                     text[run_end] == '?')) {
      if (text[run_end] != '.') only_periods = false;
      ++run_end;
    }
    // must be followed by whitespace, then an uppercase letter
    std::size_t j = run_end;
    bool saw_space = false;
    while (j < text.size()) {
      Codepoint cp = decode_utf8(text, j);
      if (!is_unicode_space(cp.value)) break;
      saw_space = true;
      j += cp.length;
    }
    bool boundary = saw_space && j < text.size() &&
                    starts_with_uppercase(text.substr(j));
    if (boundary && only_periods) {
      // word in front of the run: back to the previous whitespace
      std::size_t wb = i;
      while (wb > sent_start) {
        std::size_t start = wb - 1;
        while (start > sent_start &&
               (static_cast<unsigned char>(text[start]) & 0xC0) == 0x80)
          --start;
        if (is_unicode_space(decode_utf8(text, start).value)) break;
        wb = start;
      }
      std::string_view prev = text.substr(wb, i - wb);
      // ignore opening punctuation such as "(" or quotes
      while (!prev.empty()) {
        Codepoint cp = decode_utf8(prev, 0);
        if (is_letter(cp.value)) break;
        prev.remove_prefix(cp.length);
      }
      if (!prev.empty() && is_abbreviation(prev)) boundary = false;
    }
    if (boundary) {
      flush(run_end);
      sent_start = j;
      i = j;
    } else {
      i = run_end;
    }
  }
  flush(text.size());
  return out;
}

const SentenceSegmenter& builtin_segmenter() {
  static const SentenceSegmenter seg =
      SentenceSegmenter::from_tsv(builtin_data::abbreviations_tsv());
  return seg;
}

}  // namespace lcx
