#pragma once
#include <string_view>

namespace lcx::builtin_data {

// Contents of the bundled data tables, embedded at build time.
std::string_view tag_lexicon_tsv();
std::string_view abbreviations_tsv();
std::string_view syllable_exceptions_tsv();

}  // namespace lcx::builtin_data
