#pragma once
#include <map>
#include <string>

#include "lcx/document.hpp"
#include "lcx/syllables.hpp"

namespace lcx {

// Reads tab-separated dependency annotation (ten-column CoNLL-U layout).
// "# id = <record id>" comments bind the sentences that follow to a record.
// Multiword-token ranges (1-2) and empty nodes (1.1) are skipped.  Column 4
// may hold either a universal tag or a treebank tag.  Syllables are filled
// in with the given counter.
std::map<std::string, AnnotatedDocument> read_conllu(
    const std::string& path, const SyllableCounter& syllables);

}  // namespace lcx
