#pragma once
#include <string>
#include <string_view>
#include <vector>

namespace lcx {

// Splits one sentence into surface tokens: whitespace split, then leading and
// trailing punctuation marks are detached one codepoint at a time, then
// common English clitics ('s n't 're 've 'll 'd 'm) come off the tail.
std::vector<std::string> tokenize(std::string_view sentence);

}  // namespace lcx
