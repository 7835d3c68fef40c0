#ifndef DISCOPARSE_SENTENCE_H_
#define DISCOPARSE_SENTENCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "discoparse/symbol.h"
#include "discoparse/tree.h"

namespace discoparse {

struct TaggedToken {
  std::string token;
  Symbol pos;
};

using Sentence = std::vector<TaggedToken>;

// Whitespace-separated token/POS pairs; the last '/' splits token from tag.
// Throws Error(kParseError).
Sentence parse_tagged(std::string_view line);
std::string format_tagged(const Sentence& s);

// Tokens and preterminal labels of a tree with a POS layer.
Sentence sentence_of(const Tree& tree);

}  // namespace discoparse

#endif  // DISCOPARSE_SENTENCE_H_
