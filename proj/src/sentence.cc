#include "discoparse/sentence.h"

#include <sstream>

#include "discoparse/error.h"

namespace discoparse {

Sentence parse_tagged(std::string_view line) {
  Sentence out;
  std::istringstream in{std::string(line)};
  std::string item;
  while (in >> item) {
    size_t slash = item.rfind('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == item.size()) {
      throw Error(ErrorCode::kParseError, "expected token/POS, got '" + item +
                                              "'");
    }
    out.push_back({item.substr(0, slash), Symbol(item.substr(slash + 1))});
  }
  return out;
}

std::string format_tagged(const Sentence& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += s[i].token + "/" + s[i].pos.str();
  }
  return out;
}

Sentence sentence_of(const Tree& tree) {
  Sentence out;
  for (int i = 1; i <= tree.length(); ++i) {
    out.push_back({tree.token(i), tree.pos(i)});
  }
  return out;
}

}  // namespace discoparse
