#ifndef DISCOPARSE_LANGUAGE_H_
#define DISCOPARSE_LANGUAGE_H_

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "discoparse/grammar.h"
#include "discoparse/tree.h"

namespace discoparse {

using String = std::vector<Symbol>;
// A string tuple, one entry per component.
using Yield = std::vector<String>;

// Composition: substitutes the RHS yields into the LHS arguments.
Yield compose(const Rule& rule, const std::vector<Yield>& rhs);

// Best (lowest) |log q| derivation weight of every string in L(G) whose
// length is at most max_len.
std::map<String, double> generate_weighted(const Grammar& g, int max_len);
std::set<String> generate_strings(const Grammar& g, int max_len);

String to_string_vector(const std::string& spaced);
std::string join(const String& s, const char* sep = " ");

// Samples a derivation top-down, choosing rules by probability. Returns
// nullopt when the derivation would exceed max_depth. Terminals become leaf
// tokens; lexical rules A(a) -> eps become preterminals.
std::optional<Tree> sample_tree(const Grammar& g, std::mt19937_64& rng,
                                int max_depth = 12);

}  // namespace discoparse

#endif  // DISCOPARSE_LANGUAGE_H_
