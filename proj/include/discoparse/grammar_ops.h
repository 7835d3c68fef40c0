#ifndef DISCOPARSE_GRAMMAR_OPS_H_
#define DISCOPARSE_GRAMMAR_OPS_H_

#include <vector>

#include "discoparse/grammar.h"

namespace discoparse {

struct PropertyReport {
  bool binary = true;
  bool terminal_restricted = true;
  bool gap_explicit = true;
  bool ordered = true;
  bool epsilon_free = true;
  // Rule indices violating each property.
  std::vector<int> not_binary;
  std::vector<int> not_terminal_restricted;
  std::vector<int> not_gap_explicit;
  std::vector<int> not_ordered;
  std::vector<int> not_epsilon_free;
};

PropertyReport validate(const Grammar& g);

// Merges adjacent same-element variables into components of fresh
// nonterminals A^{l-r,...}. Throws Error(kNotOrdered),
// Error(kNameCollision).
Grammar make_gap_explicit(const Grammar& g);

// Replaces each terminal t outside A(a) -> eps rules by a preterminal PT_t.
Grammar isolate_terminals(const Grammar& g);

struct PruneResult {
  Grammar grammar;
  bool empty_language = false;
};

// Drops rules that are unproductive or unreachable from the start symbol and
// renormalizes probabilities per LHS.
PruneResult prune_useless(const Grammar& g);

// Splits rules of rank > 2 left to right into binary rules over fresh
// nonterminals. The new rules have probability 1.
Grammar binarize_rules(const Grammar& g);

}  // namespace discoparse

#endif  // DISCOPARSE_GRAMMAR_OPS_H_
