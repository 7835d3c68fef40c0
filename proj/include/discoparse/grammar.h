#ifndef DISCOPARSE_GRAMMAR_H_
#define DISCOPARSE_GRAMMAR_H_

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "discoparse/symbol.h"

namespace discoparse {

// One argument symbol: a terminal or a rule-local variable.
struct Term {
  bool is_variable = false;
  int var = -1;
  Symbol terminal;

  static Term variable(int v) { return {true, v, Symbol()}; }
  static Term word(Symbol t) { return {false, -1, t}; }
  friend bool operator==(const Term&, const Term&) = default;
};

using Component = std::vector<Term>;

struct RhsElement {
  Symbol nonterminal;
  std::vector<int> vars;
  friend bool operator==(const RhsElement&, const RhsElement&) = default;
};

// A(args) -> rhs with probability `prob`. Variables are numbered 0..V-1 in
// order of first occurrence on the LHS once the rule sits in a Grammar.
struct Rule {
  Symbol lhs;
  std::vector<Component> args;
  std::vector<RhsElement> rhs;
  double prob = 1.0;

  // |log q|
  double weight() const { return std::abs(std::log(prob)); }
  int rank() const { return static_cast<int>(rhs.size()); }
  int fanout() const { return static_cast<int>(args.size()); }
  int variable_count() const;
  // A(a) -> eps
  bool is_lexical() const;
  std::string to_string() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Variable name used when printing: X, Y, Z, U, V, W, X6, X7, ...
std::string variable_name(int v);

class Grammar {
 public:
  Grammar() = default;
  // Renumbers variables canonically and checks the LCFRS invariants: every
  // variable exactly once on each side, consistent fan-outs, dim(start) = 1,
  // probabilities in (0, 1]. Throws Error(kInvalidGrammar) or
  // Error(kDuplicateVariable).
  Grammar(Symbol start, std::vector<Rule> rules);

  Symbol start() const { return start_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(int i) const { return rules_.at(i); }
  int size() const { return static_cast<int>(rules_.size()); }

  // 0 if the nonterminal is unknown.
  int fanout(Symbol nt) const;
  const std::map<Symbol, int>& fanouts() const { return fanouts_; }
  int max_fanout() const;
  bool has_nonterminal(Symbol nt) const { return fanouts_.count(nt) > 0; }

  std::vector<int> rules_for(Symbol lhs) const;
  // Nonterminals with at least one rule of the form A(a) -> eps.
  std::vector<Symbol> preterminals() const;

  // Nonterminals whose rule probabilities do not sum to 1 within tol.
  std::vector<Symbol> unnormalized(double tol) const;

 private:
  Symbol start_;
  std::vector<Rule> rules_;
  std::map<Symbol, int> fanouts_;
};

}  // namespace discoparse

#endif  // DISCOPARSE_GRAMMAR_H_
