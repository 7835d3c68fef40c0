// Hand-built grammars and a random PLCFRS generator.
#ifndef DISCOPARSE_TESTS_SUPPORT_GRAMMARS_H_
#define DISCOPARSE_TESTS_SUPPORT_GRAMMARS_H_

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "discoparse/grammar.h"
#include "discoparse/io.h"

namespace discoparse::testing {

inline const char* kCrossing =
    "0.1\tS(X Y Z) -> A(X, Y) B(Z)\n"
    "0.9\tS(X Y Z) -> A(X, Z) B(Y)\n"
    "1\tA(X, Y) -> B(X) B(Y)\n"
    "1\tB('a') -> eps\n";

// { w ccc w | w in {a,b}+ }
inline const char* kCopyCcc =
    "1\tS(U V W X) -> A(U, X) B(V, W)\n"
    "0.25\tA('a' U, 'a' X) -> A(U, X)\n"
    "0.25\tA('b' U, 'b' X) -> A(U, X)\n"
    "0.25\tA('a', 'a') -> eps\n"
    "0.25\tA('b', 'b') -> eps\n"
    "0.5\tB('c', 'c' 'c') -> eps\n"
    "0.5\tB('c' 'c', 'c') -> eps\n";

inline Grammar crossing() { return read_grammar(kCrossing); }
inline Grammar copy_ccc() { return read_grammar(kCopyCcc); }

// Ten grammars for the normalization checks; all ordered.
inline std::vector<std::string> normalization_suite() {
  return {
      kCopyCcc,
      kCrossing,
      // Adjacent components of a single element.
      "1\tS(X Y) -> A(X, Y)\n1\tA('a', 'b') -> eps\n",
      // Adjacency propagating through a unary rule.
      "1\tS(X Y Z) -> A(X, Y) C(Z)\n1\tA(X, Y) -> D(X, Y)\n"
      "0.5\tD('a' X, 'b' Y) -> D(X, Y)\n0.5\tD('a', 'b') -> eps\n"
      "1\tC('c') -> eps\n",
      // Cross-serial dependencies a^n b^m c^n d^m.
      "1\tS(X Y Z W) -> A(X, Z) B(Y, W)\n"
      "0.5\tA('a' X, 'c' Y) -> A(X, Y)\n0.5\tA('a', 'c') -> eps\n"
      "0.5\tB('b' X, 'd' Y) -> B(X, Y)\n0.5\tB('b', 'd') -> eps\n",
      // Orphan and unproductive nonterminals.
      "0.5\tS(X) -> A(X)\n0.5\tS(X) -> E(X)\n1\tA('a') -> eps\n"
      "1\tC('c') -> eps\n1\tE(X Y) -> E(X) E(Y)\n",
      // Unary chains and a fan-out 3 nonterminal.
      "1\tS(X Y Z) -> T(X, Y, Z)\n1\tT(X, Y, Z) -> U(X, Z) B(Y)\n"
      "0.5\tU(X, Y) -> A(X) A(Y)\n0.5\tU(X Y, Z) -> A(X) V(Y, Z)\n"
      "1\tV(X, Y) -> A(X) A(Y)\n1\tA('a') -> eps\n1\tB('b') -> eps\n",
      // Terminals mixed into long rules.
      "1\tS('x' X 'y' Y) -> A(X) B(Y)\n0.5\tA('a') -> eps\n"
      "0.5\tA('a' X) -> A(X)\n1\tB('b' 'b') -> eps\n",
      // Copy language w w over {a, b}.
      "1\tS(X Y) -> C(X, Y)\n0.3\tC('a' X, 'a' Y) -> C(X, Y)\n"
      "0.3\tC('b' X, 'b' Y) -> C(X, Y)\n0.2\tC('a', 'a') -> eps\n"
      "0.2\tC('b', 'b') -> eps\n",
      // Nested fan-out 2 with both adjacency patterns.
      "0.6\tS(X Y Z) -> P(X, Z) Q(Y)\n0.4\tS(X Y) -> P(X, Y)\n"
      "0.5\tP(X Y, Z) -> Q(X) R(Y, Z)\n0.5\tP(X, Y) -> Q(X) Q(Y)\n"
      "1\tR(X, Y) -> Q(X) Q(Y)\n0.5\tQ('q') -> eps\n0.5\tQ('r') -> eps\n",
  };
}

// Random binary, terminal-restricted, epsilon-free PLCFRS with at most
// `max_rules` non-lexical rules and fan-out <= 2. Preterminals P and Q
// yield the terminals P and Q with probability 1, so tag strings and
// terminal strings coincide.
inline Grammar random_grammar(std::mt19937_64& rng, int max_rules = 6,
                              bool ordered_only = false) {
  const Symbol s("S"), a("A"), b("B"), p("P"), q("Q");
  std::uniform_int_distribution<int> coin(0, 1);
  int fa = 1 + coin(rng), fb = 1 + coin(rng);
  auto fanout = [&](Symbol x) {
    if (x == a) return fa;
    if (x == b) return fb;
    return 1;
  };
  std::vector<Symbol> lhs_pool{s, a, b};
  std::vector<Symbol> rhs_pool{s, a, b, p, q, p, q};
  std::vector<Rule> rules;
  int n = std::uniform_int_distribution<int>(1, max_rules)(rng);
  for (int i = 0; i < n; ++i) {
    Rule r;
    r.lhs = i == 0 ? s : lhs_pool[std::uniform_int_distribution<int>(0, 2)(rng)];
    int rank = 1 + coin(rng);
    std::vector<int> vars;
    int next = 0;
    for (int e = 0; e < rank; ++e) {
      Symbol x = rhs_pool[std::uniform_int_distribution<int>(0, 6)(rng)];
      RhsElement el{x, {}};
      for (int c = 0; c < fanout(x); ++c) {
        el.vars.push_back(next);
        vars.push_back(next++);
      }
      r.rhs.push_back(el);
    }
    int k = fanout(r.lhs);
    if (static_cast<int>(vars.size()) < k) {
      --i;
      continue;
    }
    if (!ordered_only) std::shuffle(vars.begin(), vars.end(), rng);
    // Split into k non-empty components at random cut points.
    std::vector<int> cuts;
    for (int c = 1; c < static_cast<int>(vars.size()); ++c) cuts.push_back(c);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(static_cast<int>(vars.size()));
    int from = 0;
    for (int cut : cuts) {
      Component comp;
      for (int v = from; v < cut; ++v) comp.push_back(Term::variable(vars[v]));
      r.args.push_back(comp);
      from = cut;
    }
    rules.push_back(r);
  }
  std::map<Symbol, std::vector<double>> mass;
  for (Rule& r : rules) {
    r.prob = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    mass[r.lhs].push_back(r.prob);
  }
  for (Rule& r : rules) {
    double total = 0;
    for (double m : mass[r.lhs]) total += m;
    r.prob /= total;
  }
  for (Symbol t : {p, q}) {
    Rule lex;
    lex.lhs = t;
    lex.args = {{Term::word(t)}};
    rules.push_back(lex);
  }
  return Grammar(s, rules);
}

}  // namespace discoparse::testing

#endif  // DISCOPARSE_TESTS_SUPPORT_GRAMMARS_H_
