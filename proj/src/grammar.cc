#include "discoparse/grammar.h"

#include <algorithm>
#include <set>

#include "discoparse/error.h"

namespace discoparse {

int Rule::variable_count() const {
  int n = 0;
  for (const RhsElement& e : rhs) n += static_cast<int>(e.vars.size());
  return n;
}

bool Rule::is_lexical() const {
  return rhs.empty() && args.size() == 1 && args[0].size() == 1 &&
         !args[0][0].is_variable;
}

std::string variable_name(int v) {
  static const char* kNames[] = {"X", "Y", "Z", "U", "V", "W"};
  if (v >= 0 && v < 6) return kNames[v];
  return "X" + std::to_string(v);
}

std::string Rule::to_string() const {
  std::string out = lhs.str() + "(";
  for (size_t c = 0; c < args.size(); ++c) {
    if (c > 0) out += ", ";
    for (size_t i = 0; i < args[c].size(); ++i) {
      if (i > 0) out += ' ';
      const Term& t = args[c][i];
      out += t.is_variable ? variable_name(t.var)
                           : "'" + t.terminal.str() + "'";
    }
  }
  out += ") -> ";
  if (rhs.empty()) return out + "eps";
  for (size_t e = 0; e < rhs.size(); ++e) {
    if (e > 0) out += ' ';
    out += rhs[e].nonterminal.str() + "(";
    for (size_t i = 0; i < rhs[e].vars.size(); ++i) {
      if (i > 0) out += ", ";
      out += variable_name(rhs[e].vars[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

void note_fanout(std::map<Symbol, int>& fanouts, Symbol nt, int k,
                 const Rule& r) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidGrammar,
                nt.str() + " has fan-out 0 in " + r.to_string());
  }
  auto [it, fresh] = fanouts.emplace(nt, k);
  if (!fresh && it->second != k) {
    throw Error(ErrorCode::kInvalidGrammar,
                nt.str() + " used with fan-out " + std::to_string(it->second) +
                    " and " + std::to_string(k));
  }
}

Rule canonical(const Rule& r) {
  Rule out = r;
  std::map<int, int> renumber;
  for (Component& c : out.args) {
    for (Term& t : c) {
      if (!t.is_variable) continue;
      auto [it, fresh] =
          renumber.emplace(t.var, static_cast<int>(renumber.size()));
      if (!fresh) {
        throw Error(ErrorCode::kDuplicateVariable,
                    variable_name(t.var) + " twice on the LHS of " +
                        r.to_string());
      }
      t.var = it->second;
    }
  }
  std::set<int> seen;
  for (RhsElement& e : out.rhs) {
    for (int& v : e.vars) {
      if (!seen.insert(v).second) {
        throw Error(ErrorCode::kDuplicateVariable,
                    variable_name(v) + " twice on the RHS of " + r.to_string());
      }
      auto it = renumber.find(v);
      if (it == renumber.end()) {
        throw Error(ErrorCode::kInvalidGrammar,
                    variable_name(v) + " missing from the LHS of " +
                        r.to_string());
      }
      v = it->second;
    }
  }
  if (seen.size() != renumber.size()) {
    throw Error(ErrorCode::kInvalidGrammar,
                "LHS variable missing from the RHS of " + r.to_string());
  }
  return out;
}

}  // namespace

Grammar::Grammar(Symbol start, std::vector<Rule> rules) : start_(start) {
  rules_.reserve(rules.size());
  for (const Rule& r : rules) {
    if (!(r.prob > 0.0 && r.prob <= 1.0)) {
      throw Error(ErrorCode::kInvalidGrammar,
                  "probability outside (0,1] in " + r.to_string());
    }
    Rule c = canonical(r);
    note_fanout(fanouts_, c.lhs, c.fanout(), c);
    for (const RhsElement& e : c.rhs) {
      note_fanout(fanouts_, e.nonterminal, static_cast<int>(e.vars.size()), c);
    }
    rules_.push_back(std::move(c));
  }
  if (fanout(start_) > 1) {
    throw Error(ErrorCode::kInvalidGrammar,
                "start symbol " + start_.str() + " must have fan-out 1");
  }
}

int Grammar::fanout(Symbol nt) const {
  auto it = fanouts_.find(nt);
  return it == fanouts_.end() ? 0 : it->second;
}

int Grammar::max_fanout() const {
  int m = 0;
  for (const auto& [nt, k] : fanouts_) m = std::max(m, k);
  return m;
}

std::vector<int> Grammar::rules_for(Symbol lhs) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (rules_[i].lhs == lhs) out.push_back(i);
  }
  return out;
}

std::vector<Symbol> Grammar::preterminals() const {
  std::set<Symbol> out;
  for (const Rule& r : rules_) {
    if (r.is_lexical()) out.insert(r.lhs);
  }
  return {out.begin(), out.end()};
}

std::vector<Symbol> Grammar::unnormalized(double tol) const {
  std::map<Symbol, double> sums;
  for (const Rule& r : rules_) sums[r.lhs] += r.prob;
  std::vector<Symbol> out;
  for (const auto& [nt, s] : sums) {
    if (std::abs(s - 1.0) > tol) out.push_back(nt);
  }
  return out;
}

}  // namespace discoparse
