#include "discoparse/grammar_ops.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "discoparse/error.h"

namespace discoparse {
namespace {

// Element index for every variable of the rule.
std::vector<int> owner_of(const Rule& r) {
  std::vector<int> owner(r.variable_count() + 1, -1);
  int top = 0;
  for (const RhsElement& e : r.rhs) {
    for (int v : e.vars) top = std::max(top, v + 1);
  }
  owner.assign(top, -1);
  for (size_t e = 0; e < r.rhs.size(); ++e) {
    for (int v : r.rhs[e].vars) owner[v] = static_cast<int>(e);
  }
  return owner;
}

int owner(const std::vector<int>& owners, const Term& t) {
  return t.is_variable ? owners[t.var] : -1;
}

bool has_terminal(const Rule& r) {
  for (const Component& c : r.args) {
    for (const Term& t : c) {
      if (!t.is_variable) return true;
    }
  }
  return false;
}

bool is_gap_explicit(const Rule& r) {
  std::vector<int> owners = owner_of(r);
  for (const Component& c : r.args) {
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      int a = owner(owners, c[i]);
      if (a >= 0 && a == owner(owners, c[i + 1])) return false;
    }
  }
  return true;
}

bool is_ordered(const Rule& r) {
  // Linear LHS position of each variable.
  std::map<int, int> where;
  int pos = 0;
  for (const Component& c : r.args) {
    for (const Term& t : c) {
      if (t.is_variable) where[t.var] = pos;
      ++pos;
    }
  }
  for (const RhsElement& e : r.rhs) {
    for (size_t i = 0; i + 1 < e.vars.size(); ++i) {
      if (where[e.vars[i]] > where[e.vars[i + 1]]) return false;
    }
  }
  return true;
}

std::set<Symbol> nonterminal_names(const Grammar& g) {
  std::set<Symbol> names;
  for (const auto& [nt, k] : g.fanouts()) names.insert(nt);
  names.insert(g.start());
  return names;
}

}  // namespace

PropertyReport validate(const Grammar& g) {
  PropertyReport rep;
  std::set<Symbol> on_rhs;
  for (const Rule& r : g.rules()) {
    for (const RhsElement& e : r.rhs) on_rhs.insert(e.nonterminal);
  }
  int start_eps_rules = 0;
  for (int i = 0; i < g.size(); ++i) {
    const Rule& r = g.rule(i);
    if (r.rank() > 2) rep.not_binary.push_back(i);
    if (has_terminal(r) && !r.is_lexical()) {
      rep.not_terminal_restricted.push_back(i);
    }
    if (!is_gap_explicit(r)) rep.not_gap_explicit.push_back(i);
    if (!is_ordered(r)) rep.not_ordered.push_back(i);
    bool empty_arg = std::any_of(r.args.begin(), r.args.end(),
                                 [](const Component& c) { return c.empty(); });
    if (!empty_arg) continue;
    bool start_eps = r.lhs == g.start() && r.fanout() == 1 && r.rank() == 0 &&
                     !on_rhs.count(g.start());
    if (start_eps && start_eps_rules++ == 0) continue;
    rep.not_epsilon_free.push_back(i);
  }
  rep.binary = rep.not_binary.empty();
  rep.terminal_restricted = rep.not_terminal_restricted.empty();
  rep.gap_explicit = rep.not_gap_explicit.empty();
  rep.ordered = rep.not_ordered.empty();
  rep.epsilon_free = rep.not_epsilon_free.empty();
  return rep;
}

Grammar make_gap_explicit(const Grammar& g) {
  if (!validate(g).ordered) {
    throw Error(ErrorCode::kNotOrdered, "make_gap_explicit needs an ordered "
                                        "grammar");
  }
  std::set<Symbol> taken = nonterminal_names(g);
  std::vector<Rule> rules = g.rules();
  std::map<std::pair<Symbol, std::vector<std::pair<int, int>>>, Symbol> made;

  for (size_t ri = 0; ri < rules.size(); ++ri) {
    Rule r = rules[ri];
    for (size_t k = 0; k < r.rhs.size(); ++k) {
      std::vector<int> owners = owner_of(r);
      // Position of each of element k's variables within its tuple.
      std::map<int, int> slot;
      for (size_t i = 0; i < r.rhs[k].vars.size(); ++i) {
        slot[r.rhs[k].vars[i]] = static_cast<int>(i);
      }
      std::vector<std::pair<int, int>> u;
      for (const Component& c : r.args) {
        size_t i = 0;
        while (i < c.size()) {
          if (owner(owners, c[i]) != static_cast<int>(k)) {
            ++i;
            continue;
          }
          size_t j = i;
          while (j + 1 < c.size() &&
                 owner(owners, c[j + 1]) == static_cast<int>(k)) {
            ++j;
          }
          if (j > i) u.emplace_back(slot[c[i].var], slot[c[j].var]);
          i = j + 1;
        }
      }
      if (u.empty()) continue;
      std::sort(u.begin(), u.end());

      Symbol a = r.rhs[k].nonterminal;
      auto key = std::make_pair(a, u);
      auto it = made.find(key);
      if (it == made.end()) {
        std::string name = a.str() + "^{";
        for (size_t i = 0; i < u.size(); ++i) {
          if (i > 0) name += ",";
          name += std::to_string(u[i].first + 1) + "-" +
                  std::to_string(u[i].second + 1);
        }
        name += "}";
        Symbol fresh(name);
        if (!taken.insert(fresh).second) {
          throw Error(ErrorCode::kNameCollision, name + " already exists");
        }
        it = made.emplace(key, fresh).first;
        size_t existing = rules.size();
        for (size_t rj = 0; rj < existing; ++rj) {
          if (rules[rj].lhs != a) continue;
          Rule dup = rules[rj];
          dup.lhs = fresh;
          std::vector<Component> merged;
          size_t run = 0;
          for (int c = 0; c < static_cast<int>(dup.args.size()); ++c) {
            if (run < u.size() && c == u[run].first) {
              Component joined;
              for (int d = u[run].first; d <= u[run].second; ++d) {
                joined.insert(joined.end(), dup.args[d].begin(),
                              dup.args[d].end());
              }
              merged.push_back(std::move(joined));
              c = u[run].second;
              ++run;
            } else {
              merged.push_back(dup.args[c]);
            }
          }
          dup.args = std::move(merged);
          rules.push_back(std::move(dup));
        }
      }
      // Keep the first variable of each run; drop the rest on both sides.
      std::set<int> dropped;
      for (const auto& [l, rr] : u) {
        for (int s = l + 1; s <= rr; ++s) dropped.insert(r.rhs[k].vars[s]);
      }
      for (Component& c : r.args) {
        c.erase(std::remove_if(c.begin(), c.end(),
                               [&](const Term& t) {
                                 return t.is_variable && dropped.count(t.var);
                               }),
                c.end());
      }
      auto& vars = r.rhs[k].vars;
      vars.erase(std::remove_if(vars.begin(), vars.end(),
                                [&](int v) { return dropped.count(v) > 0; }),
                 vars.end());
      r.rhs[k].nonterminal = it->second;
    }
    rules[ri] = std::move(r);
  }
  return prune_useless(Grammar(g.start(), std::move(rules))).grammar;
}

Grammar isolate_terminals(const Grammar& g) {
  std::set<Symbol> taken = nonterminal_names(g);
  std::vector<Rule> rules;
  std::vector<Symbol> fresh_terminals;
  std::set<Symbol> fresh_seen;
  for (const Rule& r : g.rules()) {
    if (r.is_lexical() || !has_terminal(r)) {
      rules.push_back(r);
      continue;
    }
    Rule out = r;
    int next_var = 0;
    for (const RhsElement& e : r.rhs) {
      for (int v : e.vars) next_var = std::max(next_var, v + 1);
    }
    for (Component& c : out.args) {
      for (Term& t : c) {
        if (t.is_variable) continue;
        Symbol pt("PT_" + t.terminal.str());
        if (fresh_seen.insert(t.terminal).second) {
          if (taken.count(pt)) {
            throw Error(ErrorCode::kNameCollision, pt.str() + " already exists");
          }
          fresh_terminals.push_back(t.terminal);
        }
        out.rhs.push_back({pt, {next_var}});
        t = Term::variable(next_var++);
      }
    }
    // RHS elements in order of their first LHS occurrence.
    std::map<int, int> where;
    int pos = 0;
    for (const Component& c : out.args) {
      for (const Term& t : c) where[t.var] = pos++;
    }
    std::stable_sort(out.rhs.begin(), out.rhs.end(),
                     [&](const RhsElement& a, const RhsElement& b) {
                       return where[a.vars.front()] < where[b.vars.front()];
                     });
    rules.push_back(std::move(out));
  }
  for (Symbol t : fresh_terminals) {
    Rule lex;
    lex.lhs = Symbol("PT_" + t.str());
    lex.args = {{Term::word(t)}};
    rules.push_back(std::move(lex));
  }
  return Grammar(g.start(), std::move(rules));
}

PruneResult prune_useless(const Grammar& g) {
  std::set<Symbol> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : g.rules()) {
      if (productive.count(r.lhs)) continue;
      bool ok = std::all_of(r.rhs.begin(), r.rhs.end(), [&](const RhsElement& e) {
        return productive.count(e.nonterminal) > 0;
      });
      if (ok) {
        productive.insert(r.lhs);
        changed = true;
      }
    }
  }
  auto usable = [&](const Rule& r) {
    return std::all_of(r.rhs.begin(), r.rhs.end(), [&](const RhsElement& e) {
      return productive.count(e.nonterminal) > 0;
    });
  };
  std::set<Symbol> reachable;
  if (productive.count(g.start())) {
    std::vector<Symbol> todo{g.start()};
    reachable.insert(g.start());
    while (!todo.empty()) {
      Symbol a = todo.back();
      todo.pop_back();
      for (const Rule& r : g.rules()) {
        if (r.lhs != a || !usable(r)) continue;
        for (const RhsElement& e : r.rhs) {
          if (reachable.insert(e.nonterminal).second) {
            todo.push_back(e.nonterminal);
          }
        }
      }
    }
  }
  std::vector<Rule> kept;
  std::map<Symbol, double> mass;
  for (const Rule& r : g.rules()) {
    if (reachable.count(r.lhs) && usable(r)) {
      kept.push_back(r);
      mass[r.lhs] += r.prob;
    }
  }
  for (Rule& r : kept) {
    double m = mass[r.lhs];
    if (std::abs(m - 1.0) > 1e-12) r.prob /= m;
  }
  PruneResult out;
  out.empty_language = !productive.count(g.start());
  out.grammar = Grammar(g.start(), std::move(kept));
  return out;
}

Grammar binarize_rules(const Grammar& g) {
  std::set<Symbol> taken = nonterminal_names(g);
  std::vector<Rule> rules;
  for (int ri = 0; ri < g.size(); ++ri) {
    Rule cur = g.rule(ri);
    int step = 0;
    while (cur.rank() > 2) {
      int next_var = 0;
      for (const RhsElement& e : cur.rhs) {
        for (int v : e.vars) next_var = std::max(next_var, v + 1);
      }
      std::set<int> group(cur.rhs[0].vars.begin(), cur.rhs[0].vars.end());
      group.insert(cur.rhs[1].vars.begin(), cur.rhs[1].vars.end());
      auto in_group = [&](const Term& t) {
        return t.is_variable && group.count(t.var);
      };

      Symbol fresh(cur.lhs.str() + "|" + std::to_string(ri) + "." +
                   std::to_string(step++));
      if (!taken.insert(fresh).second) {
        throw Error(ErrorCode::kNameCollision, fresh.str() + " already exists");
      }
      Rule part;
      part.lhs = fresh;
      part.rhs = {cur.rhs[0], cur.rhs[1]};
      RhsElement link{fresh, {}};
      for (Component& c : cur.args) {
        Component rewritten;
        size_t i = 0;
        while (i < c.size()) {
          if (!in_group(c[i])) {
            rewritten.push_back(c[i++]);
            continue;
          }
          Component run;
          while (i < c.size() && in_group(c[i])) run.push_back(c[i++]);
          part.args.push_back(std::move(run));
          link.vars.push_back(next_var);
          rewritten.push_back(Term::variable(next_var++));
        }
        c = std::move(rewritten);
      }
      cur.rhs.erase(cur.rhs.begin(), cur.rhs.begin() + 2);
      cur.rhs.insert(cur.rhs.begin(), std::move(link));
      rules.push_back(std::move(part));
    }
    rules.push_back(std::move(cur));
  }
  return Grammar(g.start(), std::move(rules));
}

}  // namespace discoparse
