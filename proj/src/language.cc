#include "discoparse/language.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "discoparse/error.h"

namespace discoparse {

Yield compose(const Rule& rule, const std::vector<Yield>& rhs) {
  std::vector<const String*> value(rule.variable_count(), nullptr);
  for (size_t e = 0; e < rule.rhs.size(); ++e) {
    const auto& vars = rule.rhs[e].vars;
    for (size_t i = 0; i < vars.size(); ++i) value[vars[i]] = &rhs[e][i];
  }
  Yield out;
  out.reserve(rule.args.size());
  for (const Component& c : rule.args) {
    String s;
    for (const Term& t : c) {
      if (t.is_variable) {
        s.insert(s.end(), value[t.var]->begin(), value[t.var]->end());
      } else {
        s.push_back(t.terminal);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct Entry {
  const Yield* yield;
  double weight;
  int length;
};

int yield_length(const Yield& y) {
  int n = 0;
  for (const String& s : y) n += static_cast<int>(s.size());
  return n;
}

}  // namespace

std::map<String, double> generate_weighted(const Grammar& g, int max_len) {
  std::map<Symbol, std::map<Yield, double>> table;
  bool changed = true;
  while (changed) {
    changed = false;
    // Snapshot of the current tables, shortest yields first.
    std::map<Symbol, std::vector<Entry>> snap;
    for (auto& [nt, ys] : table) {
      auto& v = snap[nt];
      for (auto& [y, w] : ys) v.push_back({&y, w, yield_length(y)});
      std::stable_sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
        return a.length < b.length;
      });
    }
    std::vector<std::pair<Symbol, std::pair<Yield, double>>> found;
    for (const Rule& r : g.rules()) {
      int terminals = 0;
      for (const Component& c : r.args) {
        for (const Term& t : c) terminals += t.is_variable ? 0 : 1;
      }
      int budget = max_len - terminals;
      if (budget < 0) continue;
      std::vector<Yield> chosen(r.rhs.size());
      std::function<void(size_t, int, double)> rec = [&](size_t e, int len,
                                                         double w) {
        if (e == r.rhs.size()) {
          found.push_back({r.lhs, {compose(r, chosen), w + r.weight()}});
          return;
        }
        auto it = snap.find(r.rhs[e].nonterminal);
        if (it == snap.end()) return;
        for (const Entry& ent : it->second) {
          if (len + ent.length > budget) break;
          chosen[e] = *ent.yield;
          rec(e + 1, len + ent.length, w + ent.weight);
        }
      };
      rec(0, 0, 0.0);
    }
    for (auto& [nt, yw] : found) {
      auto& t = table[nt];
      auto it = t.find(yw.first);
      if (it == t.end()) {
        t.emplace(std::move(yw.first), yw.second);
        changed = true;
      } else if (yw.second < it->second - 1e-12) {
        it->second = yw.second;
        changed = true;
      }
    }
  }
  std::map<String, double> out;
  for (const auto& [y, w] : table[g.start()]) {
    if (y.size() == 1) out.emplace(y[0], w);
  }
  return out;
}

std::set<String> generate_strings(const Grammar& g, int max_len) {
  std::set<String> out;
  for (const auto& [s, w] : generate_weighted(g, max_len)) out.insert(s);
  return out;
}

String to_string_vector(const std::string& spaced) {
  String out;
  std::istringstream in(spaced);
  std::string tok;
  while (in >> tok) out.emplace_back(tok);
  return out;
}

std::string join(const String& s, const char* sep) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += sep;
    out += s[i].str();
  }
  return out;
}

std::optional<Tree> sample_tree(const Grammar& g, std::mt19937_64& rng,
                                int max_depth) {
  struct Node {
    Symbol label;
    bool leaf = false;
    std::string token;
    std::vector<int> kids;
  };
  std::vector<Node> nodes;
  std::map<Symbol, std::vector<int>> by_lhs;
  for (int i = 0; i < g.size(); ++i) by_lhs[g.rule(i).lhs].push_back(i);

  // Returns the node id and its components as sequences of leaf node ids.
  std::function<std::optional<std::pair<int, std::vector<std::vector<int>>>>(
      Symbol, int)>
      expand = [&](Symbol nt, int depth)
      -> std::optional<std::pair<int, std::vector<std::vector<int>>>> {
    auto it = by_lhs.find(nt);
    if (depth > max_depth || it == by_lhs.end()) return std::nullopt;
    std::vector<double> probs;
    for (int ri : it->second) probs.push_back(g.rule(ri).prob);
    std::discrete_distribution<int> pick(probs.begin(), probs.end());
    const Rule& r = g.rule(it->second[pick(rng)]);
    int id = static_cast<int>(nodes.size());
    nodes.push_back({nt, false, {}, {}});
    std::vector<const std::vector<int>*> value(r.variable_count());
    std::vector<std::vector<std::vector<int>>> kid_comps;
    kid_comps.reserve(r.rhs.size());
    for (const RhsElement& e : r.rhs) {
      auto sub = expand(e.nonterminal, depth + 1);
      if (!sub) return std::nullopt;
      nodes[id].kids.push_back(sub->first);
      kid_comps.push_back(std::move(sub->second));
    }
    for (size_t e = 0; e < r.rhs.size(); ++e) {
      for (size_t i = 0; i < r.rhs[e].vars.size(); ++i) {
        value[r.rhs[e].vars[i]] = &kid_comps[e][i];
      }
    }
    std::vector<std::vector<int>> comps;
    for (const Component& c : r.args) {
      std::vector<int> seq;
      for (const Term& t : c) {
        if (t.is_variable) {
          seq.insert(seq.end(), value[t.var]->begin(), value[t.var]->end());
        } else {
          int leaf = static_cast<int>(nodes.size());
          nodes.push_back({Symbol(), true, t.terminal.str(), {}});
          nodes[id].kids.push_back(leaf);
          seq.push_back(leaf);
        }
      }
      comps.push_back(std::move(seq));
    }
    return std::make_pair(id, std::move(comps));
  };

  auto top = expand(g.start(), 0);
  if (!top || top->second.size() != 1 || top->second[0].empty()) {
    return std::nullopt;
  }
  std::vector<int> position(nodes.size(), 0);
  for (size_t i = 0; i < top->second[0].size(); ++i) {
    position[top->second[0][i]] = static_cast<int>(i) + 1;
  }
  TreeBuilder b;
  std::function<int(int)> build = [&](int v) -> int {
    const Node& n = nodes[v];
    if (n.leaf) return b.add_leaf(position[v], n.token);
    int id = b.add_node(n.label);
    for (int k : n.kids) b.attach(id, build(k));
    return id;
  };
  build(top->first);
  return std::move(b).build();
}

}  // namespace discoparse
