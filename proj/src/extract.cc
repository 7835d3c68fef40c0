#include "discoparse/extract.h"

#include <functional>
#include <map>
#include <set>
#include <string>

#include "discoparse/error.h"

namespace discoparse {
namespace {

// Maximal contiguous blocks as (first, last) pairs.
std::vector<std::pair<int, int>> blocks(const IndexSet& s) {
  std::vector<std::pair<int, int>> out;
  for (int i : s.to_vector()) {
    if (!out.empty() && out.back().second + 1 == i) {
      out.back().second = i;
    } else {
      out.emplace_back(i, i);
    }
  }
  return out;
}

}  // namespace

Grammar extract_plcfrs(const std::vector<Tree>& treebank) {
  // Fan-outs seen per label, to split labels used with several fan-outs.
  std::map<Symbol, std::set<int>> seen;
  std::set<Symbol> roots;
  for (const Tree& t : treebank) {
    for (int i = 1; i <= t.length(); ++i) {
      int p = t.node(t.leaf_node(i)).parent;
      if (!t.is_preterminal(p)) {
        throw Error(ErrorCode::kMissingPreterminal,
                    "leaf " + std::to_string(i) + " in " + to_bracket(t));
      }
    }
    for (int v : t.internal_nodes()) {
      seen[t.node(v).label].insert(
          static_cast<int>(blocks(t.indices(v)).size()));
    }
    roots.insert(t.node(t.root()).label);
  }
  auto name = [&](Symbol label, int fanout) {
    if (seen[label].size() == 1 || fanout == 1) return label;
    return Symbol(label.str() + "_" + std::to_string(fanout));
  };

  std::map<std::string, std::pair<Rule, int>> counts;
  std::vector<std::string> order;
  auto count = [&](Rule r) {
    std::string key = r.to_string();
    auto it = counts.find(key);
    if (it == counts.end()) {
      counts.emplace(key, std::make_pair(std::move(r), 1));
      order.push_back(key);
    } else {
      ++it->second.second;
    }
  };

  for (const Tree& t : treebank) {
    for (int v : t.internal_nodes()) {
      const TreeNode& n = t.node(v);
      Rule r;
      auto vblocks = blocks(t.indices(v));
      r.lhs = name(n.label, static_cast<int>(vblocks.size()));
      if (t.is_preterminal(v)) {
        const std::string& tok = t.token(t.node(n.children[0]).leaf);
        r.args = {{Term::word(Symbol(tok.empty() ? "_" : tok))}};
        count(std::move(r));
        continue;
      }
      std::vector<int> kids = sorted_children(t, v);
      // Owning child of every position, and each child's block list.
      std::map<int, size_t> owner;
      std::vector<std::vector<std::pair<int, int>>> kid_blocks;
      for (size_t k = 0; k < kids.size(); ++k) {
        for (int i : t.indices(kids[k]).to_vector()) owner[i] = k;
        kid_blocks.push_back(blocks(t.indices(kids[k])));
      }
      r.rhs.resize(kids.size());
      for (size_t k = 0; k < kids.size(); ++k) {
        r.rhs[k].nonterminal =
            name(t.node(kids[k]).label, static_cast<int>(kid_blocks[k].size()));
        r.rhs[k].vars.assign(kid_blocks[k].size(), -1);
      }
      int next_var = 0;
      for (const auto& [lo, hi] : vblocks) {
        Component comp;
        int p = lo;
        while (p <= hi) {
          size_t k = owner.at(p);
          size_t b = 0;
          while (kid_blocks[k][b].first != p) ++b;
          r.rhs[k].vars[b] = next_var;
          comp.push_back(Term::variable(next_var++));
          p = kid_blocks[k][b].second + 1;
        }
        r.args.push_back(std::move(comp));
      }
      count(std::move(r));
    }
  }

  Symbol start = *roots.begin();
  std::vector<Rule> rules;
  if (roots.size() > 1) {
    std::string fresh = "ROOT";
    while (seen.count(Symbol(fresh))) fresh += "_";
    start = Symbol(fresh);
    std::map<Symbol, int> freq;
    for (const Tree& t : treebank) ++freq[t.node(t.root()).label];
    for (const auto& [label, c] : freq) {
      Rule r;
      r.lhs = start;
      r.args = {{Term::variable(0)}};
      r.rhs = {{label, {0}}};
      r.prob = static_cast<double>(c) / static_cast<double>(treebank.size());
      rules.push_back(std::move(r));
    }
  }
  std::map<Symbol, int> totals;
  for (const auto& [key, rc] : counts) totals[rc.first.lhs] += rc.second;
  for (const std::string& key : order) {
    auto& [r, c] = counts.at(key);
    r.prob = static_cast<double>(c) / static_cast<double>(totals[r.lhs]);
    rules.push_back(r);
  }
  return Grammar(start, std::move(rules));
}

Tree restore_labels(const Tree& tree) {
  TreeBuilder b;
  auto base = [](Symbol label) {
    const std::string& s = label.str();
    size_t cut = s.find_last_of('_');
    if (cut == std::string::npos || cut == 0 || cut + 1 == s.size()) {
      return label;
    }
    for (size_t i = cut + 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return label;
    }
    return Symbol(s.substr(0, cut));
  };
  std::function<int(int)> rec = [&](int id) -> int {
    const TreeNode& nd = tree.node(id);
    if (nd.leaf > 0) return b.add_leaf(nd.leaf, tree.token(nd.leaf));
    int v = b.add_node(base(nd.label));
    for (int c : nd.children) b.attach(v, rec(c));
    return v;
  };
  rec(tree.root());
  return std::move(b).build();
}

}  // namespace discoparse
