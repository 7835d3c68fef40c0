#include "discoparse/chart.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_map>

#include "discoparse/error.h"
#include "discoparse/grammar_ops.h"

namespace discoparse {

std::string ChartItem::to_string() const {
  std::string out = nonterminal.str() + "[";
  for (size_t i = 0; i < ranges.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(ranges[i].lo) + ":" + std::to_string(ranges[i].hi);
  }
  return out + "]";
}

namespace {

struct ItemHash {
  size_t operator()(const ChartItem& it) const {
    size_t h = it.nonterminal.id();
    for (const Range& r : it.ranges) {
      h = h * 1000003u ^ static_cast<size_t>(r.lo * 131 + r.hi);
    }
    return h;
  }
};

// Per binary rule and popped side: which component end of the popped item
// fixes the start of the partner's first component, if any.
struct Link {
  int popped_component = -1;
};

struct RuleTemplate {
  int rule;
  Link as_first;   // popped item is RHS element 0
  Link as_second;  // popped item is RHS element 1
};

class Parser {
 public:
  Parser(const Grammar& g, const Sentence& input, ChartOptions options)
      : g_(g), input_(input), n_(static_cast<int>(input.size())) {
    PropertyReport rep = validate(g);
    if (!rep.binary || !rep.terminal_restricted || !rep.epsilon_free) {
      throw Error(ErrorCode::kGrammarPropertyViolation,
                  std::string("chart parsing needs a ") +
                      (!rep.binary                ? "binary"
                       : !rep.terminal_restricted ? "terminal-restricted"
                                                  : "epsilon-free") +
                      " grammar");
    }
    if (g.max_fanout() > options.max_fanout) {
      throw Error(ErrorCode::kGrammarPropertyViolation,
                  "fan-out " + std::to_string(g.max_fanout()) +
                      " exceeds the cap of " +
                      std::to_string(options.max_fanout));
    }
    ordered_ = rep.ordered;
    std::vector<Symbol> pts = g.preterminals();
    std::set<Symbol> preterminals(pts.begin(), pts.end());
    for (const TaggedToken& t : input) {
      if (!preterminals.count(t.pos)) {
        throw Error(ErrorCode::kUnknownTag, t.pos.str());
      }
    }
    for (int ri = 0; ri < g.size(); ++ri) {
      const Rule& r = g.rule(ri);
      if (r.rank() == 1) {
        unary_[r.rhs[0].nonterminal].push_back(ri);
      } else if (r.rank() == 2) {
        RuleTemplate t{ri, link(r, 0, 1), link(r, 1, 0)};
        first_[r.rhs[0].nonterminal].push_back(t);
        second_[r.rhs[1].nonterminal].push_back(t);
      }
    }
  }

  ChartResult run() {
    ChartResult res;
    for (int i = 0; i < n_; ++i) {
      ChartEntry e;
      e.item = {input_[i].pos, {{i, i + 1}}};
      e.position = i;
      offer(std::move(e));
    }
    ChartItem goal{g_.start(), {{0, n_}}};
    while (!agenda_.empty()) {
      auto [w, seq, id] = agenda_.top();
      agenda_.pop();
      if (charted_[id] || w != entries_[id].weight) continue;
      charted_[id] = true;
      order_.push_back(id);
      const ChartItem& item = entries_[id].item;
      by_nt_[item.nonterminal].push_back(id);
      by_start_[{item.nonterminal, item.ranges[0].lo}].push_back(id);
      if (item == goal) {
        res.success = true;
        res.weight = entries_[id].weight;
        res.tree = build_tree(id);
        break;
      }
      expand(id);
    }
    std::unordered_map<int, int> position;
    for (int id : order_) {
      position[id] = static_cast<int>(res.chart.size());
      res.chart.push_back(entries_[id]);
      for (int& a : res.chart.back().antecedents) a = position.at(a);
    }
    res.pushes = pushes_;
    return res;
  }

 private:
  using Queued = std::tuple<double, int, int>;

  // Finds an LHS adjacency "var of `popped` at component j, then var of
  // `other` at component 0".
  static Link link(const Rule& r, int popped, int other) {
    const auto& pv = r.rhs[popped].vars;
    int first_other = r.rhs[other].vars[0];
    for (const Component& c : r.args) {
      for (size_t i = 0; i + 1 < c.size(); ++i) {
        if (c[i + 1].var != first_other) continue;
        auto it = std::find(pv.begin(), pv.end(), c[i].var);
        if (it != pv.end()) return {static_cast<int>(it - pv.begin())};
      }
    }
    return {};
  }

  void offer(ChartEntry e) {
    auto it = index_.find(e.item);
    if (it == index_.end()) {
      int id = static_cast<int>(entries_.size());
      index_.emplace(e.item, id);
      entries_.push_back(std::move(e));
      charted_.push_back(false);
      seq_.push_back(id);
      agenda_.emplace(entries_[id].weight, id, id);
      ++pushes_;
      return;
    }
    int id = it->second;
    // Ties keep the first deduction.
    if (charted_[id] || e.weight >= entries_[id].weight) return;
    entries_[id] = std::move(e);
    agenda_.emplace(entries_[id].weight, seq_[id], id);
    ++pushes_;
  }

  // LHS ranges of rule r over the given RHS range tuples, if contiguous,
  // non-overlapping (and ordered, for ordered grammars).
  bool compose(const Rule& r, const std::vector<const std::vector<Range>*>& rhs,
               std::vector<Range>& out) const {
    Range var[8];
    for (size_t e = 0; e < r.rhs.size(); ++e) {
      const auto& vars = r.rhs[e].vars;
      for (size_t i = 0; i < vars.size(); ++i) var[vars[i]] = (*rhs[e])[i];
    }
    out.clear();
    for (const Component& c : r.args) {
      Range acc = var[c[0].var];
      for (size_t i = 1; i < c.size(); ++i) {
        const Range& next = var[c[i].var];
        if (next.lo != acc.hi) return false;
        acc.hi = next.hi;
      }
      out.push_back(acc);
    }
    if (ordered_) {
      for (size_t i = 0; i + 1 < out.size(); ++i) {
        if (out[i].hi > out[i + 1].lo) return false;
      }
      return true;
    }
    for (size_t i = 0; i < out.size(); ++i) {
      for (size_t j = i + 1; j < out.size(); ++j) {
        if (out[i].lo < out[j].hi && out[j].lo < out[i].hi) return false;
      }
    }
    return true;
  }

  void deduce(int ri, std::vector<int> ants) {
    const Rule& r = g_.rule(ri);
    std::vector<const std::vector<Range>*> rhs;
    double w = r.weight();
    for (int a : ants) {
      rhs.push_back(&entries_[a].item.ranges);
      w += entries_[a].weight;
    }
    std::vector<Range> lhs;
    if (!compose(r, rhs, lhs)) return;
    ChartEntry e;
    e.item = {r.lhs, std::move(lhs)};
    e.weight = w;
    e.rule = ri;
    e.antecedents = std::move(ants);
    offer(std::move(e));
  }

  void expand(int id) {
    Symbol nt = entries_[id].item.nonterminal;
    if (auto it = unary_.find(nt); it != unary_.end()) {
      for (int ri : it->second) deduce(ri, {id});
    }
    if (auto it = first_.find(nt); it != first_.end()) {
      for (const RuleTemplate& t : it->second) {
        Symbol other = g_.rule(t.rule).rhs[1].nonterminal;
        for (int o : partners(id, other, t.as_first)) deduce(t.rule, {id, o});
      }
    }
    if (auto it = second_.find(nt); it != second_.end()) {
      for (const RuleTemplate& t : it->second) {
        Symbol other = g_.rule(t.rule).rhs[0].nonterminal;
        for (int o : partners(id, other, t.as_second)) deduce(t.rule, {o, id});
      }
    }
  }

  std::vector<int> partners(int id, Symbol other, Link link) const {
    if (link.popped_component >= 0) {
      int start = entries_[id].item.ranges[link.popped_component].hi;
      auto it = by_start_.find({other, start});
      return it == by_start_.end() ? std::vector<int>{} : it->second;
    }
    auto it = by_nt_.find(other);
    return it == by_nt_.end() ? std::vector<int>{} : it->second;
  }

  Tree build_tree(int goal) const {
    TreeBuilder b;
    std::function<int(int)> rec = [&](int id) -> int {
      const ChartEntry& e = entries_[id];
      int v = b.add_node(e.item.nonterminal);
      if (e.rule < 0) {
        b.attach(v, b.add_leaf(e.position + 1, input_[e.position].token));
      } else {
        for (int a : e.antecedents) b.attach(v, rec(a));
      }
      return v;
    };
    rec(goal);
    return std::move(b).build();
  }

  const Grammar& g_;
  const Sentence& input_;
  int n_;
  bool ordered_ = false;
  std::map<Symbol, std::vector<int>> unary_;
  std::map<Symbol, std::vector<RuleTemplate>> first_;
  std::map<Symbol, std::vector<RuleTemplate>> second_;

  std::vector<ChartEntry> entries_;
  std::vector<bool> charted_;
  std::vector<int> seq_;
  std::vector<int> order_;
  std::unordered_map<ChartItem, int, ItemHash> index_;
  std::priority_queue<Queued, std::vector<Queued>, std::greater<Queued>>
      agenda_;
  std::map<Symbol, std::vector<int>> by_nt_;
  std::map<std::pair<Symbol, int>, std::vector<int>> by_start_;
  int pushes_ = 0;
};

}  // namespace

ChartResult chart_parse(const Grammar& g, const Sentence& input,
                        ChartOptions options) {
  if (input.empty()) throw Error(ErrorCode::kZeroLength, "empty input");
  return Parser(g, input, options).run();
}

bool recognize(const Grammar& g, const Sentence& input, ChartOptions options) {
  return chart_parse(g, input, options).success;
}

Sentence tags_only(const std::vector<Symbol>& tags) {
  Sentence s;
  for (Symbol t : tags) s.push_back({t.str(), t});
  return s;
}

}  // namespace discoparse
