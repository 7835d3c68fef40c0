#include "discoparse/sf.h"

#include <algorithm>

#include "discoparse/error.h"
#include "discoparse/tree_ops.h"

namespace discoparse {

std::string SfConfig::to_string() const {
  std::string out = "<{";
  for (size_t m = 0; m < memory.size(); ++m) {
    out += (m ? ", " : "") + memory[m].to_string();
  }
  return out + "}, " + focus.to_string() + ", " + std::to_string(i) + ", " +
         std::to_string(j) + ", " + k.to_string() + ">:" + std::to_string(step);
}

SfConfig sf_init(int n) {
  if (n < 1) throw Error(ErrorCode::kZeroLength, "empty input");
  SfConfig c;
  c.j = n + 1;
  c.k = ConstituentSet(n);
  return c;
}

bool is_legal(const SfConfig& c, const Action& a) {
  if (is_terminal(c)) return false;
  bool even = c.structural_step();
  switch (a.kind) {
    case ActionKind::kShift:
      return even && c.i < c.j;
    case ActionKind::kCombine:
      return even && std::find(c.memory.begin(), c.memory.end(), a.target) !=
                         c.memory.end();
    case ActionKind::kLabel:
      return !even && !a.label.empty();
    case ActionKind::kNoLabel:
      return !even && (c.i != c.j || !c.memory.empty());
    default:
      return false;
  }
}

std::vector<Action> legal(const SfConfig& c, const std::vector<Symbol>& labels) {
  std::vector<Action> out;
  if (is_terminal(c)) return out;
  if (c.structural_step()) {
    if (c.i < c.j) out.push_back(Action::shift());
    for (const IndexSet& s : c.memory) out.push_back(Action::combine(s));
  } else {
    if (is_legal(c, Action::no_label())) out.push_back(Action::no_label());
    for (Symbol x : labels) out.push_back(Action::label_with(x));
  }
  return out;
}

SfConfig apply(const SfConfig& c, const Action& a) {
  if (!is_legal(c, a)) {
    throw Error(ErrorCode::kIllegalAction,
                a.to_string() + " in " + c.to_string());
  }
  SfConfig next = c;
  switch (a.kind) {
    case ActionKind::kShift:
      if (!next.focus.empty()) {
        next.memory.insert(std::upper_bound(next.memory.begin(),
                                            next.memory.end(), next.focus,
                                            right_order_less),
                           next.focus);
      }
      next.focus = IndexSet{next.i++};
      break;
    case ActionKind::kCombine:
      next.memory.erase(
          std::find(next.memory.begin(), next.memory.end(), a.target));
      next.focus |= a.target;
      break;
    case ActionKind::kLabel:
      next.k.insert({a.label, next.focus});
      break;
    default:
      break;
  }
  ++next.step;
  return next;
}

bool is_terminal(const SfConfig& c) {
  return c.i == c.j && c.k.contains(IndexSet::span(1, c.j - 1));
}

Tree decode(const SfConfig& c, const std::vector<std::string>& tokens) {
  if (!is_terminal(c)) throw Error(ErrorCode::kNotTerminal, c.to_string());
  return normalize_unaries(constituents_to_tree(c.k, tokens),
                           UnaryDirection::kExpand);
}

Action sf_static_action(const SfConfig& c, const ConstituentSet& gold) {
  if (!c.structural_step()) {
    const Constituent* hit = gold.find(c.focus);
    return hit ? Action::label_with(hit->label) : Action::no_label();
  }
  if (!c.focus.empty()) {
    auto p = max_subset_parent(gold, c.focus);
    if (p) {
      for (const IndexSet& s : c.memory) {
        auto q = max_subset_parent(gold, s);
        if (q && q->indices == p->indices) return Action::combine(s);
      }
    }
  }
  return Action::shift();
}

std::vector<Action> sf_static_oracle(const ConstituentSet& gold) {
  if (!validate_constituent_set(gold).complete) {
    throw Error(ErrorCode::kNotComplete, "gold constituents");
  }
  SfConfig c = sf_init(gold.length());
  std::vector<Action> out;
  while (!is_terminal(c)) {
    Action a = sf_static_action(c, gold);
    c = apply(c, a);
    out.push_back(a);
  }
  return out;
}

bool reachable(const SfConfig& c, const Constituent& target) {
  if (c.k.contains(target)) {
    throw Error(ErrorCode::kAlreadyBuilt, target.to_string());
  }
  const IndexSet& g = target.indices;
  if (g.empty() || g.max() > c.length()) return false;
  if (c.focus.max() > g.max()) return false;
  auto compatible = [&](const IndexSet& s) {
    return s.subset_of(g) || !s.intersects(g);
  };
  if (!compatible(c.focus)) return false;
  for (const IndexSet& s : c.memory) {
    if (!compatible(s)) return false;
  }
  return !c.structural_step() || c.focus != g;
}

Constituent next_constituent(const SfConfig& c, const ConstituentSet& gold) {
  if (is_terminal(c)) throw Error(ErrorCode::kNotTerminal, c.to_string());
  for (const Constituent& m : gold.members()) {
    if (c.k.contains(m)) continue;
    if (reachable(c, m)) return m;
  }
  throw Error(ErrorCode::kIncompleteGold,
              "no reachable gold constituent from " + c.to_string());
}

std::vector<Action> dynamic_oracle(const SfConfig& c,
                                   const ConstituentSet& gold) {
  if (is_terminal(c)) throw Error(ErrorCode::kNotTerminal, c.to_string());
  if (!c.structural_step()) {
    const Constituent* hit = gold.find(c.focus);
    return {hit ? Action::label_with(hit->label) : Action::no_label()};
  }
  Constituent next = next_constituent(c, gold);
  std::vector<Action> out;
  for (const IndexSet& s : c.memory) {
    if ((c.focus | s).subset_of(next.indices)) out.push_back(Action::combine(s));
  }
  if (next.indices.max() > c.focus.max()) out.push_back(Action::shift());
  return out;
}

Action dynamic_oracle_pick(const SfConfig& c, const ConstituentSet& gold) {
  std::vector<Action> options = dynamic_oracle(c, gold);
  const Action* best = nullptr;
  for (const Action& a : options) {
    if (a.kind != ActionKind::kCombine) continue;
    if (!best || a.target.max() > best->target.max() ||
        (a.target.max() == best->target.max() && a.target > best->target)) {
      best = &a;
    }
  }
  if (best) return *best;
  if (options.empty()) {
    throw Error(ErrorCode::kIllegalAction, "no oracle action at " + c.to_string());
  }
  return options.front();
}

}  // namespace discoparse
