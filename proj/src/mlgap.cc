#include "discoparse/mlgap.h"

#include "discoparse/error.h"
#include "discoparse/tree_ops.h"

namespace discoparse {

namespace {

std::string render(const std::vector<IndexSet>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    out += (i ? ", " : "") + v[i].to_string();
  }
  return out + "]";
}

const char* state_name(MlGapState q) {
  switch (q) {
    case MlGapState::kStruct:
      return "Struct";
    case MlGapState::kStructPrime:
      return "Struct'";
    case MlGapState::kLabel:
      return "Label";
  }
  return "?";
}

// The minimal gold strict superset of s, as an index set (empty if none).
IndexSet parent_of(const ConstituentSet& gold, const IndexSet& s) {
  auto p = max_subset_parent(gold, s);
  return p ? p->indices : IndexSet();
}

}  // namespace

std::string MlGapConfig::to_string() const {
  return "<" + render(stack) + ", " + render(deque) + ", " +
         std::to_string(i) + ", " + std::to_string(j) + ", " + k.to_string() + ">:" +
         state_name(state);
}

MlGapConfig mlgap_init(int n) {
  if (n < 1) throw Error(ErrorCode::kZeroLength, "empty input");
  MlGapConfig c;
  c.j = n;
  c.k = ConstituentSet(n);
  return c;
}

bool is_legal(const MlGapConfig& c, const Action& a) {
  if (is_terminal(c)) return false;
  switch (a.kind) {
    case ActionKind::kShift:
      return c.state == MlGapState::kStruct && c.i < c.j;
    case ActionKind::kMerge:
      return c.state != MlGapState::kLabel && !c.stack.empty() &&
             !c.deque.empty();
    case ActionKind::kGap:
      return c.state != MlGapState::kLabel && c.stack.size() >= 2;
    case ActionKind::kLabel:
      return c.state == MlGapState::kLabel && c.deque.size() == 1 &&
             !a.label.empty() && !c.k.contains(c.deque.back());
    case ActionKind::kNoLabel:
      return c.state == MlGapState::kLabel && c.deque.size() == 1 &&
             !(c.i == c.j && c.stack.empty());
    default:
      return false;
  }
}

std::vector<Action> legal(const MlGapConfig& c,
                          const std::vector<Symbol>& labels) {
  std::vector<Action> out;
  for (const Action& a : {Action::shift(), Action::merge(), Action::gap(),
                          Action::no_label()}) {
    if (is_legal(c, a)) out.push_back(a);
  }
  for (Symbol x : labels) {
    if (is_legal(c, Action::label_with(x))) out.push_back(Action::label_with(x));
  }
  return out;
}

MlGapConfig apply(const MlGapConfig& c, const Action& a) {
  if (!is_legal(c, a)) {
    throw Error(ErrorCode::kIllegalAction,
                a.to_string() + " in " + c.to_string());
  }
  MlGapConfig next = c;
  switch (a.kind) {
    case ActionKind::kShift:
      next.stack.insert(next.stack.end(), next.deque.begin(), next.deque.end());
      next.deque = {IndexSet{++next.i}};
      next.state = MlGapState::kLabel;
      break;
    case ActionKind::kMerge: {
      IndexSet merged = next.stack.back() | next.deque.back();
      next.stack.pop_back();
      next.deque.pop_back();
      next.stack.insert(next.stack.end(), next.deque.begin(), next.deque.end());
      next.deque = {merged};
      next.state = MlGapState::kLabel;
      break;
    }
    case ActionKind::kGap:
      next.deque.insert(next.deque.begin(), next.stack.back());
      next.stack.pop_back();
      next.state = MlGapState::kStructPrime;
      break;
    case ActionKind::kLabel:
      next.k.insert({a.label, next.deque.back()});
      next.state = MlGapState::kStruct;
      break;
    case ActionKind::kNoLabel:
      next.state = MlGapState::kStruct;
      break;
    default:
      break;
  }
  return next;
}

bool is_terminal(const MlGapConfig& c) {
  return c.i == c.j && c.k.contains(IndexSet::span(1, c.j));
}

Tree decode(const MlGapConfig& c, const std::vector<std::string>& tokens) {
  if (!is_terminal(c)) throw Error(ErrorCode::kNotTerminal, c.to_string());
  return normalize_unaries(constituents_to_tree(c.k, tokens),
                           UnaryDirection::kExpand);
}

std::vector<Action> mlgap_oracle(const ConstituentSet& gold) {
  if (!validate_constituent_set(gold).complete) {
    throw Error(ErrorCode::kNotComplete, "gold constituents");
  }
  MlGapConfig c = mlgap_init(gold.length());
  std::vector<Action> out;
  auto step = [&](const Action& a) {
    c = apply(c, a);
    out.push_back(a);
  };
  while (!is_terminal(c)) {
    if (c.state != MlGapState::kLabel) {
      IndexSet p = c.deque.empty() ? IndexSet() : parent_of(gold, c.deque.back());
      int found = -1;
      if (!p.empty()) {
        for (int t = static_cast<int>(c.stack.size()) - 1; t >= 0; --t) {
          if (parent_of(gold, c.stack[t]) == p) {
            found = static_cast<int>(c.stack.size()) - 1 - t;
            break;
          }
        }
      }
      if (found == 0) {
        step(Action::merge());
      } else if (found > 0) {
        for (int g = 0; g < found; ++g) step(Action::gap());
      } else {
        step(Action::shift());
      }
    } else {
      const Constituent* hit = gold.find(c.deque.back());
      step(hit ? Action::label_with(hit->label) : Action::no_label());
    }
  }
  return out;
}

}  // namespace discoparse
