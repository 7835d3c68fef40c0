#include "discoparse/swap.h"

#include <functional>

#include "discoparse/error.h"
#include "discoparse/tree_ops.h"

namespace discoparse {

namespace {

std::string render(const SrTree& t) {
  if (t->leaf > 0) return std::to_string(t->leaf);
  std::string out = "(" + t->label.str();
  for (const SrTree& c : t->children) out += " " + render(c);
  return out + ")";
}

SrTree make_internal(Symbol label, std::vector<SrTree> children) {
  auto n = std::make_shared<SrNode>();
  n->label = label;
  for (const SrTree& c : children) n->indices |= c->indices;
  n->unary_depth = children.size() == 1 ? children[0]->unary_depth + 1 : 0;
  n->children = std::move(children);
  return n;
}

[[noreturn]] void illegal(const SrConfig& c, const Action& a) {
  throw Error(ErrorCode::kIllegalAction,
              a.to_string() + " in " + c.to_string());
}

}  // namespace

std::string SrConfig::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < stack.size(); ++i) {
    out += (i ? ", " : "") + render(stack[i]);
  }
  out += "] [";
  for (size_t i = 0; i < buffer.size(); ++i) {
    out += (i ? ", " : "") + render(buffer[i]);
  }
  return out + "]";
}

SrConfig sr_init(int n, SrOptions options) {
  if (n < 1) throw Error(ErrorCode::kZeroLength, "empty input");
  SrConfig c;
  c.length = n;
  c.options = options;
  for (int i = 1; i <= n; ++i) {
    auto leaf = std::make_shared<SrNode>();
    leaf->leaf = i;
    leaf->indices = IndexSet{i};
    c.buffer.push_back(std::move(leaf));
  }
  return c;
}

bool is_legal(const SrConfig& c, const Action& a) {
  size_t s = c.stack.size();
  switch (a.kind) {
    case ActionKind::kShift:
      return !c.buffer.empty();
    case ActionKind::kReduce:
      return s >= 2 && !a.label.empty();
    case ActionKind::kReduceUnary:
      return s >= 1 && !a.label.empty() &&
             c.stack.back()->unary_depth < c.options.max_unary;
    case ActionKind::kSwap:
      return c.options.swap && s >= 2 &&
             c.stack[s - 2]->indices.min() < c.stack[s - 1]->indices.min();
    default:
      return false;
  }
}

std::vector<Action> legal(const SrConfig& c, const std::vector<Symbol>& labels) {
  std::vector<Action> out;
  if (is_legal(c, Action::shift())) out.push_back(Action::shift());
  for (Symbol x : labels) {
    if (is_legal(c, Action::reduce(x))) out.push_back(Action::reduce(x));
  }
  for (Symbol x : labels) {
    if (is_legal(c, Action::reduce_unary(x))) {
      out.push_back(Action::reduce_unary(x));
    }
  }
  if (is_legal(c, Action::swap())) out.push_back(Action::swap());
  return out;
}

SrConfig apply(const SrConfig& c, const Action& a) {
  if (!is_legal(c, a)) illegal(c, a);
  SrConfig next = c;
  switch (a.kind) {
    case ActionKind::kShift:
      next.stack.push_back(next.buffer.front());
      next.buffer.erase(next.buffer.begin());
      break;
    case ActionKind::kReduce: {
      SrTree s0 = next.stack.back();
      next.stack.pop_back();
      SrTree s1 = next.stack.back();
      next.stack.back() = make_internal(a.label, {s1, s0});
      break;
    }
    case ActionKind::kReduceUnary:
      next.stack.back() = make_internal(a.label, {next.stack.back()});
      break;
    case ActionKind::kSwap: {
      SrTree s0 = next.stack.back();
      next.stack.pop_back();
      next.buffer.insert(next.buffer.begin(), next.stack.back());
      next.stack.back() = s0;
      break;
    }
    default:
      illegal(c, a);
  }
  return next;
}

bool is_terminal(const SrConfig& c) {
  return c.buffer.empty() && c.stack.size() == 1 && c.stack[0]->leaf == 0;
}

Tree decode(const SrConfig& c, const std::vector<std::string>& tokens) {
  if (!is_terminal(c)) {
    throw Error(ErrorCode::kNotTerminal, c.to_string());
  }
  TreeBuilder b;
  std::function<int(const SrTree&)> rec = [&](const SrTree& t) -> int {
    if (t->leaf > 0) {
      return b.add_leaf(t->leaf, tokens.empty() ? std::string()
                                                : tokens.at(t->leaf - 1));
    }
    int v = b.add_node(t->label);
    for (const SrTree& ch : t->children) b.attach(v, rec(ch));
    return v;
  };
  rec(c.stack[0]);
  return std::move(b).build();
}

SwapStrategy parse_swap_strategy(const std::string& name) {
  if (name == "eager") return SwapStrategy::kEager;
  if (name == "lazy") return SwapStrategy::kLazy;
  if (name == "lazier") return SwapStrategy::kLazier;
  if (name == "projective") return SwapStrategy::kProjective;
  throw Error(ErrorCode::kParseError, "unknown swap strategy '" + name + "'");
}

SwapConditions swap_conditions(const Tree& gold, int s1, int s0, int b0) {
  SwapConditions out;
  out.eager = precedes_g(gold, s0, s1);
  out.lazy = out.eager && (b0 < 0 || mpc(gold, s0) != mpc(gold, b0));
  out.lazier = out.eager && cpc(gold, s1) == cpc(gold, s0);
  return out;
}

SwapOracleRun swap_oracle_run(const Tree& gold, SwapStrategy strategy,
                              int max_unary) {
  if (!gold.is_binary()) throw Error(ErrorCode::kNotBinary, to_bracket(gold));
  if (strategy == SwapStrategy::kProjective) {
    for (int v : gold.internal_nodes()) {
      if (!gold.indices(v).contiguous()) {
        throw Error(ErrorCode::kProjectiveStrategyOnDiscontinuousTree,
                    to_bracket(gold));
      }
    }
  }
  for (int v : gold.internal_nodes()) {
    int chain = 0;
    for (int u = v; gold.node(u).children.size() == 1; u = gold.node(u).children[0]) {
      ++chain;
      if (gold.node(gold.node(u).children[0]).is_leaf()) break;
    }
    if (chain > max_unary) {
      throw Error(ErrorCode::kCapExceeded,
                  "unary chain of length " + std::to_string(chain));
    }
  }

  SrOptions options;
  options.swap = strategy != SwapStrategy::kProjective;
  options.max_unary = max_unary;
  SrConfig c = sr_init(gold.length(), options);
  // Gold node ids mirroring the stack and buffer.
  std::vector<int> stack;
  std::vector<int> buffer;
  for (int i = 1; i <= gold.length(); ++i) buffer.push_back(gold.leaf_node(i));

  SwapOracleRun run;
  auto step = [&](const Action& a) {
    c = apply(c, a);
    run.actions.push_back(a);
  };
  while (!(buffer.empty() && stack.size() == 1 && stack[0] == gold.root())) {
    size_t s = stack.size();
    if (s >= 2) {
      int p = gold.node(stack[s - 1]).parent;
      if (p >= 0 && gold.node(p).children.size() == 2 &&
          gold.node(stack[s - 2]).parent == p) {
        step(Action::reduce(gold.node(p).label));
        stack.pop_back();
        stack.back() = p;
        continue;
      }
    }
    if (s >= 1) {
      int p = gold.node(stack[s - 1]).parent;
      if (p >= 0 && gold.node(p).children.size() == 1) {
        step(Action::reduce_unary(gold.node(p).label));
        stack.back() = p;
        continue;
      }
    }
    if (s >= 2) {
      SwapConditions cond = swap_conditions(gold, stack[s - 2], stack[s - 1],
                                            buffer.empty() ? -1 : buffer[0]);
      run.checks.push_back(cond);
      bool allowed = strategy == SwapStrategy::kEager    ? cond.eager
                     : strategy == SwapStrategy::kLazy   ? cond.lazy
                     : strategy == SwapStrategy::kLazier ? cond.lazier
                                                         : false;
      if (allowed && is_legal(c, Action::swap())) {
        step(Action::swap());
        int s0 = stack.back();
        stack.pop_back();
        buffer.insert(buffer.begin(), stack.back());
        stack.back() = s0;
        continue;
      }
    }
    if (buffer.empty()) {
      throw Error(ErrorCode::kIllegalAction,
                  "oracle stuck at " + c.to_string() + " for " +
                      to_bracket(gold));
    }
    step(Action::shift());
    stack.push_back(buffer.front());
    buffer.erase(buffer.begin());
  }
  return run;
}

std::vector<Action> swap_oracle(const Tree& gold, SwapStrategy strategy,
                                int max_unary) {
  return swap_oracle_run(gold, strategy, max_unary).actions;
}

}  // namespace discoparse
