#ifndef DISCOPARSE_SWAP_H_
#define DISCOPARSE_SWAP_H_

#include <memory>
#include <string>
#include <vector>

#include "discoparse/action.h"
#include "discoparse/index_set.h"
#include "discoparse/tree.h"

namespace discoparse {

// Persistent partial tree on the SR stack or buffer.
struct SrNode {
  Symbol label;  // unset for leaves
  int leaf = 0;
  IndexSet indices;
  int unary_depth = 0;  // unary reductions stacked directly on this node
  std::vector<std::shared_ptr<const SrNode>> children;
};
using SrTree = std::shared_ptr<const SrNode>;

struct SrOptions {
  bool swap = true;
  int max_unary = 3;
};

// Shift-reduce configuration; with options.swap it is the SR-SWAP system.
struct SrConfig {
  std::vector<SrTree> stack;   // back() is s0
  std::vector<SrTree> buffer;  // front() is b0
  int length = 0;
  SrOptions options;

  std::string to_string() const;
};

// Throws Error(kZeroLength).
SrConfig sr_init(int n, SrOptions options = {});
// REDUCE-X and REDUCEUNARY-X are listed for every label in `labels`.
std::vector<Action> legal(const SrConfig& c, const std::vector<Symbol>& labels);
bool is_legal(const SrConfig& c, const Action& a);
// Throws Error(kIllegalAction).
SrConfig apply(const SrConfig& c, const Action& a);
// Empty buffer and one stack element with an internal root.
bool is_terminal(const SrConfig& c);
// Throws Error(kNotTerminal).
Tree decode(const SrConfig& c, const std::vector<std::string>& tokens = {});

enum class SwapStrategy { kEager, kLazy, kLazier, kProjective };

// "eager", "lazy", "lazier", "projective". Throws Error(kParseError).
SwapStrategy parse_swap_strategy(const std::string& name);

// The three SWAP conditions at a configuration with gold nodes s1, s0 and
// buffer front b0 (-1 when the buffer is empty).
struct SwapConditions {
  bool eager = false;
  bool lazy = false;
  bool lazier = false;
};
SwapConditions swap_conditions(const Tree& gold, int s1, int s0, int b0);

struct SwapOracleRun {
  std::vector<Action> actions;
  // Conditions at each configuration with two or more stack elements.
  std::vector<SwapConditions> checks;
};

// Greedy oracle: REDUCE, then REDUCEUNARY, then SWAP if the strategy allows
// it, else SHIFT. Throws Error(kNotBinary), Error(kCapExceeded) for unary
// chains longer than max_unary, and
// Error(kProjectiveStrategyOnDiscontinuousTree).
SwapOracleRun swap_oracle_run(const Tree& gold, SwapStrategy strategy,
                              int max_unary = 3);
std::vector<Action> swap_oracle(const Tree& gold, SwapStrategy strategy,
                                int max_unary = 3);

}  // namespace discoparse

#endif  // DISCOPARSE_SWAP_H_
