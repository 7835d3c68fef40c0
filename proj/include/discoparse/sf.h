#ifndef DISCOPARSE_SF_H_
#define DISCOPARSE_SF_H_

#include <string>
#include <vector>

#include "discoparse/action.h"
#include "discoparse/constituents.h"
#include "discoparse/tree.h"

namespace discoparse {

// Stack-free SHIFT-COMBINE configuration <memory, focus, i, j, K>:step.
struct SfConfig {
  std::vector<IndexSet> memory;  // kept in right_order_less order
  IndexSet focus;
  int i = 1;
  int j = 2;
  ConstituentSet k;
  int step = 0;

  int length() const { return j - 1; }
  bool structural_step() const { return step % 2 == 0; }
  std::string to_string() const;
};

// <{}, {}, 1, n+1, {}>:0. Throws Error(kZeroLength).
SfConfig sf_init(int n);
std::vector<Action> legal(const SfConfig& c, const std::vector<Symbol>& labels);
bool is_legal(const SfConfig& c, const Action& a);
// Throws Error(kIllegalAction).
SfConfig apply(const SfConfig& c, const Action& a);
bool is_terminal(const SfConfig& c);
// Expands '@' chains. Throws Error(kNotTerminal).
Tree decode(const SfConfig& c, const std::vector<std::string>& tokens = {});

// The static oracle's choice at c: COMBINE the memory element sharing the
// focus's gold parent, else SHIFT; LABEL-A iff the focus is gold.
Action sf_static_action(const SfConfig& c, const ConstituentSet& gold);

// Static oracle; 4n-2 actions. Throws Error(kNotComplete).
std::vector<Action> sf_static_oracle(const ConstituentSet& gold);

// Whether `target` can still enter K. Throws Error(kAlreadyBuilt) if it is
// in K already.
bool reachable(const SfConfig& c, const Constituent& target);

// The <=_right-least reachable gold constituent. Throws
// Error(kNotTerminal) on a terminal configuration.
Constituent next_constituent(const SfConfig& c, const ConstituentSet& gold);

// The set of optimal actions at c.
std::vector<Action> dynamic_oracle(const SfConfig& c,
                                   const ConstituentSet& gold);
// COMBINE over SHIFT, and the COMBINE whose target has the highest max.
Action dynamic_oracle_pick(const SfConfig& c, const ConstituentSet& gold);

}  // namespace discoparse

#endif  // DISCOPARSE_SF_H_
