#ifndef DISCOPARSE_MLGAP_H_
#define DISCOPARSE_MLGAP_H_

#include <string>
#include <vector>

#include "discoparse/action.h"
#include "discoparse/constituents.h"
#include "discoparse/tree.h"

namespace discoparse {

enum class MlGapState { kStruct, kStructPrime, kLabel };

struct MlGapConfig {
  std::vector<IndexSet> stack;  // back() is the top
  std::vector<IndexSet> deque;  // back() is the top, front() the bottom
  int i = 0;                    // last shifted index
  int j = 0;                    // sentence length
  ConstituentSet k;
  MlGapState state = MlGapState::kStruct;

  std::string to_string() const;
};

// <[], [], 0, n, {}>:Struct. Throws Error(kZeroLength).
MlGapConfig mlgap_init(int n);
std::vector<Action> legal(const MlGapConfig& c,
                          const std::vector<Symbol>& labels);
bool is_legal(const MlGapConfig& c, const Action& a);
// Throws Error(kIllegalAction).
MlGapConfig apply(const MlGapConfig& c, const Action& a);
bool is_terminal(const MlGapConfig& c);
// Expands '@' chains. Throws Error(kNotTerminal).
Tree decode(const MlGapConfig& c, const std::vector<std::string>& tokens = {});

// Eager leftmost-binarising oracle. Throws Error(kNotComplete).
std::vector<Action> mlgap_oracle(const ConstituentSet& gold);

}  // namespace discoparse

#endif  // DISCOPARSE_MLGAP_H_
