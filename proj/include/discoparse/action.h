#ifndef DISCOPARSE_ACTION_H_
#define DISCOPARSE_ACTION_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "discoparse/index_set.h"
#include "discoparse/symbol.h"

namespace discoparse {

enum class ActionKind {
  kShift,
  kReduce,
  kReduceUnary,
  kSwap,
  kMerge,
  kGap,
  kLabel,
  kNoLabel,
  kCombine,
};

// One transition. REDUCE, REDUCEUNARY and LABEL carry a label; COMBINE
// carries the memory element it consumes.
struct Action {
  ActionKind kind = ActionKind::kShift;
  Symbol label;
  IndexSet target;

  static Action shift() { return {ActionKind::kShift, {}, {}}; }
  static Action reduce(Symbol x) { return {ActionKind::kReduce, x, {}}; }
  static Action reduce_unary(Symbol x) {
    return {ActionKind::kReduceUnary, x, {}};
  }
  static Action swap() { return {ActionKind::kSwap, {}, {}}; }
  static Action merge() { return {ActionKind::kMerge, {}, {}}; }
  static Action gap() { return {ActionKind::kGap, {}, {}}; }
  static Action label_with(Symbol x) { return {ActionKind::kLabel, x, {}}; }
  static Action no_label() { return {ActionKind::kNoLabel, {}, {}}; }
  static Action combine(IndexSet s) {
    return {ActionKind::kCombine, {}, std::move(s)};
  }

  bool is_labelling() const {
    return kind == ActionKind::kLabel || kind == ActionKind::kNoLabel;
  }

  // SHIFT, REDUCE-VP, LABEL-A, COMBINE, ...
  std::string name() const;
  // Comma-joined COMBINE target, empty otherwise.
  std::string payload() const;
  // name, plus -{2,3} for COMBINE.
  std::string to_string() const;

  friend bool operator==(const Action&, const Action&) = default;
};

// Reads a name and optional payload as written by name()/payload(). Throws
// Error(kParseError).
Action parse_action(std::string_view name, std::string_view payload = {});

// `STEP<TAB>ACTION[<TAB>payload]` per action, steps from 0.
std::string format_trace(const std::vector<Action>& actions);
// Inverse of format_trace. Throws Error(kParseError).
std::vector<Action> parse_trace(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Action& a);

std::string join_actions(const std::vector<Action>& actions,
                         const char* sep = ", ");

}  // namespace discoparse

#endif  // DISCOPARSE_ACTION_H_
