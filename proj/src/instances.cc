#include "discoparse/instances.h"

#include <functional>

#include "discoparse/error.h"

namespace discoparse {

std::vector<RuleInstance> enumerate_instances(const Rule& rule,
                                              const std::vector<Symbol>& word,
                                              size_t cap) {
  const int n = static_cast<int>(word.size());
  std::vector<RuleInstance> out;
  std::vector<Range> var_range(rule.variable_count());
  std::vector<Range> lhs(rule.args.size());

  auto emit = [&] {
    if (out.size() >= cap) {
      throw Error(ErrorCode::kCapExceeded,
                  "more than " + std::to_string(cap) + " instances");
    }
    RuleInstance inst;
    inst.rule = &rule;
    inst.lhs = lhs;
    for (const RhsElement& e : rule.rhs) {
      std::vector<Range> rs;
      for (int v : e.vars) rs.push_back(var_range[v]);
      inst.rhs.push_back(std::move(rs));
    }
    out.push_back(std::move(inst));
  };

  // Component c, term t, current position p, component start s.
  std::function<void(size_t, size_t, int, int)> rec = [&](size_t c, size_t t,
                                                          int p, int s) {
    if (c == rule.args.size()) {
      emit();
      return;
    }
    const Component& comp = rule.args[c];
    if (t == comp.size()) {
      lhs[c] = {s, p};
      for (int next = 0; next <= n; ++next) {
        if (c + 1 == rule.args.size()) {
          rec(c + 1, 0, 0, 0);
          break;
        }
        rec(c + 1, 0, next, next);
      }
      return;
    }
    const Term& term = comp[t];
    if (!term.is_variable) {
      if (p < n && word[p] == term.terminal) rec(c, t + 1, p + 1, s);
      return;
    }
    for (int e = p; e <= n; ++e) {
      var_range[term.var] = {p, e};
      rec(c, t + 1, e, s);
    }
  };
  if (rule.args.empty()) {
    emit();
    return out;
  }
  for (int start = 0; start <= n; ++start) rec(0, 0, start, start);
  return out;
}

}  // namespace discoparse
