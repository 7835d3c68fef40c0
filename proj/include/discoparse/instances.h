#ifndef DISCOPARSE_INSTANCES_H_
#define DISCOPARSE_INSTANCES_H_

#include <cstddef>
#include <vector>

#include "discoparse/grammar.h"
#include "discoparse/tree.h"

namespace discoparse {

struct RuleInstance {
  const Rule* rule = nullptr;
  std::vector<Range> lhs;               // one range per LHS component
  std::vector<std::vector<Range>> rhs;  // per RHS element, per variable
};

// All instances of `rule` over `word`. Variables may take empty ranges.
// Throws Error(kCapExceeded) once more than `cap` instances exist.
std::vector<RuleInstance> enumerate_instances(const Rule& rule,
                                              const std::vector<Symbol>& word,
                                              size_t cap = 100000);

}  // namespace discoparse

#endif  // DISCOPARSE_INSTANCES_H_
