#ifndef DISCOPARSE_EVAL_H_
#define DISCOPARSE_EVAL_H_

#include <set>
#include <vector>

#include "discoparse/constituents.h"
#include "discoparse/sentence.h"
#include "discoparse/tree.h"

namespace discoparse {

std::set<Symbol> default_punct_tags();

struct EvalParams {
  std::set<Symbol> punct_tags = default_punct_tags();
  bool ignore_root = false;
  bool disc_only = false;
  bool empty_is_perfect = true;
};

struct EvalResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long matched = 0;
  long predicted = 0;
  long gold = 0;
  bool exact = false;
};

struct EvalReport {
  std::vector<EvalResult> sentences;
  EvalResult corpus;  // micro average
};

EvalResult make_result(long matched, long predicted, long gold,
                       bool empty_is_perfect = true);

// `tags`, when non-empty, holds the POS sequence of each sentence for
// punctuation removal. Labels joined by '@' count once per member.
// Throws Error(kLengthMismatch).
EvalReport evaluate(const std::vector<ConstituentSet>& gold,
                    const std::vector<ConstituentSet>& pred,
                    const EvalParams& params,
                    const std::vector<std::vector<Symbol>>& tags = {});

// Trees may carry a POS layer; punctuation is read from the gold tags.
EvalReport evaluate_trees(const std::vector<Tree>& gold,
                          const std::vector<Tree>& pred,
                          const EvalParams& params);

// Constituents of a tree for evaluation: preterminals dropped, unary chains
// collapsed.
ConstituentSet eval_constituents(const Tree& tree);

}  // namespace discoparse

#endif  // DISCOPARSE_EVAL_H_
