#ifndef DISCOPARSE_CHART_H_
#define DISCOPARSE_CHART_H_

#include <optional>
#include <string>
#include <vector>

#include "discoparse/grammar.h"
#include "discoparse/sentence.h"
#include "discoparse/tree.h"

namespace discoparse {

struct ChartItem {
  Symbol nonterminal;
  std::vector<Range> ranges;

  std::string to_string() const;
  friend bool operator==(const ChartItem&, const ChartItem&) = default;
};

struct ChartEntry {
  ChartItem item;
  double weight = 0.0;
  int rule = -1;       // -1 for SCAN axioms
  int position = -1;   // SCAN: 0-based token position
  std::vector<int> antecedents;  // positions in ChartResult::chart
};

struct ChartOptions {
  int max_fanout = 4;
};

struct ChartResult {
  bool success = false;
  std::optional<Tree> tree;
  double weight = 0.0;
  // Entries in the order they were charted (popped from the agenda).
  std::vector<ChartEntry> chart;
  int pushes = 0;
};

// Weighted deductive CYK with SCAN from POS tags, UNARY and BINARY. Stops at
// the first goal item popped. Throws Error(kGrammarPropertyViolation) unless
// the grammar is binary, terminal-restricted and epsilon-free with
// dim(G) <= max_fanout; Error(kUnknownTag) for tags without a preterminal.
ChartResult chart_parse(const Grammar& g, const Sentence& input,
                        ChartOptions options = {});

bool recognize(const Grammar& g, const Sentence& input,
               ChartOptions options = {});

// Tags as tokens: each tag doubles as its token.
Sentence tags_only(const std::vector<Symbol>& tags);

}  // namespace discoparse

#endif  // DISCOPARSE_CHART_H_
