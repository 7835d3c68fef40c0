#ifndef DISCOPARSE_EXTRACT_H_
#define DISCOPARSE_EXTRACT_H_

#include <vector>

#include "discoparse/grammar.h"
#include "discoparse/tree.h"

namespace discoparse {

// Reads one rule per internal node off trees with a POS layer; probabilities
// are relative frequencies per LHS. When the trees disagree on the root
// label, a fresh ROOT start symbol rewrites to each of them. Throws
// Error(kMissingPreterminal).
Grammar extract_plcfrs(const std::vector<Tree>& treebank);

// Undoes the LABEL_k renaming on a parsed tree.
Tree restore_labels(const Tree& tree);

}  // namespace discoparse

#endif  // DISCOPARSE_EXTRACT_H_
