#ifndef DISCOPARSE_IO_H_
#define DISCOPARSE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "discoparse/grammar.h"
#include "discoparse/tree.h"

namespace discoparse {

struct TreeReadOptions {
  // Accept '@' and '*' in labels (our own collapsed/binarized output).
  bool allow_reserved = false;
};

// One tree per line; blank and '#' lines skipped. Errors carry the line
// number: Error(kParseError / kDuplicateIndex / kMissingIndex /
// kReservedLabel).
std::vector<Tree> read_trees(std::string_view text,
                             TreeReadOptions options = {});
std::string write_trees(const std::vector<Tree>& trees);

// Throws Error(kParseError / kWeightSumViolation / kDuplicateVariable).
Grammar read_grammar(std::string_view text, double sum_tolerance = 1e-6);
std::string write_grammar(const Grammar& g);

// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace discoparse

#endif  // DISCOPARSE_IO_H_
