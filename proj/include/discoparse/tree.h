#ifndef DISCOPARSE_TREE_H_
#define DISCOPARSE_TREE_H_

#include <string>
#include <string_view>
#include <vector>

#include "discoparse/index_set.h"
#include "discoparse/symbol.h"

namespace discoparse {

// Half-open span <lo, hi> of string positions.
struct Range {
  int lo = 0;
  int hi = 0;

  bool empty() const { return lo == hi; }
  int length() const { return hi - lo; }
  friend bool operator==(const Range&, const Range&) = default;
  friend auto operator<=>(const Range&, const Range&) = default;
};

struct TreeNode {
  Symbol label;  // unset for leaves
  int leaf = 0;  // 1-based index for leaves, 0 for internal nodes
  int parent = -1;
  std::vector<int> children;

  bool is_leaf() const { return leaf > 0; }
  // Leaf i carries the range <i-1, i>.
  Range range() const { return {leaf - 1, leaf}; }
};

// Unordered labelled tree whose leaves carry sentence positions. Immutable;
// construct through TreeBuilder.
class Tree {
 public:
  Tree() = default;

  int root() const { return root_; }
  int length() const { return static_cast<int>(leaf_of_.size()); }
  int size() const { return static_cast<int>(nodes_.size()); }
  const TreeNode& node(int id) const;
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  // Ind_D(v): the leaf indices dominated by v.
  const IndexSet& indices(int id) const { return indices_.at(id); }
  int leaf_node(int index) const { return leaf_of_.at(index - 1); }
  const std::string& token(int index) const { return tokens_.at(index - 1); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  // Internal node whose only child is a leaf.
  bool is_preterminal(int id) const;
  // Every leaf hangs below a preterminal.
  bool has_pos_layer() const;
  // Label of the preterminal above leaf `index`, or the empty symbol.
  Symbol pos(int index) const;

  // Internal node ids, parents before children.
  std::vector<int> internal_nodes() const;
  // Strict ascendant: a ◁+ b.
  bool dominates(int a, int b) const;
  int depth(int id) const;

  // Every internal node has at most two children.
  bool is_binary() const;

 private:
  friend class TreeBuilder;

  std::vector<TreeNode> nodes_;
  std::vector<IndexSet> indices_;
  std::vector<int> leaf_of_;
  std::vector<std::string> tokens_;
  int root_ = -1;
};

class TreeBuilder {
 public:
  int add_leaf(int index, std::string token = {});
  int add_node(Symbol label);
  int add_node(const std::string& label) { return add_node(Symbol(label)); }
  void attach(int parent, int child);

  // Validates shape (single root, acyclic, leaves 1..n exactly once, no
  // childless internal node) and throws Error(kInvalidTree / kDuplicateIndex
  // / kMissingIndex) on violation.
  Tree build() &&;

 private:
  std::vector<TreeNode> nodes_;
  std::vector<std::string> tokens_;
};

// Canonical bracket form with children in <_ind order. Leaves print as
// INDEX=TOKEN, or just INDEX when the token is empty.
std::string to_bracket(const Tree& tree, bool with_tokens = true);

// Reads one bracketed tree, e.g. `(S (VP 1=a 3=c) 2=b)`. Leaves are
// INDEX=TOKEN or a bare INDEX. Throws Error(kParseError) with the column.
Tree parse_bracket(std::string_view text);

// Same labels and index structure; tokens ignored.
bool isomorphic(const Tree& a, const Tree& b);

inline bool operator==(const Tree& a, const Tree& b) {
  return to_bracket(a) == to_bracket(b);
}

// Children of `id` sorted by minimum dominated index.
std::vector<int> sorted_children(const Tree& tree, int id);

// Copies the subtree of `src` rooted at `id` into `out`; returns the new id.
int copy_subtree(const Tree& src, int id, TreeBuilder& out);

}  // namespace discoparse

#endif  // DISCOPARSE_TREE_H_
