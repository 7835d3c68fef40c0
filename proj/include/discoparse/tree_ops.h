#ifndef DISCOPARSE_TREE_OPS_H_
#define DISCOPARSE_TREE_OPS_H_

#include <vector>

#include "discoparse/index_set.h"
#include "discoparse/symbol.h"
#include "discoparse/tree.h"

namespace discoparse {

inline constexpr char kChainSeparator = '@';
inline constexpr char kBinarizeMarker = '*';

bool has_reserved_label(const Tree& tree);

// Every internal node has a leaf daughter or at least two daughters.
bool is_unary_free(const Tree& tree);

enum class UnaryDirection { kCollapse, kExpand };

// collapse: each internal unary chain A0 -> A1 -> ... -> Ak becomes one node
// labelled A0@A1@...@Ak. expand: the inverse.
Tree normalize_unaries(const Tree& tree, UnaryDirection direction);

// Left-branching cascade of `LABEL*` nodes over <_ind-ordered children.
// Throws Error(kReservedLabel) if a label already contains '*'.
Tree binarize(const Tree& tree);
Tree debinarize(const Tree& tree);

// Drops preterminals (except a preterminal root), hanging their leaves on the
// grandparent. The tags come back from pos_tags.
Tree strip_preterminals(const Tree& tree);
// Inserts a preterminal with tag tags[i-1] above every leaf i.
Tree add_preterminals(const Tree& tree, const std::vector<Symbol>& tags);
std::vector<Symbol> pos_tags(const Tree& tree);

// {i | min(s) < i < max(s), i not in s}. Throws Error(kEmptyCandidate).
IndexSet gap_set(const IndexSet& s);

struct StructuralReport {
  bool projective = false;
  bool fully_projective = false;
  bool maximal_fully_projective = false;
};

// Throws Error(kUnknownNode).
StructuralReport structural_report(const Tree& tree, int node);

struct ProjectiveAnchors {
  int mpc = -1;
  int cpc = -1;
};

// Closest maximal-fully-projective strict ascendant, or the node itself.
int mpc(const Tree& tree, int node);
// Closest projective strict ascendant. Throws Error(kNoProjectiveAscendant).
int cpc(const Tree& tree, int node);
ProjectiveAnchors projective_anchors(const Tree& tree, int node);

// Visits the <_ind-smaller child subtree first. Throws Error(kNotBinary).
std::vector<int> post_order(const Tree& tree);

enum class Order { kBefore, kEqual, kAfter };

// Compares minimal indices.
Order compare_ind(const IndexSet& a, const IndexSet& b);
// <=_right: max(a) < max(b), or equal maxima with a ⊆ b. Throws
// Error(kIncomparable) when the maxima agree and neither contains the other.
Order compare_right(const IndexSet& a, const IndexSet& b);
// <_G between two nodes, neither dominating the other. Throws
// Error(kIncomparable) otherwise.
Order compare_g(const Tree& tree, int u, int v);
inline bool precedes_g(const Tree& tree, int u, int v) {
  return compare_g(tree, u, v) == Order::kBefore;
}

}  // namespace discoparse

#endif  // DISCOPARSE_TREE_OPS_H_
