// Small trees used across the tests.
#ifndef DISCOPARSE_TESTS_SUPPORT_SAMPLE_TREES_H_
#define DISCOPARSE_TESTS_SUPPORT_SAMPLE_TREES_H_

#include "discoparse/tree.h"

namespace discoparse::testing {

// A = {2,3,4}, B = {1,5}.
inline Tree wrapped_tree() { return parse_bracket("(S (B 1 5) (A 2 3 4))"); }

// Darüber muß nachgedacht werden.
inline Tree verb_cluster() {
  return parse_bracket(
      "(S (VP (VP 1=Darüber 3=nachgedacht) 4=werden) 2=muß)");
}

inline Tree verb_cluster_pos() {
  return parse_bracket(
      "(S (VP (VP (PAV 1=Darüber) (VVPP 3=nachgedacht)) (VAINF 4=werden)) "
      "(VMFIN 2=muß))");
}

// No internal node is fully projective.
inline Tree nested_gaps_tree() { return parse_bracket("(S (C 1 (B (A 3 5) 4)) 2)"); }

inline Tree lazy_swap_tree() { return parse_bracket("(S (X 1 (A 3 4)) 2)"); }

// A over {2,3} is maximal fully projective.
inline Tree projective_core_tree() { return parse_bracket("(S (B 1 4) (A 2 3))"); }

// X_k = {1..k} ∪ {n} nested up to the root.
inline Tree gap_worst_case(int n) {
  TreeBuilder b;
  int cur = b.add_node("X1");
  b.attach(cur, b.add_leaf(1));
  b.attach(cur, b.add_leaf(n));
  for (int k = 2; k <= n - 1; ++k) {
    int up = b.add_node(k == n - 1 ? "S" : "X" + std::to_string(k));
    b.attach(up, cur);
    b.attach(up, b.add_leaf(k));
    cur = up;
  }
  return std::move(b).build();
}

}  // namespace discoparse::testing

#endif  // DISCOPARSE_TESTS_SUPPORT_SAMPLE_TREES_H_
