#include <set>

#include <gtest/gtest.h>

#include "discoparse/constituents.h"
#include "discoparse/error.h"
#include "discoparse/tree.h"
#include "discoparse/tree_ops.h"
#include "support/enumerate.h"
#include "support/sample_trees.h"

namespace discoparse {
namespace {

using testing::verb_cluster;
using testing::lazy_swap_tree;
using testing::projective_core_tree;
using testing::nested_gaps_tree;
using testing::wrapped_tree;

ConstituentSet cs(std::vector<std::pair<const char*, IndexSet>> members,
                  int n) {
  std::vector<Constituent> out;
  for (auto& [l, s] : members) out.push_back({Symbol(l), s});
  return ConstituentSet(out, n);
}

int find_node(const Tree& t, const IndexSet& s) {
  for (int v = 0; v < t.size(); ++v) {
    if (t.indices(v) == s && !t.node(v).is_leaf()) return v;
  }
  for (int v = 0; v < t.size(); ++v) {
    if (t.indices(v) == s) return v;
  }
  return -1;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidTree;
}

TEST(IndexSet, Basics) {
  IndexSet s{1, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(s.max(), 5);
  EXPECT_FALSE(s.contiguous());
  EXPECT_TRUE(IndexSet::span(2, 4).contiguous());
  EXPECT_EQ((s | IndexSet{2}).to_string(), "{1,2,3,5}");
  EXPECT_EQ((s & IndexSet({3, 4, 5})).join(), "3,5");
  EXPECT_TRUE((s - IndexSet({1, 3, 5})).empty());
  EXPECT_TRUE(IndexSet({3}).proper_subset_of(s));
  EXPECT_FALSE(s.proper_subset_of(s));
}

TEST(IndexSet, BeyondOneWord) {
  IndexSet s{1, 64, 130};
  EXPECT_EQ(s.max(), 130);
  EXPECT_EQ(s.size(), 3);
  s.erase(130);
  EXPECT_EQ(s, (IndexSet{1, 64}));
  EXPECT_EQ(s.max(), 64);
  EXPECT_TRUE(s.subset_of(IndexSet::span(1, 200)));
}

TEST(Tree, ReadsVerbCluster) {
  Tree t = verb_cluster();
  EXPECT_EQ(t.length(), 4);
  EXPECT_EQ(t.token(2), "muß");
  EXPECT_EQ(to_bracket(t),
            "(S (VP (VP 1=Darüber 3=nachgedacht) 4=werden) 2=muß)");
}

TEST(Tree, RejectsBadIndices) {
  EXPECT_EQ(code_of([] { parse_bracket("(S 1=a 1=b)"); }),
            ErrorCode::kDuplicateIndex);
  EXPECT_EQ(code_of([] { parse_bracket("(S 1=a 3=b)"); }),
            ErrorCode::kMissingIndex);
  EXPECT_EQ(code_of([] { parse_bracket("(S 1=a"); }), ErrorCode::kParseError);
}

TEST(Constituents, WrappedTree) {
  ConstituentSet k = tree_to_constituents(wrapped_tree());
  EXPECT_EQ(k, cs({{"A", {2, 3, 4}}, {"B", {1, 5}}, {"S", {1, 2, 3, 4, 5}}},
                  5));
  EXPECT_EQ(to_bracket(constituents_to_tree(k)), to_bracket(wrapped_tree()));
}

TEST(Constituents, SinglePreterminal) {
  ConstituentSet k = tree_to_constituents(parse_bracket("(X 1=a)"));
  EXPECT_EQ(k, cs({{"X", {1}}}, 1));
  EXPECT_EQ(to_bracket(constituents_to_tree(cs({{"S", {1}}}, 1))), "(S 1)");
}

TEST(Constituents, VerbCluster) {
  EXPECT_EQ(tree_to_constituents(verb_cluster()),
            cs({{"VP", {1, 3}}, {"VP", {1, 3, 4}}, {"S", {1, 2, 3, 4}}}, 4));
}

TEST(Constituents, UnaryChainRejected) {
  EXPECT_EQ(code_of([] { tree_to_constituents(parse_bracket("(S (X 1 2))")); }),
            ErrorCode::kUnaryChainPresent);
}

TEST(Constituents, NotComplete) {
  ConstituentSet k = cs({{"A", {1, 2}}, {"B", {2, 3}}}, 3);
  EXPECT_FALSE(validate_constituent_set(k).consistent);
  EXPECT_EQ(code_of([&] { constituents_to_tree(k); }), ErrorCode::kNotComplete);
  EXPECT_FALSE(validate_constituent_set(cs({{"A", {1, 2}}}, 3)).spanning);
  EXPECT_FALSE(
      validate_constituent_set(cs({{"A", {1, 2}}, {"B", {3}}}, 3)).rooted);
}

TEST(Constituents, MaxSubsetParent) {
  ConstituentSet k = tree_to_constituents(wrapped_tree());
  EXPECT_TRUE(validate_constituent_set(k).complete);
  auto p = max_subset_parent(k, {2, 3, 4});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->label, Symbol("S"));
  EXPECT_FALSE(max_subset_parent(k, IndexSet::span(1, 5)).has_value());
  EXPECT_EQ(max_subset_parent(k, {3})->label, Symbol("A"));
}

TEST(Constituents, ExhaustiveRoundTripAndDuality) {
  int trees = 0;
  for (int n = 1; n <= 4; ++n) {
    testing::for_each_tree(n, testing::two_labels(), [&](const ConstituentSet&
                                                             k) {
      ++trees;
      Tree t = constituents_to_tree(k);
      ASSERT_EQ(tree_to_constituents(t), k);
      ASSERT_TRUE(is_unary_free(t));
      // v1 ◁ v2 iff ψ(v2) ⊂_max ψ(v1).
      for (int v : t.internal_nodes()) {
        auto p = max_subset_parent(k, t.indices(v));
        int parent = t.node(v).parent;
        if (parent < 0) {
          ASSERT_FALSE(p.has_value());
        } else {
          ASSERT_TRUE(p.has_value());
          ASSERT_EQ(p->indices, t.indices(parent));
        }
        for (int w : t.internal_nodes()) {
          if (w == v) continue;
          bool child = t.node(w).parent == v;
          auto q = max_subset_parent(k, t.indices(w));
          ASSERT_EQ(child, q.has_value() && q->indices == t.indices(v));
        }
      }
      // At most one ⊂_max superset: the minimal superset is unique.
      for (const Constituent& c : k.members()) {
        int minimal = 0;
        int best = 1 << 30;
        for (const Constituent& d : k.members()) {
          if (c.indices.proper_subset_of(d.indices)) {
            if (d.indices.size() < best) {
              best = d.indices.size();
              minimal = 1;
            } else if (d.indices.size() == best) {
              ++minimal;
            }
          }
        }
        ASSERT_LE(minimal, 1);
      }
    });
  }
  EXPECT_EQ(trees, 2 + 18 + 378 + 13122);
}

TEST(Unaries, CollapseAndExpand) {
  Tree chain = parse_bracket("(S (X (Y 1 2)) 3)");
  Tree collapsed = normalize_unaries(chain, UnaryDirection::kCollapse);
  EXPECT_EQ(to_bracket(collapsed), "(S (X@Y 1 2) 3)");
  EXPECT_EQ(normalize_unaries(collapsed, UnaryDirection::kExpand), chain);
  EXPECT_EQ(normalize_unaries(wrapped_tree(), UnaryDirection::kCollapse),
            wrapped_tree());
  Tree root_chain = parse_bracket("(R (S (X 1 2)))");
  EXPECT_EQ(to_bracket(normalize_unaries(root_chain, UnaryDirection::kCollapse)),
            "(R@S@X 1 2)");
  EXPECT_EQ(normalize_unaries(
                normalize_unaries(root_chain, UnaryDirection::kCollapse),
                UnaryDirection::kExpand),
            root_chain);
}

TEST(Binarize, LeftBranching) {
  Tree t = parse_bracket("(S 4 2 1 3)");
  Tree b = binarize(t);
  EXPECT_EQ(to_bracket(b), "(S (S* (S* 1 2) 3) 4)");
  int marked = 0;
  for (const TreeNode& n : b.nodes()) {
    if (!n.is_leaf() && n.label.str().back() == '*') ++marked;
  }
  EXPECT_EQ(marked, 2);
  EXPECT_EQ(debinarize(b), t);
  EXPECT_EQ(binarize(verb_cluster()), verb_cluster());
  EXPECT_EQ(code_of([] { binarize(parse_bracket("(S* 1 2)")); }),
            ErrorCode::kReservedLabel);
}

TEST(Binarize, RoundTripExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    testing::for_each_tree(n, {Symbol("A")}, [&](const ConstituentSet& k) {
      Tree t = constituents_to_tree(k);
      Tree b = binarize(t);
      ASSERT_TRUE(b.is_binary());
      ASSERT_EQ(debinarize(b), t);
    });
  }
}

TEST(Preterminals, StripAndAdd) {
  Tree t = testing::verb_cluster_pos();
  EXPECT_TRUE(t.has_pos_layer());
  Tree bare = strip_preterminals(t);
  EXPECT_EQ(bare, verb_cluster());
  EXPECT_EQ(add_preterminals(bare, pos_tags(t)), t);
}

TEST(GapSet, Examples) {
  EXPECT_EQ(gap_set({1, 3, 5}), (IndexSet{2, 4}));
  EXPECT_EQ(gap_set({1, 5}), (IndexSet{2, 3, 4}));
  EXPECT_TRUE(gap_set({1, 2, 3}).empty());
  EXPECT_EQ(code_of([] { gap_set({}); }), ErrorCode::kEmptyCandidate);
}

TEST(Structure, Reports) {
  Tree nested = nested_gaps_tree();
  StructuralReport leaf = structural_report(nested, nested.leaf_node(3));
  EXPECT_TRUE(leaf.maximal_fully_projective);
  EXPECT_FALSE(structural_report(nested, find_node(nested, {3, 5})).projective);
  Tree core = projective_core_tree();
  EXPECT_TRUE(
      structural_report(core, find_node(core, {2, 3})).maximal_fully_projective);
  EXPECT_EQ(code_of([&] { structural_report(nested, 99); }),
            ErrorCode::kUnknownNode);
}

TEST(Structure, Anchors) {
  Tree nested = nested_gaps_tree();
  int leaf3 = nested.leaf_node(3);
  EXPECT_EQ(cpc(nested, leaf3), find_node(nested, {3, 4, 5}));
  EXPECT_EQ(mpc(nested, leaf3), leaf3);
  Tree core = projective_core_tree();
  EXPECT_EQ(mpc(core, core.leaf_node(2)), find_node(core, {2, 3}));
  EXPECT_EQ(code_of([&] { cpc(nested, nested.root()); }),
            ErrorCode::kNoProjectiveAscendant);
}

TEST(Structure, ImplicationChainExhaustive) {
  for (int n = 1; n <= 4; ++n) {
    testing::for_each_tree(n, {Symbol("A")}, [&](const ConstituentSet& k) {
      Tree t = constituents_to_tree(k);
      for (int v = 0; v < t.size(); ++v) {
        StructuralReport r = structural_report(t, v);
        ASSERT_TRUE(!r.maximal_fully_projective || r.fully_projective);
        ASSERT_TRUE(!r.fully_projective || r.projective);
      }
    });
  }
}

TEST(PostOrder, VerbClusterLeafOrder) {
  Tree t = verb_cluster();
  std::vector<int> leaves;
  for (int v : post_order(t)) {
    if (t.node(v).is_leaf()) leaves.push_back(t.node(v).leaf);
  }
  EXPECT_EQ(leaves, (std::vector<int>{1, 3, 4, 2}));
  EXPECT_EQ(code_of([] { post_order(parse_bracket("(S 1 2 3)")); }),
            ErrorCode::kNotBinary);
  Tree flat = parse_bracket("(S (X 1 2) (Y 3 4))");
  leaves.clear();
  for (int v : post_order(flat)) {
    if (flat.node(v).is_leaf()) leaves.push_back(flat.node(v).leaf);
  }
  EXPECT_EQ(leaves, (std::vector<int>{1, 2, 3, 4}));
}

TEST(Orders, Examples) {
  EXPECT_EQ(compare_right({2, 3}, {1, 2, 3}), Order::kBefore);
  EXPECT_EQ(compare_right({1, 5}, {2, 3, 4}), Order::kAfter);
  EXPECT_EQ(code_of([] { compare_right({1, 3}, {2, 3}); }),
            ErrorCode::kIncomparable);
  EXPECT_EQ(compare_ind({1, 4}, {2}), Order::kBefore);
  Tree nested = nested_gaps_tree();
  EXPECT_TRUE(precedes_g(nested, nested.leaf_node(5), nested.leaf_node(4)));
  EXPECT_EQ(code_of([&] { compare_g(nested, nested.root(), nested.leaf_node(1)); }),
            ErrorCode::kIncomparable);
}

// <_G agrees with positions in the post-order, and is ◁-compatible.
TEST(Orders, GOrderExhaustive) {
  for (int n = 1; n <= 5; ++n) {
    testing::for_each_tree(n, {Symbol("A")}, [&](const ConstituentSet& k) {
      Tree t = binarize(constituents_to_tree(k));
      std::vector<int> po = post_order(t);
      std::vector<int> pos(t.size());
      for (size_t i = 0; i < po.size(); ++i) pos[po[i]] = static_cast<int>(i);
      for (int u = 0; u < t.size(); ++u) {
        for (int v = 0; v < t.size(); ++v) {
          if (u == v || t.dominates(u, v) || t.dominates(v, u)) continue;
          bool before = precedes_g(t, u, v);
          ASSERT_EQ(before, pos[u] < pos[v]);
          ASSERT_NE(before, precedes_g(t, v, u));
          // Descendants inherit the order.
          for (int u2 = 0; u2 < t.size(); ++u2) {
            if (u2 != u && !t.dominates(u, u2)) continue;
            for (int v2 = 0; v2 < t.size(); ++v2) {
              if (v2 != v && !t.dominates(v, v2)) continue;
              ASSERT_EQ(precedes_g(t, u2, v2), before);
            }
          }
        }
      }
    });
  }
}

// <=_right is reflexive, antisymmetric and transitive on compatible sets.
TEST(Orders, RightIsPartialOrder) {
  testing::for_each_tree(4, {Symbol("A")}, [&](const ConstituentSet& k) {
    const auto& ms = k.members();
    auto leq = [](const IndexSet& a, const IndexSet& b) {
      return compare_right(a, b) != Order::kAfter;
    };
    for (const auto& a : ms) {
      ASSERT_TRUE(leq(a.indices, a.indices));
      for (const auto& b : ms) {
        if (leq(a.indices, b.indices) && leq(b.indices, a.indices)) {
          ASSERT_EQ(a.indices, b.indices);
        }
        for (const auto& c : ms) {
          if (leq(a.indices, b.indices) && leq(b.indices, c.indices)) {
            ASSERT_TRUE(leq(a.indices, c.indices));
          }
        }
      }
    }
  });
}

}  // namespace
}  // namespace discoparse
