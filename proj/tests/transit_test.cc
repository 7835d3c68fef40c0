#include <gtest/gtest.h>

#include <random>

#include "discoparse/action.h"
#include "discoparse/constituents.h"
#include "discoparse/error.h"
#include "discoparse/mlgap.h"
#include "discoparse/sf.h"
#include "discoparse/swap.h"
#include "discoparse/tree_ops.h"
#include "support/enumerate.h"
#include "support/sample_trees.h"
#include "support/sf_brute.h"

namespace discoparse {
namespace {

std::vector<Action> actions(const std::string& spaced) {
  std::vector<Action> out;
  size_t pos = 0;
  while (pos < spaced.size()) {
    size_t end = spaced.find(' ', pos);
    if (end == std::string::npos) end = spaced.size();
    out.push_back(parse_action(spaced.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

int count(const std::vector<Action>& seq, ActionKind kind) {
  int n = 0;
  for (const Action& a : seq) n += a.kind == kind ? 1 : 0;
  return n;
}

Tree replay_sr(const Tree& gold, const std::vector<Action>& seq, bool swap) {
  SrConfig c = sr_init(gold.length(), {swap, 3});
  for (const Action& a : seq) c = apply(c, a);
  return decode(c);
}

template <typename Config>
Config replay(Config c, const std::vector<Action>& seq) {
  for (const Action& a : seq) c = apply(c, a);
  return c;
}

TEST(Swap, SentenceWithVerbCluster) {
  auto expected = actions(
      "SHIFT SHIFT SHIFT SWAP REDUCE-VP SHIFT SHIFT SWAP REDUCE-VP SHIFT "
      "REDUCE-S");
  Tree gold = testing::verb_cluster();
  for (auto s : {SwapStrategy::kEager, SwapStrategy::kLazy,
                 SwapStrategy::kLazier}) {
    auto seq = swap_oracle(gold, s);
    EXPECT_EQ(seq, expected) << join_actions(seq);
    EXPECT_TRUE(isomorphic(replay_sr(gold, seq, true), gold));
  }
  try {
    swap_oracle(gold, SwapStrategy::kProjective);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProjectiveStrategyOnDiscontinuousTree);
  }
}

TEST(Swap, SwapStep) {
  SrConfig c = replay(sr_init(4), actions("SHIFT SHIFT SHIFT"));
  c = apply(c, Action::swap());
  ASSERT_EQ(c.stack.size(), 2u);
  EXPECT_EQ(c.stack.back()->leaf, 3);
  EXPECT_EQ(c.buffer.front()->leaf, 2);
  // Swapping back is blocked by the <_ind guard.
  c = apply(c, Action::shift());
  EXPECT_FALSE(is_legal(c, Action::swap()));
}

TEST(Swap, LazierWalkthrough) {
  auto expected = actions(
      "SHIFT SHIFT SHIFT SHIFT SHIFT SWAP REDUCE-A SHIFT REDUCE-B SWAP "
      "REDUCE-C SHIFT REDUCE-S");
  auto seq = swap_oracle(testing::nested_gaps_tree(), SwapStrategy::kLazier);
  EXPECT_EQ(seq, expected) << join_actions(seq);
  EXPECT_EQ(count(seq, ActionKind::kSwap), 2);
}

TEST(Swap, LazyAvoidsSecondSwap) {
  Tree gold = testing::lazy_swap_tree();
  auto swaps_before_a = [&](SwapStrategy s) {
    auto seq = swap_oracle(gold, s);
    int n = 0;
    for (const Action& a : seq) {
      if (a == Action::reduce(Symbol("A"))) break;
      n += a.kind == ActionKind::kSwap;
    }
    return n;
  };
  EXPECT_EQ(swaps_before_a(SwapStrategy::kEager), 2);
  EXPECT_EQ(swaps_before_a(SwapStrategy::kLazy), 0);
  EXPECT_EQ(count(swap_oracle(gold, SwapStrategy::kLazy), ActionKind::kSwap), 1);
  EXPECT_EQ(count(swap_oracle(gold, SwapStrategy::kLazier), ActionKind::kSwap),
            1);
}

TEST(Swap, Errors) {
  EXPECT_THROW(sr_init(0), Error);
  Tree flat = parse_bracket("(S 1 2 3)");
  EXPECT_THROW(swap_oracle(flat, SwapStrategy::kEager), Error);
  SrConfig c = sr_init(1);
  EXPECT_THROW(decode(c), Error);
  c = replay(c, actions("SHIFT REDUCEUNARY-X"));
  EXPECT_TRUE(is_terminal(c));
  EXPECT_EQ(to_bracket(decode(c)), "(X 1)");
  c = replay(sr_init(1), actions("SHIFT REDUCEUNARY-A REDUCEUNARY-B REDUCEUNARY-C"));
  EXPECT_FALSE(is_legal(c, Action::reduce_unary(Symbol("D"))));
  Tree chain = parse_bracket("(A (B (C (D 1)) 2))");
  EXPECT_NO_THROW(swap_oracle(chain, SwapStrategy::kEager));
  Tree long_chain = parse_bracket("(A (B (C (D (E 1)))) 2)");
  EXPECT_THROW(swap_oracle(long_chain, SwapStrategy::kEager), Error);
}

TEST(MlGap, Walkthrough) {
  ConstituentSet gold = tree_to_constituents(testing::wrapped_tree());
  auto seq = mlgap_oracle(gold);
  auto expected = actions(
      "SHIFT NO-LABEL SHIFT NO-LABEL SHIFT NO-LABEL MERGE NO-LABEL SHIFT "
      "NO-LABEL MERGE LABEL-A SHIFT NO-LABEL GAP MERGE LABEL-B MERGE LABEL-S");
  EXPECT_EQ(seq, expected) << join_actions(seq);
  EXPECT_EQ(count(seq, ActionKind::kGap), 1);
  MlGapConfig end = replay(mlgap_init(5), seq);
  EXPECT_TRUE(is_terminal(end));
  EXPECT_EQ(end.k, gold);
  EXPECT_TRUE(isomorphic(decode(end), testing::wrapped_tree()));
}

TEST(MlGap, Transitions) {
  MlGapConfig c = mlgap_init(5);
  EXPECT_EQ(c.i, 0);
  EXPECT_EQ(c.j, 5);
  EXPECT_EQ(c.state, MlGapState::kStruct);
  c = replay(c, actions("SHIFT NO-LABEL SHIFT NO-LABEL SHIFT NO-LABEL MERGE "
                        "NO-LABEL SHIFT NO-LABEL MERGE LABEL-A SHIFT NO-LABEL"));
  ASSERT_EQ(c.stack, (std::vector<IndexSet>{IndexSet{1}, IndexSet{2, 3, 4}}));
  c = apply(c, Action::gap());
  EXPECT_EQ(c.stack, std::vector<IndexSet>{IndexSet{1}});
  EXPECT_EQ(c.deque, (std::vector<IndexSet>{IndexSet{2, 3, 4}, IndexSet{5}}));
  EXPECT_EQ(c.state, MlGapState::kStructPrime);
  std::vector<Action> allowed = legal(c, {Symbol("A")});
  EXPECT_EQ(allowed, std::vector<Action>{Action::merge()});
  MlGapConfig wider =
      replay(mlgap_init(4), actions("SHIFT NO-LABEL SHIFT NO-LABEL SHIFT "
                                    "NO-LABEL SHIFT NO-LABEL GAP"));
  EXPECT_EQ(legal(wider, {Symbol("A")}),
            (std::vector<Action>{Action::merge(), Action::gap()}));
  EXPECT_THROW(apply(c, Action::shift()), Error);
}

TEST(MlGap, WorstCaseGaps) {
  for (int n = 4; n <= 8; ++n) {
    Tree t = testing::gap_worst_case(n);
    auto seq = mlgap_oracle(tree_to_constituents(t));
    EXPECT_EQ(count(seq, ActionKind::kGap), (n - 2) * (n - 1) / 2);
    EXPECT_EQ(static_cast<int>(seq.size()), (n * n + 5 * n - 2) / 2);
    EXPECT_TRUE(isomorphic(decode(replay(mlgap_init(n), seq)), t));
  }
  EXPECT_EQ(count(mlgap_oracle(tree_to_constituents(
                      parse_bracket("(S (A 1 2) 3)"))),
                  ActionKind::kGap),
            0);
}

TEST(StackFree, Walkthrough) {
  ConstituentSet gold = tree_to_constituents(testing::wrapped_tree());
  auto seq = sf_static_oracle(gold);
  auto expected = actions(
      "SHIFT NO-LABEL SHIFT NO-LABEL SHIFT NO-LABEL COMBINE-{2} NO-LABEL "
      "SHIFT NO-LABEL COMBINE-{2,3} LABEL-A SHIFT NO-LABEL COMBINE-{1} "
      "LABEL-B COMBINE-{2,3,4} LABEL-S");
  EXPECT_EQ(seq, expected) << join_actions(seq);
  SfConfig c = replay(sf_init(5), std::vector<Action>(seq.begin(), seq.begin() + 16));
  EXPECT_EQ(c.memory, std::vector<IndexSet>{IndexSet({2, 3, 4})});
  c = apply(c, seq[16]);
  EXPECT_EQ(c.focus, IndexSet::span(1, 5));
  EXPECT_TRUE(c.memory.empty());
  c = apply(c, seq[17]);
  EXPECT_TRUE(is_terminal(c));
  EXPECT_TRUE(isomorphic(decode(c), testing::wrapped_tree()));
}

TEST(StackFree, InitAndLegal) {
  SfConfig c = sf_init(5);
  EXPECT_TRUE(c.memory.empty());
  EXPECT_TRUE(c.focus.empty());
  EXPECT_EQ(c.i, 1);
  EXPECT_EQ(c.j, 6);
  EXPECT_EQ(c.step, 0);
  EXPECT_THROW(sf_init(0), Error);
  // SHIFT never stores the empty initial focus.
  c = apply(c, Action::shift());
  EXPECT_TRUE(c.memory.empty());

  std::vector<Symbol> labels{Symbol("A"), Symbol("B")};
  SfConfig full;
  full.j = 6;
  full.i = 6;
  full.focus = IndexSet::span(1, 5);
  full.k = ConstituentSet(5);
  full.step = 17;
  EXPECT_EQ(legal(full, labels),
            (std::vector<Action>{Action::label_with(labels[0]),
                                 Action::label_with(labels[1])}));
  SfConfig even = replay(sf_init(3), actions("SHIFT NO-LABEL SHIFT NO-LABEL"));
  EXPECT_EQ(legal(even, labels),
            (std::vector<Action>{Action::shift(), Action::combine({1})}));

  c = replay(sf_init(1), actions("SHIFT LABEL-X"));
  EXPECT_TRUE(is_terminal(c));
  EXPECT_EQ(to_bracket(decode(c)), "(X 1)");
  EXPECT_EQ(sf_static_oracle(tree_to_constituents(parse_bracket("(X 1)"))),
            actions("SHIFT LABEL-X"));
}

SfConfig walkthrough_step(int steps) {
  ConstituentSet gold = tree_to_constituents(testing::wrapped_tree());
  auto seq = sf_static_oracle(gold);
  return replay(sf_init(5), std::vector<Action>(seq.begin(), seq.begin() + steps));
}

TEST(StackFree, Reachability) {
  ConstituentSet gold = tree_to_constituents(testing::wrapped_tree());
  Constituent a{Symbol("A"), {2, 3, 4}}, b{Symbol("B"), {1, 5}},
      s{Symbol("S"), IndexSet::span(1, 5)};
  SfConfig c = walkthrough_step(4);  // <{{1}}, {2}, 3, 6, {}>:4
  ASSERT_EQ(c.memory, std::vector<IndexSet>{IndexSet{1}});
  ASSERT_EQ(c.focus, IndexSet{2});
  EXPECT_TRUE(reachable(c, b));
  EXPECT_EQ(next_constituent(c, gold), a);
  EXPECT_EQ(dynamic_oracle(c, gold), std::vector<Action>{Action::shift()});

  SfConfig off = replay(sf_init(5), actions("SHIFT NO-LABEL SHIFT NO-LABEL "
                                            "COMBINE-{1}"));
  EXPECT_EQ(off.focus, IndexSet({1, 2}));
  EXPECT_FALSE(reachable(off, a));
  EXPECT_TRUE(reachable(off, s));

  SfConfig even = walkthrough_step(12);
  EXPECT_TRUE(even.k.contains(a));
  EXPECT_THROW(reachable(even, a), Error);
  EXPECT_EQ(next_constituent(even, gold), b);
  SfConfig eq = walkthrough_step(10);  // focus {2,3,4} before labelling
  EXPECT_FALSE(reachable(walkthrough_step(12), Constituent{Symbol("Z"), {2, 3, 4}}));
  EXPECT_EQ(dynamic_oracle(walkthrough_step(11), gold),
            std::vector<Action>{Action::label_with(Symbol("A"))});
  EXPECT_EQ(dynamic_oracle(walkthrough_step(1), gold),
            std::vector<Action>{Action::no_label()});
  EXPECT_EQ(next_constituent(sf_init(5), gold), a);
  (void)eq;
}

TEST(Trace, RoundTrip) {
  auto seq = actions("SHIFT REDUCE-VP REDUCEUNARY-NP SWAP MERGE GAP LABEL-A "
                     "NO-LABEL COMBINE-{2,3,4}");
  std::string text = format_trace(seq);
  EXPECT_NE(text.find("8\tCOMBINE\t2,3,4\n"), std::string::npos);
  EXPECT_NE(text.find("1\tREDUCE-VP\n"), std::string::npos);
  EXPECT_EQ(parse_trace(text), seq);
  EXPECT_THROW(parse_action("JUMP"), Error);
  EXPECT_THROW(parse_trace("0\tCOMBINE\t2,x\n"), Error);
}

// Replays every static oracle on every tree with up to four leaves.
TEST(Sweep, StaticOraclesRecoverGold) {
  for (int n = 1; n <= 4; ++n) {
    testing::for_each_tree(n, testing::two_labels(), [&](const ConstituentSet& k) {
      Tree t = constituents_to_tree(k);
      // Stack-free: invariants at every step.
      auto sf = sf_static_oracle(k);
      ASSERT_EQ(static_cast<int>(sf.size()), 4 * n - 2);
      SfConfig c = sf_init(n);
      IndexSet last_labelled;
      for (const Action& a : sf) {
        c = apply(c, a);
        if (!c.focus.empty()) {
          ASSERT_EQ(c.focus.max(), c.i - 1);
          for (const IndexSet& m : c.memory) ASSERT_LT(m.max(), c.focus.max());
        }
        if (a.kind == ActionKind::kLabel) {
          if (!last_labelled.empty()) {
            ASSERT_EQ(compare_right(last_labelled, c.focus), Order::kBefore);
          }
          last_labelled = c.focus;
        }
      }
      ASSERT_EQ(c.k, k);

      auto ml = mlgap_oracle(k);
      MlGapConfig g = mlgap_init(n);
      for (size_t s = 0; s < ml.size(); ++s) {
        ASSERT_EQ(ml[s].is_labelling(), g.state == MlGapState::kLabel);
        g = apply(g, ml[s]);
        if (!g.deque.empty()) {
          for (const auto* seq : {&g.stack, &g.deque}) {
            for (const IndexSet& x : *seq) ASSERT_LE(x.max(), g.deque.back().max());
          }
        }
      }
      ASSERT_EQ(g.k, k);

      Tree bin = binarize(t);
      bool projective = true;
      for (int v : t.internal_nodes()) projective &= t.indices(v).contiguous();
      for (auto s : {SwapStrategy::kEager, SwapStrategy::kLazy,
                     SwapStrategy::kLazier, SwapStrategy::kProjective}) {
        if (s == SwapStrategy::kProjective && !projective) continue;
        SwapOracleRun run = swap_oracle_run(bin, s);
        for (const SwapConditions& cond : run.checks) {
          ASSERT_TRUE(!cond.lazier || cond.lazy);
        }
        Tree back = debinarize(replay_sr(bin, run.actions,
                                         s != SwapStrategy::kProjective));
        ASSERT_TRUE(isomorphic(back, t)) << to_bracket(t);
        if (projective) {
          ASSERT_EQ(count(run.actions, ActionKind::kSwap), 0);
        }
      }
    });
  }
}

TEST(Sweep, StepBoundSixLeaves) {
  int trees = 0;
  testing::for_each_tree(6, {Symbol("X")}, [&](const ConstituentSet& k) {
    ASSERT_EQ(sf_static_oracle(k).size(), 22u);
    ++trees;
  });
  EXPECT_EQ(trees, 176128);
}

// Exhaustive configurations for n <= 3 against brute-force completions.
TEST(DynamicOracle, OptimalAndPreserving) {
  std::vector<Symbol> labels{Symbol("A"), Symbol("B"), Symbol("Z")};
  for (int n = 1; n <= 3; ++n) {
    testing::for_each_tree(n, testing::two_labels(), [&](const ConstituentSet& gold) {
      testing::SfBrute brute(gold);
      std::vector<SfConfig> todo{sf_init(n)};
      while (!todo.empty()) {
        SfConfig c = todo.back();
        todo.pop_back();
        if (is_terminal(c)) continue;
        // Reachability agrees with search.
        for (const Constituent& m : gold.members()) {
          if (c.k.contains(m)) continue;
          ASSERT_EQ(reachable(c, m), brute.reachable(c, m))
              << c.to_string() << " " << m.to_string();
        }
        // Following the oracle is optimal.
        SfConfig run = c;
        while (!is_terminal(run)) run = apply(run, dynamic_oracle_pick(run, gold));
        testing::Fraction got = testing::f1_fraction(
            testing::count_matched(run.k, gold), run.k.size(), gold.size());
        ASSERT_EQ(got, brute.best_f1(c)) << c.to_string();
        if (c.structural_step()) {
          for (const Action& a : dynamic_oracle(c, gold)) {
            SfConfig next = apply(c, a);
            for (const Constituent& m : gold.members()) {
              if (c.k.contains(m) || !brute.reachable(c, m)) continue;
              ASSERT_TRUE(brute.reachable(next, m));
            }
          }
        }
        for (const Action& a : legal(c, labels)) todo.push_back(apply(c, a));
      }
    });
  }
}

}  // namespace
}  // namespace discoparse
