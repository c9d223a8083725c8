#include <gtest/gtest.h>

#include <algorithm>

#include "happy/hardness.h"
#include "happy/solver.h"
#include "oracle.h"

using namespace happy;

namespace {

constexpr EdgeLabel N = EdgeLabel::kNear;
constexpr EdgeLabel F = EdgeLabel::kFar;

LabeledGraph triangle_one_far() { return LabeledGraph(3, {{0, 1, N}, {1, 2, N}, {0, 2, F}}); }

TEST(Decide, SingleNearEdge) {
  const SolveResult r = decide(LabeledGraph(2, {{0, 1, N}}), {1, std::nullopt, {}});
  ASSERT_EQ(r.status, SolveStatus::kSat);
  EXPECT_EQ(r.t, 0);
  EXPECT_EQ(r.witness->colors, (std::vector<Color>{0, 0}));
}

TEST(Decide, K4GadgetUnsat) {
  EXPECT_EQ(decide(build_gadget(GadgetName::kFig6d), {7, std::nullopt, {}}).status, SolveStatus::kUnsat);
}

TEST(Decide, TriangleWithOneFarEdge) {
  const LabeledGraph g = triangle_one_far();
  const SolveResult r = decide(g, {3, 1, {}});
  ASSERT_EQ(r.status, SolveStatus::kSat);
  EXPECT_TRUE(oracle::valid(g, r.witness->colors, 1));
  std::vector<Color> c = r.witness->colors;
  if (c[0] > c[2]) std::swap(c[0], c[2]);
  EXPECT_EQ(c, (std::vector<Color>{0, 1, 2}));
  // A cycle with exactly one Far edge has no threshold-0 coloring.
  EXPECT_EQ(decide(g, {3, 0, {}}).status, SolveStatus::kUnsat);
}

TEST(Decide, PinsAreHonoured) {
  const LabeledGraph g = triangle_one_far();
  SolveOptions o;
  o.pins = {{0, 2}};
  const SolveResult r = decide(g, {3, 1, o});
  ASSERT_EQ(r.status, SolveStatus::kSat);
  EXPECT_EQ(r.witness->colors, (std::vector<Color>{2, 1, 0}));
  o.pins = {{0, 1}};
  EXPECT_EQ(decide(g, {3, 1, o}).status, SolveStatus::kUnsat);
}

TEST(Decide, BudgetIsAStatus) {
  SolveOptions o;
  o.budget = 10;
  EXPECT_EQ(decide(build_square_spiral(5), {5, 1, o}).status, SolveStatus::kBudgetExceeded);
}

TEST(Decide, Deterministic) {
  const LabeledGraph g = build_gadget(GadgetName::kFig6b);
  const SolveResult a = decide(g, {6, std::nullopt, {}});
  const SolveResult b = decide(g, {6, std::nullopt, {}});
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.nodes, b.nodes);
}

// Completeness and soundness against plain enumeration, with and without
// order pruning and symmetry breaking.
TEST(Decide, AgreesWithBruteForce) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const LabeledGraph g = oracle::random_graph(rng, n, 0.3 + 0.6 * oracle::uniform(rng), oracle::uniform(rng));
    const std::int64_t r = 1 + rng() % 4;
    const std::optional<std::int64_t> t =
        rng() % 2 ? std::optional<std::int64_t>(rng() % r) : std::nullopt;
    const bool expected = oracle::brute_force(g, r, t).has_value();
    for (int mode = 0; mode < 4; ++mode) {
      SolveOptions o;
      o.order_pruning = mode & 1;
      o.symmetry_breaking = !(mode & 2);
      const SolveResult res = decide(g, {r, t, o});
      ASSERT_NE(res.status, SolveStatus::kBudgetExceeded);
      ASSERT_EQ(res.status == SolveStatus::kSat, expected) << "trial " << trial << " mode " << mode;
      if (res.witness) {
        ASSERT_TRUE(oracle::valid(g, res.witness->colors, *res.t));
        for (Color c : res.witness->colors) ASSERT_TRUE(c >= 0 && c < r);
        if (t) {
          ASSERT_EQ(*res.t, *t);
        }
      }
    }
  }
}

TEST(MinColors, Examples) {
  const MinColorsResult single = min_colors(LabeledGraph(1, {}), 4);
  EXPECT_EQ(single.r, 1);
  EXPECT_EQ(single.t, 0);
  // Two colors cannot work: t = 0 dies on the one-Far cycle and t = 1 makes
  // every pair of {0,1} Near.
  const MinColorsResult tri = min_colors(triangle_one_far(), 6);
  EXPECT_EQ(tri.status, SolveStatus::kSat);
  EXPECT_EQ(tri.r, 3);
  EXPECT_EQ(tri.t, 1);
  EXPECT_EQ(min_colors(build_gadget(GadgetName::kFig6d), 5).status, SolveStatus::kUnsat);
}

TEST(MinColors, SquareSpiralGrows) {
  const MinColorsResult g3 = min_colors(build_square_spiral(3), 10, 1);
  const MinColorsResult g5 = min_colors(build_square_spiral(5), 10, 1);
  ASSERT_EQ(g3.status, SolveStatus::kSat);
  ASSERT_EQ(g5.status, SolveStatus::kSat);
  EXPECT_LT(g3.r, g5.r);
}

TEST(MinColors, MatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const LabeledGraph g = oracle::random_graph(rng, 1 + rng() % 6, 0.6, 0.4);
    std::int64_t expected = 0;
    for (std::int64_t r = 1; r <= 5 && !expected; ++r) {
      if (oracle::brute_force(g, r)) expected = r;
    }
    const MinColorsResult m = min_colors(g, 5);
    if (expected) {
      ASSERT_EQ(m.status, SolveStatus::kSat);
      ASSERT_EQ(m.r, expected);
      for (std::int64_t t = 0; t < m.t; ++t) ASSERT_FALSE(oracle::brute_force(g, m.r, t));
      ASSERT_TRUE(oracle::brute_force(g, m.r, m.t));
    } else {
      ASSERT_EQ(m.status, SolveStatus::kUnsat);
    }
  }
}

TEST(AllLabelings, Examples) {
  EXPECT_TRUE(check_all_labelings(LabeledGraph(2, {{0, 1, N}}), 3, 1).all_colorable);

  std::vector<Edge> hex;
  for (VertexId v = 0; v < 6; ++v) hex.push_back({v, (v + 1) % 6, N});
  EXPECT_TRUE(check_all_labelings(LabeledGraph(6, hex), 5, 1).all_colorable);

  // The triangle is (5,1)-total; with 4 colors the all-Far labeling fails.
  const LabeledGraph tri(3, {{0, 1, N}, {1, 2, N}, {0, 2, N}});
  EXPECT_TRUE(check_all_labelings(tri, 5, 1).all_colorable);
  const LabelingCheck c = check_all_labelings(tri, 4, 1);
  EXPECT_FALSE(c.all_colorable);
  ASSERT_TRUE(c.counterexample);
  EXPECT_EQ(*c.counterexample, (std::vector<EdgeLabel>{F, F, F}));
}

TEST(AllLabelings, Guard) {
  std::vector<Edge> e;
  for (VertexId v = 0; v < 21; ++v) e.push_back({v, v + 1, N});
  EXPECT_THROW(check_all_labelings(LabeledGraph(22, e), 3, 1), InputError);
}

TEST(OrderRules, TriangleRule) {
  const OrderFact seed{0, 1};
  const OrderClosure c = propagate_order_constraints(triangle_one_far(), std::span(&seed, 1));
  EXPECT_FALSE(c.contradiction);
  EXPECT_TRUE(std::binary_search(c.facts.begin(), c.facts.end(), OrderFact{1, 2}));
  EXPECT_TRUE(std::binary_search(c.facts.begin(), c.facts.end(), OrderFact{0, 2}));
}

TEST(OrderRules, FourCycleRule) {
  const LabeledGraph g(4, {{0, 1, F}, {1, 2, N}, {2, 3, F}, {0, 3, N}});
  const OrderFact seed{0, 1};
  const OrderClosure c = propagate_order_constraints(g, std::span(&seed, 1));
  EXPECT_FALSE(c.contradiction);
  EXPECT_TRUE(std::binary_search(c.facts.begin(), c.facts.end(), OrderFact{3, 2}));
}

TEST(OrderRules, K4Contradiction) {
  const LabeledGraph g = build_gadget(GadgetName::kFig6d);
  const OrderFact seed{0, 3};
  EXPECT_TRUE(propagate_order_constraints(g, std::span(&seed, 1)).contradiction);
}

// Each rule holds in every valid coloring found by enumeration.
TEST(OrderRules, SoundOnRandomGraphs) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    const LabeledGraph g = oracle::random_graph(rng, n, 0.8, 0.5);
    const auto rules = order_rules(g);
    if (rules.empty()) continue;
    const std::int64_t r = 5;
    std::vector<Color> c(n, 0);
    while (true) {
      for (std::int64_t t = 0; t < r; ++t) {
        if (!oracle::valid(g, c, t)) continue;
        for (const OrderRule& rule : rules) {
          if (c[rule.premise.lo] >= c[rule.premise.hi]) continue;
          ++checked;
          for (const OrderFact& f : rule.conclusions) ASSERT_LT(c[f.lo], c[f.hi]);
        }
      }
      std::size_t i = 0;
      while (i < n && ++c[i] == r) c[i++] = 0;
      if (i == n) break;
    }
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
