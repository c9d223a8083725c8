#include <gtest/gtest.h>

#include "happy/colorer_forest.h"
#include "happy/lattice.h"
#include "oracle.h"

using namespace happy;

namespace {

constexpr EdgeLabel N = EdgeLabel::kNear;
constexpr EdgeLabel F = EdgeLabel::kFar;

LabeledGraph hexagon(EdgeLabel l) {
  std::vector<Edge> e;
  for (VertexId v = 0; v < 6; ++v) e.push_back({v, (v + 1) % 6, l});
  return LabeledGraph(6, e);
}

TEST(Forest, HexagonDecomposition) {
  const ForestDecomposition d = decompose(hexagon(N), {0, 3}, {1, 2, 4, 5});
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.components[0].root, 1u);
  EXPECT_EQ(d.components[0].order, (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(d.components[1].root, 4u);
}

TEST(Forest, HexagonAllNear) {
  const LabeledGraph g = hexagon(N);
  const ColoringScheme s = color_forest(g, decompose(g, {0, 3}, {1, 2, 4, 5}));
  EXPECT_EQ(s.coloring.colors, (std::vector<Color>{0, 1, 1, 0, 1, 1}));
  EXPECT_EQ(s.t, 1);
}

TEST(Forest, HexagonAllFar) {
  const LabeledGraph g = hexagon(F);
  const ColoringScheme s = color_forest(g, decompose(g, {0, 3}, {1, 2, 4, 5}));
  EXPECT_EQ(s.coloring.colors, (std::vector<Color>{0, 2, -2, 0, 2, -2}));
}

TEST(Forest, EmptyIndependentSet) {
  LabeledGraph g(4, {{0, 1, F}, {1, 2, N}, {1, 3, F}});
  const ForestDecomposition d = decompose(g, {}, {0, 1, 2, 3});
  const ColoringScheme s = color_forest(g, d);
  EXPECT_TRUE(oracle::valid(g, s.coloring.colors, 1));
}

TEST(Forest, RejectsBadDecompositions) {
  const LabeledGraph g = hexagon(N);
  EXPECT_THROW(decompose(g, {0, 1}, {2, 3, 4, 5}), InputError);     // adjacent I
  EXPECT_THROW(decompose(g, {0, 2}, {1, 3, 4, 5}), InputError);     // distance 2
  EXPECT_THROW(decompose(g, {}, {0, 1, 2, 3, 4, 5}), InputError);   // T is a cycle
  EXPECT_THROW(decompose(g, {0}, {1, 2, 3, 4}), InputError);        // 5 missing
  EXPECT_THROW(decompose(generate(LatticeName::k4_4, {2, 2})), InputError);
}

// Every labeling of the smallest patches.
TEST(Forest, ExhaustiveSmallPatches) {
  for (LatticeName name : {LatticeName::k6_3, LatticeName::k4_8_2}) {
    const LatticePatch p = generate(name, {1, 1});
    ASSERT_LE(p.graph.edge_count(), 20u);
    const ForestDecomposition d = decompose(p);
    for (std::uint64_t bits = 0; bits < (1ull << p.graph.edge_count()); ++bits) {
      const LabeledGraph g = oracle::labeling(p.graph, bits);
      const ColoringScheme s = color_forest(g, d);
      ASSERT_TRUE(oracle::valid(g, s.coloring.colors, 1)) << to_string(name) << " labeling " << bits;
    }
  }
}

TEST(Forest, RandomLabelingsOnLargePatches) {
  std::mt19937_64 rng(2024);
  for (LatticeName name : {LatticeName::k6_3, LatticeName::k4_8_2}) {
    const LatticePatch p = generate(name, {3, 3});
    const ForestDecomposition d = decompose(p);
    std::set<VertexId> independent(d.independent.begin(), d.independent.end());
    for (int trial = 0; trial < 300; ++trial) {
      const LabeledGraph g = oracle::random_labels(p.graph, rng, oracle::uniform(rng));
      const ColoringScheme s = color_forest(g, d);
      ASSERT_TRUE(oracle::valid(g, s.coloring.colors, 1));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Color c = s.coloring[v];
        ASSERT_GE(c, -2);
        ASSERT_LE(c, 2);
        if (independent.count(v)) {
          ASSERT_EQ(c, 0);
        }
      }
      ASSERT_EQ(color_forest(g, d).coloring, s.coloring);  // deterministic
    }
  }
}

}  // namespace
