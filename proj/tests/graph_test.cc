#include <gtest/gtest.h>

#include "happy/graph.h"
#include "happy/lattice.h"
#include "oracle.h"

using namespace happy;

namespace {

constexpr EdgeLabel N = EdgeLabel::kNear;
constexpr EdgeLabel F = EdgeLabel::kFar;

TEST(Graph, EdgesAreCanonicalAndSorted) {
  LabeledGraph g(4, {{3, 1, N}, {2, 0, F}, {0, 1, N}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1, N}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2, F}));
  EXPECT_EQ(g.edge(2), (Edge{1, 3, N}));
  EXPECT_EQ(g.label(2, 0), F);
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(LabeledGraph(2, {{1, 1, N}}), InputError);
  EXPECT_THROW(LabeledGraph(2, {{0, 2, N}}), InputError);
  EXPECT_THROW(LabeledGraph(2, {{0, 1, N}, {1, 0, F}}), InputError);
  EXPECT_THROW(label_from_string("X"), InputError);
}

TEST(Verify, SingleNearEdge) {
  LabeledGraph g(2, {{0, 1, N}});
  const VerifyReport r = verify_coloring(g, {{0, 0}}, 0);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.range_used, 1);
}

TEST(Verify, SingleFarEdgeAtZeroDistance) {
  LabeledGraph g(2, {{0, 1, F}});
  const VerifyReport r = verify_coloring(g, {{0, 0}}, 0);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.violations.size(), 1u);
}

TEST(Verify, TriangleWithOneFarEdge) {
  LabeledGraph g(3, {{0, 1, N}, {1, 2, N}, {0, 2, F}});
  const VerifyReport r = verify_coloring(g, {{0, 1, 2}}, 1);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.range_used, 3);
}

TEST(Verify, Errors) {
  LabeledGraph g(3, {{0, 1, N}});
  EXPECT_THROW(verify_coloring(g, {{0, 0}}, 0), InputError);
  EXPECT_THROW(verify_coloring(g, {{0, 0, 0}}, -1), InputError);
}

// valid <=> oracle, and violations are exactly the failing edges.
TEST(Verify, MatchesDefinitionOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const LabeledGraph g = oracle::random_graph(rng, n, 0.5, 0.4);
    std::vector<Color> c(n);
    for (Color& x : c) x = static_cast<Color>(rng() % 9) - 4;
    const std::int64_t t = rng() % 4;
    const VerifyReport r = verify_coloring(g, {c}, t);
    ASSERT_EQ(r.valid, oracle::valid(g, c, t));
    std::vector<Edge> expected;
    for (const Edge& e : g.edges()) {
      if ((std::llabs(c[e.u] - c[e.v]) <= t) != (e.label == N)) expected.push_back(e);
    }
    ASSERT_EQ(r.violations, expected);
    ASSERT_EQ(r.range_used, oracle::range(c));
  }
}

TEST(Range, Examples) {
  EXPECT_EQ(range_of({{0, 0, 0}}), 1);
  EXPECT_EQ(range_of({{-2, -1, 0, 1, 2}}), 5);
  const Color k = 4;
  EXPECT_EQ(range_of({{1, 3 * k + 2}}), 14);
  EXPECT_THROW(range_of({}), InputError);
}

TEST(Induced, KeepAllIsIdentity) {
  LabeledGraph g(3, {{0, 1, N}, {1, 2, F}});
  const std::vector<VertexId> keep{0, 1, 2};
  const InducedSubgraph s = induced_subgraph(g, keep);
  EXPECT_EQ(s.graph.edges(), g.edges());
  EXPECT_EQ(s.new_to_old, keep);
}

TEST(Induced, PathEndpoints) {
  LabeledGraph g(3, {{0, 1, N}, {1, 2, N}});
  const std::vector<VertexId> keep{0, 2};
  const InducedSubgraph s = induced_subgraph(g, keep);
  EXPECT_EQ(s.graph.vertex_count(), 2u);
  EXPECT_EQ(s.graph.edge_count(), 0u);
  EXPECT_EQ(s.old_to_new[1], kNoVertex);
}

TEST(Induced, UnitSquareOfSquarePatch) {
  const LatticePatch p = generate(LatticeName::k4_4, {2, 2});
  std::mt19937_64 rng(5);
  const LabeledGraph g = oracle::random_labels(p.graph, rng);
  // Pick a unit square: a 4-cycle a-b-c-d through vertex 0's corner.
  std::vector<VertexId> square;
  for (VertexId a = 0; a < g.vertex_count() && square.empty(); ++a) {
    for (const Incidence& x : g.neighbors(a)) {
      for (const Incidence& y : g.neighbors(a)) {
        if (x.neighbor >= y.neighbor) continue;
        for (const Incidence& z : g.neighbors(x.neighbor)) {
          if (z.neighbor != a && g.find_edge(z.neighbor, y.neighbor) && square.empty()) {
            square = {a, x.neighbor, z.neighbor, y.neighbor};
          }
        }
      }
    }
  }
  ASSERT_EQ(square.size(), 4u);
  const InducedSubgraph s = induced_subgraph(g, square);
  ASSERT_EQ(s.graph.edge_count(), 4u);
  for (const Edge& e : s.graph.edges()) {
    EXPECT_EQ(e.label, g.label(s.new_to_old[e.u], s.new_to_old[e.v]));
  }
  const std::vector<VertexId> bad{0, 99};
  EXPECT_THROW(induced_subgraph(g, bad), InputError);
}

// A valid coloring stays valid on every induced subgraph.
TEST(Induced, RestrictionPreservesValidity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const LabeledGraph g = oracle::random_graph(rng, 7, 0.5, 0.5);
    std::vector<Color> c(7);
    for (Color& x : c) x = rng() % 5;
    const std::int64_t t = rng() % 3;
    std::vector<EdgeLabel> labels;
    for (const Edge& e : g.edges()) labels.push_back(std::llabs(c[e.u] - c[e.v]) <= t ? N : F);
    const LabeledGraph ok = g.relabeled(labels);
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < 7; ++v) {
      if (rng() % 2) keep.push_back(v);
    }
    const InducedSubgraph s = induced_subgraph(ok, keep);
    EXPECT_TRUE(verify_coloring(s.graph, restrict_coloring({c}, s.new_to_old), t).valid);
  }
}

TEST(Normalize, ShiftsToZeroAndKeepsValidity) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const LabeledGraph g = oracle::random_graph(rng, 6, 0.6, 0.5);
    std::vector<Color> c(6);
    for (Color& x : c) x = static_cast<Color>(rng() % 11) - 20;
    const Coloring n = normalize({c});
    EXPECT_EQ(*std::min_element(n.colors.begin(), n.colors.end()), 0);
    for (std::int64_t t = 0; t < 4; ++t) {
      EXPECT_EQ(verify_coloring(g, {c}, t).valid, verify_coloring(g, n, t).valid);
    }
  }
}

}  // namespace
