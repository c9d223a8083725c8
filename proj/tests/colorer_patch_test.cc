#include <gtest/gtest.h>

#include "happy/colorer_patch.h"
#include "happy/lattice.h"
#include "oracle.h"

using namespace happy;

namespace {

constexpr EdgeLabel N = EdgeLabel::kNear;
constexpr EdgeLabel F = EdgeLabel::kFar;

bool fits(Color a, Color b, EdgeLabel l) { return (std::llabs(a - b) <= 2) == (l == N); }

TEST(ChooseMiddle, Examples) {
  EXPECT_EQ(choose_middle(0, 1, N, N, MiddleCase::kA), 2);
  EXPECT_EQ(choose_middle(0, 1, F, F, MiddleCase::kA), -3);
  EXPECT_EQ(choose_middle(1, -3, F, N, MiddleCase::kC), -4);
  EXPECT_THROW(choose_middle(0, 1, N, N, MiddleCase::kB), InputError);
  EXPECT_THROW(choose_middle(2, 2, N, N, MiddleCase::kC), InputError);
}

// Every hypothesis pair and labeling lands in the target set and fits both edges.
TEST(ChooseMiddle, AllCases) {
  struct Case {
    MiddleCase which;
    std::vector<Color> c0, c2, target;
  };
  const std::vector<Case> cases = {
      {MiddleCase::kA, {0}, {-4, -3, -2, -1, 1, 2, 3, 4}, {-3, -2, 2, 3}},
      {MiddleCase::kB, {0}, {-4, -3, -2, 2, 3, 4}, {-4, -2, 2, 4}},
      {MiddleCase::kC, {-1, 1}, {-3, -2, 2, 3}, {-4, -1, 1, 4}},
  };
  for (const Case& cs : cases) {
    for (Color c0 : cs.c0) {
      for (Color c2 : cs.c2) {
        for (EdgeLabel l01 : {N, F}) {
          for (EdgeLabel l12 : {N, F}) {
            const Color m = choose_middle(c0, c2, l01, l12, cs.which);
            EXPECT_NE(std::find(cs.target.begin(), cs.target.end(), m), cs.target.end());
            EXPECT_TRUE(fits(c0, m, l01) && fits(m, c2, l12)) << c0 << ' ' << c2 << ' ' << m;
          }
        }
      }
    }
  }
}

// The cell alone, with role i as vertex i.
LabeledGraph cell_graph(LatticeName name, std::uint64_t bits) {
  std::vector<Edge> edges;
  std::size_t i = 0;
  for (const auto& [a, b] : cell_role_edges(name)) {
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), (bits >> i++) & 1 ? F : N});
  }
  return LabeledGraph(cell_role_names(name).size(), edges);
}

std::vector<VertexId> identity_roles(std::size_t n) {
  std::vector<VertexId> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<VertexId>(i);
  return r;
}

TEST(TridodecCell, AllNearAndAllFar) {
  const auto roles = identity_roles(kTdRoleCount);
  const std::size_t m = cell_role_edges(LatticeName::k3_12_2).size();
  for (std::uint64_t bits : {std::uint64_t{0}, std::uint64_t{(1ull << m) - 1}}) {
    const LabeledGraph g = cell_graph(LatticeName::k3_12_2, bits);
    const auto c = color_tridodec_cell(g, roles, 1);
    EXPECT_TRUE(oracle::valid(g, {c.begin(), c.end()}, 2));
    EXPECT_EQ(std::llabs(c[kTdV5]), 1);
  }
}

TEST(TridodecCell, Exhaustive) {
  const auto roles = identity_roles(kTdRoleCount);
  const std::size_t m = cell_role_edges(LatticeName::k3_12_2).size();
  ASSERT_EQ(m, 9u);
  for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
    const LabeledGraph g = cell_graph(LatticeName::k3_12_2, bits);
    for (Color start : {1, -1}) {
      const auto c = color_tridodec_cell(g, roles, start);
      ASSERT_TRUE(oracle::valid(g, {c.begin(), c.end()}, 2)) << bits << ' ' << start;
      ASSERT_EQ(c[kTdU0], 0);
      ASSERT_EQ(c[kTdU1], 0);
      ASSERT_EQ(c[kTdV0], start);
      ASSERT_EQ(std::llabs(c[kTdV5]), 1);
    }
  }
  EXPECT_THROW(color_tridodec_cell(cell_graph(LatticeName::k3_12_2, 0), roles, 2), InputError);
}

TEST(SqhexdodecTable, Examples) {
  EXPECT_EQ(sqhexdodec_v1(1, N, F), 4);
  EXPECT_EQ(sqhexdodec_v1(-1, N, N), 0);  // no color: the chain gets negated
  EXPECT_EQ(sqhexdodec_v1(1, N, N), 2);
  EXPECT_EQ(sqhexdodec_start(N), 2);
  EXPECT_EQ(sqhexdodec_start(F), 4);
}

// Every listed table entry fits v0 (taken as 2 or 4 per the row's l(v0,v1)
// use) and v3 at threshold 2.
TEST(SqhexdodecTable, EntriesFit) {
  for (Color c3 : {1, -1, 4, -4}) {
    for (EdgeLabel a : {N, F}) {
      for (EdgeLabel b : {N, F}) {
        const Color v1 = sqhexdodec_v1(c3, a, b);
        if (v1 == 0) continue;
        EXPECT_TRUE(v1 == 2 || v1 == -2 || v1 == 4 || v1 == -4);
        EXPECT_TRUE(fits(v1, c3, b)) << c3 << ' ' << v1;
      }
    }
  }
}

TEST(SqhexdodecCell, Exhaustive) {
  const auto roles = identity_roles(kShRoleCount);
  const std::size_t m = cell_role_edges(LatticeName::k4_6_12).size();
  ASSERT_EQ(m, 19u);
  for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
    const LabeledGraph g = cell_graph(LatticeName::k4_6_12, bits);
    const Color mag = sqhexdodec_start(g.label(roles[kShV0], roles[kShU0]));
    for (Color start : {mag, -mag}) {
      const auto c = color_sqhexdodec_cell(g, roles, start);
      ASSERT_TRUE(oracle::valid(g, {c.begin(), c.end()}, 2)) << bits << ' ' << start;
      for (int u = kShU0; u <= kShU4; ++u) ASSERT_EQ(c[u], 0);
      const Color end = std::llabs(c[kShV10]);
      ASSERT_TRUE(end == 2 || end == 4);
    }
  }
}

TEST(Patchwise, SingleCells) {
  std::mt19937_64 rng(1);
  for (LatticeName name : {LatticeName::k3_12_2, LatticeName::k4_6_12}) {
    const LatticePatch p = generate(name, {1, 1});
    for (int trial = 0; trial < 200; ++trial) {
      const LabeledGraph g = oracle::random_labels(p.graph, rng);
      EXPECT_TRUE(oracle::valid(g, color_lattice_patchwise(p, g).coloring.colors, 2));
    }
  }
}

TEST(Patchwise, RandomLabelingsPaletteAndRoles) {
  std::mt19937_64 rng(77);
  const std::vector<std::pair<LatticeName, PatchParams>> cases = {{LatticeName::k3_12_2, {2, 3}},
                                                                  {LatticeName::k4_6_12, {2, 2}},
                                                                  {LatticeName::k4_6_12, {3, 2}}};
  for (const auto& [name, params] : cases) {
    const LatticePatch p = generate(name, params);
    const std::size_t zero_roles = name == LatticeName::k3_12_2 ? 2 : 5;
    for (int trial = 0; trial < 200; ++trial) {
      const LabeledGraph g = oracle::random_labels(p.graph, rng, oracle::uniform(rng));
      const ColoringScheme s = color_lattice_patchwise(p, g);
      ASSERT_EQ(s.t, 2);
      ASSERT_TRUE(oracle::valid(g, s.coloring.colors, 2));
      for (Color c : s.coloring.colors) ASSERT_TRUE(c >= -4 && c <= 4);
      ASSERT_LE(oracle::range(s.coloring.colors), 9);
      for (const PatchCell& cell : *p.annotations.patch_cells) {
        for (std::size_t i = 0; i < zero_roles; ++i) ASSERT_EQ(s.coloring[cell.roles[i]], 0);
      }
    }
  }
}

TEST(Patchwise, RestrictionStaysValid) {
  std::mt19937_64 rng(5);
  const LatticePatch p = generate(LatticeName::k3_12_2, {2, 2});
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = oracle::random_labels(p.graph, rng);
    const Coloring c = color_lattice_patchwise(p, g).coloring;
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (rng() % 3) keep.push_back(v);
    }
    const InducedSubgraph s = induced_subgraph(g, keep);
    EXPECT_TRUE(verify_coloring(s.graph, restrict_coloring(c, s.new_to_old), 2).valid);
  }
}

TEST(Patchwise, WrongLattice) {
  const LatticePatch p = generate(LatticeName::k6_3, {1, 1});
  EXPECT_THROW(color_lattice_patchwise(p, p.graph), InputError);
}

}  // namespace
