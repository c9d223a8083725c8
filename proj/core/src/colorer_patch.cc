#include "happy/colorer_patch.h"

#include <cstdlib>

namespace happy {
namespace {

bool in_set(Color c, std::initializer_list<Color> magnitudes) {
  for (Color m : magnitudes) {
    if (c == m || c == -m) return true;
  }
  return false;
}

Color sign_of(Color c) { return c < 0 ? -1 : 1; }

bool near(EdgeLabel l) { return l == EdgeLabel::kNear; }

}  // namespace

Color choose_middle(Color c0, Color c2, EdgeLabel l01, EdgeLabel l12, MiddleCase which) {
  Color m_near = 0, m_far = 0;
  bool ok = false;
  switch (which) {
    case MiddleCase::kA:
      ok = c0 == 0 && in_set(c2, {1, 2, 3, 4});
      m_near = 2;
      m_far = 3;
      break;
    case MiddleCase::kB:
      ok = c0 == 0 && in_set(c2, {2, 3, 4});
      m_near = 2;
      m_far = 4;
      break;
    case MiddleCase::kC:
      ok = in_set(c0, {1}) && in_set(c2, {2, 3});
      m_near = 1;
      m_far = 4;
      break;
  }
  if (!ok)
    throw InputError("choose_middle: colors (" + std::to_string(c0) + ", " + std::to_string(c2) +
                     ") violate the case hypothesis");
  Color x = near(l01) ? m_near : m_far;
  if ((sign_of(x) == sign_of(c2)) != near(l12)) x = -x;
  return x;
}

std::array<Color, kTdRoleCount> color_tridodec_cell(const LabeledGraph& g,
                                                    std::span<const VertexId> roles, Color c_v0) {
  if (roles.size() != kTdRoleCount) throw InputError("3.12^2 cell needs 8 roles");
  if (c_v0 != 1 && c_v0 != -1) throw InputError("3.12^2 cell must start with c(v0) = +-1");
  auto l = [&](int a, int b) { return g.label(roles[a], roles[b]); };
  std::array<Color, kTdRoleCount> c{};
  c[kTdV0] = c_v0;
  c[kTdV1] = choose_middle(0, c[kTdV0], l(kTdU0, kTdV1), l(kTdV1, kTdV0), MiddleCase::kA);
  c[kTdV2] = choose_middle(c[kTdV0], c[kTdV1], l(kTdV0, kTdV2), l(kTdV2, kTdV1), MiddleCase::kC);
  c[kTdV3] = choose_middle(0, c[kTdV2], l(kTdU1, kTdV3), l(kTdV3, kTdV2), MiddleCase::kA);
  c[kTdV4] = choose_middle(0, c[kTdV3], l(kTdU1, kTdV4), l(kTdV4, kTdV3), MiddleCase::kA);
  c[kTdV5] = near(l(kTdV4, kTdV5)) ? sign_of(c[kTdV4]) : -sign_of(c[kTdV4]);
  return c;
}

Color sqhexdodec_start(EdgeLabel v0_u0) { return near(v0_u0) ? 2 : 4; }

Color sqhexdodec_v1(Color c_v3, EdgeLabel l_v0v1, EdgeLabel l_v1v3) {
  // Rows c(v3) = 1, -1, 4, -4; columns (l(v0,v1), l(v1,v3)) = NF, NN, FN, FF.
  // Where two colors are valid the first listed is kept.
  static constexpr Color kTable[4][4] = {
      {4, 2, 0, -4},
      {2, 0, -2, -4},
      {0, 2, 0, -4},
      {2, 0, -4, 0},
  };
  int row = -1;
  if (c_v3 == 1) row = 0;
  if (c_v3 == -1) row = 1;
  if (c_v3 == 4) row = 2;
  if (c_v3 == -4) row = 3;
  if (row < 0) throw InputError("c(v3) must be one of 1, -1, 4, -4");
  const int col = near(l_v0v1) ? (near(l_v1v3) ? 1 : 0) : (near(l_v1v3) ? 2 : 3);
  return kTable[row][col];
}

std::array<Color, kShRoleCount> color_sqhexdodec_cell(const LabeledGraph& g,
                                                      std::span<const VertexId> roles, Color c_v0) {
  if (roles.size() != kShRoleCount) throw InputError("4.6.12 cell needs 16 roles");
  auto l = [&](int a, int b) { return g.label(roles[a], roles[b]); };
  if (c_v0 == 0 || std::llabs(c_v0) != sqhexdodec_start(l(kShV0, kShU0)))
    throw InputError("c(v0) is not admissible for the v0-u0 label");
  // Negative starts mirror the positive construction.
  const Color flip = sign_of(c_v0);
  std::array<Color, kShRoleCount> c{};
  c[kShV0] = flip * c_v0;
  c[kShV6] = 1;
  c[kShV5] = choose_middle(0, c[kShV6], l(kShU2, kShV5), l(kShV5, kShV6), MiddleCase::kA);
  c[kShV4] = choose_middle(0, c[kShV5], l(kShU1, kShV4), l(kShV4, kShV5), MiddleCase::kA);
  c[kShV3] = choose_middle(c[kShV6], c[kShV4], l(kShV6, kShV3), l(kShV3, kShV4), MiddleCase::kC);
  Color v1 = sqhexdodec_v1(c[kShV3], l(kShV0, kShV1), l(kShV1, kShV3));
  if (v1 == 0) {
    for (int r : {kShV3, kShV4, kShV5, kShV6}) c[r] = -c[r];
    v1 = sqhexdodec_v1(c[kShV3], l(kShV0, kShV1), l(kShV1, kShV3));
    if (v1 == 0) throw InternalError("v1 table has no entry after negating v3..v6");
  }
  c[kShV1] = v1;
  c[kShV2] = choose_middle(0, c[kShV1], l(kShU0, kShV2), l(kShV2, kShV1), MiddleCase::kA);
  c[kShV8] = choose_middle(0, c[kShV2], l(kShU3, kShV8), l(kShV8, kShV2), MiddleCase::kA);
  c[kShV7] = choose_middle(c[kShV6], c[kShV8], l(kShV6, kShV7), l(kShV7, kShV8), MiddleCase::kC);
  c[kShV9] = choose_middle(0, c[kShV7], l(kShU3, kShV9), l(kShV9, kShV7), MiddleCase::kA);
  c[kShV10] = choose_middle(0, c[kShV9], l(kShU4, kShV10), l(kShV10, kShV9), MiddleCase::kB);
  for (Color& x : c) x *= flip;
  return c;
}

ColoringScheme color_lattice_patchwise(const LatticePatch& patch, const LabeledGraph& labeled) {
  const bool tridodec = patch.name == LatticeName::k3_12_2;
  if (!tridodec && patch.name != LatticeName::k4_6_12)
    throw InputError("patch colorer needs a 3.12^2 or 4.6.12 patch, got " + to_string(patch.name));
  if (!patch.annotations.patch_cells) throw InputError("patch lacks patch_cells annotations");
  require_same_topology(patch.graph, labeled);
  const auto& cells = *patch.annotations.patch_cells;

  const std::size_t n = labeled.vertex_count();
  std::vector<Color> colors(n, 0);
  std::vector<char> set(n, 0);
  auto put = [&](VertexId v, Color x) {
    if (v >= n) throw InputError("cell role out of range");
    if (set[v] && colors[v] != x)
      throw InternalError("cells disagree on the color of vertex " + std::to_string(v));
    colors[v] = x;
    set[v] = 1;
  };

  Color carry = 0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const PatchCell& cell = cells[k];
    const bool row_start = k == 0 || cells[k - 1].row != cell.row;
    if (tridodec) {
      if (row_start) carry = 1;
      const auto c = color_tridodec_cell(labeled, cell.roles, carry);
      for (int r = 0; r < kTdRoleCount; ++r) put(cell.roles[r], c[r]);
      carry = c[kTdV5];
    } else {
      if (cell.roles.size() != kShRoleCount) throw InputError("4.6.12 cell needs 16 roles");
      if (row_start) carry = sqhexdodec_start(labeled.label(cell.roles[kShV0], cell.roles[kShU0]));
      const auto c = color_sqhexdodec_cell(labeled, cell.roles, carry);
      for (int r = 0; r < kShRoleCount; ++r) put(cell.roles[r], c[r]);
      carry = c[kShV10];
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!set[v]) throw InputError("vertex " + std::to_string(v) + " is in no patch cell");
  }
  Coloring c{std::move(colors)};
  if (!verify_coloring(labeled, c, 2).valid) throw InternalError("patch coloring failed to verify");
  return {std::move(c), 9, 2, "patch"};
}

}  // namespace happy
