#pragma once

#include <array>
#include <span>

#include "happy/graph.h"
#include "happy/lattice.h"

namespace happy {

/// Path v0 - v1 - v2 with c(v0), c(v2) fixed; the case names the hypothesis
/// on (c0, c2) and the set c(v1) is drawn from:
///   a: c0 = 0,  c2 in {+-1..+-4}   -> {+-2, +-3}
///   b: c0 = 0,  c2 in {+-2..+-4}   -> {+-2, +-4}
///   c: c0 = +-1, c2 in {+-2, +-3}  -> {+-1, +-4}
enum class MiddleCase { kA, kB, kC };

/// Threshold 2. Throws InputError when (c0, c2) violate the case hypothesis.
Color choose_middle(Color c0, Color c2, EdgeLabel l01, EdgeLabel l12, MiddleCase which);

/// Colors one 3.12^2 cell (roles in TridodecRole order) given c(v0) = +-1.
/// u0 and u1 get 0; the returned v5 color is +-1.
std::array<Color, kTdRoleCount> color_tridodec_cell(const LabeledGraph& g,
                                                    std::span<const VertexId> roles, Color c_v0);

/// Admissible start for a 4.6.12 cell: 2 if v0-u0 is Near, else 4.
Color sqhexdodec_start(EdgeLabel v0_u0);

/// Entry of the v1 table for c(v3) in {1,-1,4,-4} (v0 colored positive);
/// 0 marks a combination that has no valid color.
Color sqhexdodec_v1(Color c_v3, EdgeLabel l_v0v1, EdgeLabel l_v1v3);

/// Colors one 4.6.12 cell (roles in SqhexdodecRole order) given
/// c(v0) in {+-2, +-4} consistent with the v0-u0 label. The returned v10
/// color lies in {+-2, +-4}.
std::array<Color, kShRoleCount> color_sqhexdodec_cell(const LabeledGraph& g,
                                                      std::span<const VertexId> roles, Color c_v0);

/// Row-by-row assembly over the patch cells; threshold 2, colors in [-4, 4].
ColoringScheme color_lattice_patchwise(const LatticePatch& patch, const LabeledGraph& labeled);

}  // namespace happy
