#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "happy/graph.h"
#include "happy/lattice.h"

namespace happy {

/// Labels of e0 = (u,v), e1 = (u,w1), e2 = (u,w2), e3 = (v,w3), e4 = (v,w4).
using GadgetLabels = std::array<EdgeLabel, 5>;

/// A matching pair read under a labeling, renamed so that whenever
/// l(e1) != l(e2) e1 is the Near one (likewise e3/e4).
struct MatchingGadget {
  VertexId u = 0;
  VertexId v = 0;
  std::array<VertexId, 4> w{};
  GadgetLabels labels{};
};

MatchingGadget make_gadget(const LabeledGraph& g, const MatchingPair& pair);

/// True when the w-colors let the table assign u and v: one side has equal
/// labels, or the order of (c1,c2) matches (e0 Near) / opposes (e0 Far) the
/// order of (c3,c4).
bool extendible(const GadgetLabels& labels, const std::array<Color, 4>& w_colors);

/// c_j - k - 1 when c_i < c_j, else c_j + k + 1.
Color lambda(Color c_i, Color c_j, Color k);

/// Table lookup for (c(u), c(v)) at threshold k. Throws InputError for label
/// columns that renaming rules out, for w-colors outside {k+2..2k+1} or not
/// distinct, and for non-extendible w-colors.
std::pair<Color, Color> color_gadget(const GadgetLabels& labels, const std::array<Color, 4>& w_colors,
                                     Color k);

/// Order relation required between the two sides of a grid face.
struct FaceConstraint {
  enum class Parity { kSame, kOpposite };
  std::size_t face = 0;       // index into grid_faces
  std::array<VertexId, 2> a{};  // (w1, w2) after renaming
  std::array<VertexId, 2> b{};  // (w3, w4) after renaming
  std::optional<Parity> parity;  // empty: the face is unconstrained
};

std::vector<FaceConstraint> build_constraints(const LatticePatch& patch, const LabeledGraph& labeled);

/// The grid H on the unique-color vertices. Vertices are visited in ascending
/// id, which is the generator's sweep order.
struct GridGraph {
  std::vector<VertexId> vertices;
  std::vector<std::array<VertexId, 2>> edges;  // (earlier, later)
};

GridGraph grid_graph(const LatticePatch& patch);

struct GridOrientation {
  std::vector<std::array<VertexId, 2>> arcs;  // from smaller to larger color
  std::map<VertexId, bool> sink;              // true: all earlier neighbours point in
};

/// Makes every vertex a source or sink towards its earlier neighbours, with
/// the face constraints solved as parity equations. Unconstrained vertices
/// default to sinks (edges run along the sweep).
GridOrientation orient_grid(const GridGraph& h, const std::vector<FaceConstraint>& constraints);

/// Topological numbering shifted to {m+2, ..., 2m+1}, m = |H|.
std::map<VertexId, Color> assign_unique_colors(const GridGraph& h, const GridOrientation& o);

/// Threshold m, colors in {1, ..., 3m+2}.
ColoringScheme color_lattice_linear(const LatticePatch& patch, const LabeledGraph& labeled);

}  // namespace happy
