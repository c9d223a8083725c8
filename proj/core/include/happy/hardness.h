#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "happy/graph.h"
#include "happy/lattice.h"
#include "happy/tiling.h"

namespace happy {

enum class GadgetName { kFig6a, kFig6b, kFig6c, kFig6d, kFig6e };

std::span<const GadgetName> all_gadgets();
std::string to_string(GadgetName name);
GadgetName parse_gadget(std::string_view text);

/// Labeled subgraph that no threshold-coloring satisfies.
LabeledGraph build_gadget(GadgetName name);

/// Lattices the gadget is a subgraph of.
std::vector<LatticeName> gadget_hosts(GadgetName name);

/// Square grid induced on a spiral path. Vertex i is the (i+1)-th path vertex;
/// path edges are Near, every other grid edge Far. n must be odd.
LabeledGraph build_square_spiral(int n);

/// Grid position of each vertex of build_square_spiral(n).
std::vector<Vec2> square_spiral_coords(int n);

enum class SpiralFamily { kSquare, kD3464, kD3636 };
std::string to_string(SpiralFamily f);
SpiralFamily parse_spiral_family(std::string_view text);

struct DualSpiral {
  LabeledGraph graph;                       // ids in growth order
  std::vector<Vec2> coords;
  std::vector<std::array<VertexId, 4>> faces;  // lattice faces wholly inside
  std::optional<std::size_t> exempt_face;      // the start face
};

/// Near edges form a path (d3464) or caterpillar (d3636) grown outwards from a
/// start face until every vertex within size-1 hops of it is included. Every
/// face other than the start face has exactly two Near edges.
DualSpiral build_dual_spiral(SpiralFamily family, int size);

/// Near-subgraph shape checks.
bool near_edges_form_path(const LabeledGraph& g);
bool near_edges_form_caterpillar(const LabeledGraph& g);

/// Some cycle has exactly one Far edge (no (r,0)-coloring can exist).
bool has_cycle_with_one_far(const LabeledGraph& g);

/// Injective map pattern -> host preserving adjacency (labels ignored).
std::optional<std::vector<VertexId>> find_embedding(const LabeledGraph& pattern,
                                                    const LabeledGraph& host);

/// find_embedding against a generated patch of the lattice.
bool embeds_in_lattice(const LabeledGraph& pattern, LatticeName lattice);

}  // namespace happy
