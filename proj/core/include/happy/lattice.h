#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "happy/graph.h"
#include "happy/tiling.h"

namespace happy {

enum class LatticeName {
  k3_6,
  k4_4,
  k6_3,
  k3_12_2,
  k4_8_2,
  k4_6_12,
  k3_4_6,
  k3_3_4_2,
  k3_2_4_3_4,
  k3_4_6_4,
  k3_6_3_6,
  kD3_12_2,
  kD4_8_2,
  kD4_6_12,
  kD3_4_6,
  kD3_3_4_2,
  kD3_2_4_3_4,
  kD3_4_6_4,
  kD3_6_3_6,
};

/// All 19 names in declaration order.
std::span<const LatticeName> all_lattices();
std::string to_string(LatticeName name);
/// Accepts the canonical spelling only ("3.12^2", "D(3^4.6)", ...).
LatticeName parse_lattice(std::string_view text);
bool is_laves(LatticeName name);

/// Species from the name itself: "3^2.4.3.4" -> {3,3,4,3,4}. For a Laves
/// lattice this is the species of the Archimedean lattice it is dual to.
std::vector<int> name_species(LatticeName name);

/// The periodic tiling behind a lattice (built once, shared).
const PeriodicTiling& tiling_of(LatticeName name);

struct PatchParams {
  int rows = 1;
  int cols = 1;
};

// Role order inside PatchCell::roles.
enum TridodecRole { kTdU0, kTdU1, kTdV0, kTdV1, kTdV2, kTdV3, kTdV4, kTdV5, kTdRoleCount };
enum SqhexdodecRole {
  kShU0, kShU1, kShU2, kShU3, kShU4,
  kShV0, kShV1, kShV2, kShV3, kShV4, kShV5, kShV6, kShV7, kShV8, kShV9, kShV10,
  kShRoleCount
};

/// Role names ("u0", "v5", ...) for the cell layout of 3.12^2 or 4.6.12.
std::span<const std::string_view> cell_role_names(LatticeName name);
/// Edges of one cell as role pairs.
std::span<const std::array<int, 2>> cell_role_edges(LatticeName name);

struct PatchCell {
  int row = 0;
  int col = 0;
  std::vector<VertexId> roles;
};

/// A matched pair of degree-3 vertices u-v (edge e0) with e1=(u,w1), e2=(u,w2),
/// e3=(v,w3), e4=(v,w4).
struct MatchingPair {
  VertexId u = 0;
  VertexId v = 0;
  std::array<VertexId, 4> w{};
};

/// Quadrilateral of the grid H spanned by one matching pair: corners are the
/// pair's w1, w2, w3, w4, so (w1,w2) and (w3,w4) are the two constrained sides.
struct GridFace {
  enum class Kind { kHorizontal, kVertical };
  Kind kind = Kind::kHorizontal;
  std::array<VertexId, 4> corners{};
  std::size_t pair = 0;  // index into matching_pairs
};

struct StructuralAnnotations {
  std::optional<std::vector<VertexId>> independent_set;
  std::optional<std::vector<VertexId>> forest_vertices;
  std::optional<std::vector<PatchCell>> patch_cells;
  std::optional<std::vector<MatchingPair>> matching_pairs;
  std::optional<std::vector<GridFace>> grid_faces;

  friend bool operator==(const StructuralAnnotations&, const StructuralAnnotations&) = default;
};

inline bool operator==(const PatchCell& a, const PatchCell& b) {
  return a.row == b.row && a.col == b.col && a.roles == b.roles;
}
inline bool operator==(const MatchingPair& a, const MatchingPair& b) {
  return a.u == b.u && a.v == b.v && a.w == b.w;
}
inline bool operator==(const GridFace& a, const GridFace& b) {
  return a.kind == b.kind && a.corners == b.corners && a.pair == b.pair;
}

/// Finite window of a lattice. Vertex ids follow the sweep order: ascending y,
/// then ascending x. keys[v] names the lattice site behind v, so the patch of a
/// smaller window maps into a larger one by matching keys.
struct LatticePatch {
  LatticeName name = LatticeName::k4_4;
  PatchParams params;
  LabeledGraph graph;
  std::vector<Vec2> coords;
  std::vector<SiteRef> keys;
  StructuralAnnotations annotations;
};

LatticePatch generate(LatticeName name, PatchParams params);

/// Face sizes around v in cyclic order, reduced to the smallest rotation or
/// reflection; std::nullopt when some incident face is not wholly in the patch.
std::optional<std::vector<int>> species_of(const LatticePatch& patch, VertexId v);

/// Smallest rotation/reflection of a cyclic sequence.
std::vector<int> canonical_cycle(std::vector<int> seq);

/// Ids of `small` mapped into `large` via keys; kNoVertex when absent.
std::vector<VertexId> embed_ids(const LatticePatch& small, const LatticePatch& large);

struct AnnotationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

AnnotationReport validate_annotations(const LatticePatch& patch);

}  // namespace happy
