#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace happy {

/// Raised for malformed caller input (bad ids, wrong lattice, broken annotations).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant that a construction guarantees is violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using VertexId = std::uint32_t;
using Color = std::int64_t;

enum class EdgeLabel : std::uint8_t { kNear, kFar };

inline char to_char(EdgeLabel l) { return l == EdgeLabel::kNear ? 'N' : 'F'; }
EdgeLabel label_from_string(const std::string& s);

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeLabel label = EdgeLabel::kNear;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  std::uint32_t edge;  // index into LabeledGraph::edges()
};

// Simple undirected graph with a Near/Far label on every edge. Edges are
// stored canonically (u < v) and sorted, so edge indices are deterministic.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  std::span<const Incidence> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Index of edge {a,b}, if present.
  std::optional<std::size_t> find_edge(VertexId a, VertexId b) const;
  EdgeLabel label(VertexId a, VertexId b) const;

  /// Same topology, new labels (one per edge, canonical order).
  LabeledGraph relabeled(std::span<const EdgeLabel> labels) const;
  std::vector<EdgeLabel> labels() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Incidence> adjacency_;
};

struct Coloring {
  std::vector<Color> colors;

  Color operator[](VertexId v) const { return colors[v]; }
  std::size_t size() const { return colors.size(); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ThresholdParams {
  std::int64_t r = 1;
  std::int64_t t = 0;
};

struct VerifyReport {
  bool valid = true;
  std::vector<Edge> violations;
  std::int64_t range_used = 0;
  Color min_color = 0;
  Color max_color = 0;
};

/// Output of a constructive colorer: colors plus the (r, t) they are valid for.
struct ColoringScheme {
  Coloring coloring;
  std::int64_t r = 1;
  std::int64_t t = 0;
  std::string algorithm;
};

/// Checks Near <=> |c(u)-c(v)| <= t on every edge.
VerifyReport verify_coloring(const LabeledGraph& g, const Coloring& c, std::int64_t t);

/// max - min + 1, the smallest admissible number of colors.
std::int64_t range_of(const Coloring& c);

struct InducedSubgraph {
  LabeledGraph graph;
  std::vector<VertexId> old_to_new;  // kNoVertex where dropped
  std::vector<VertexId> new_to_old;
};

inline constexpr VertexId kNoVertex = ~VertexId{0};

/// `keep` may be unsorted; new ids follow ascending old id.
InducedSubgraph induced_subgraph(const LabeledGraph& g, std::span<const VertexId> keep);

Coloring restrict_coloring(const Coloring& c, std::span<const VertexId> new_to_old);

/// Shifts so the minimum color is 0.
Coloring normalize(const Coloring& c);

/// Throws InputError unless `labeled` has the same vertices and edges as `topology`.
void require_same_topology(const LabeledGraph& topology, const LabeledGraph& labeled);

}  // namespace happy
