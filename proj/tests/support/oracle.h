#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// into the library beyond LabeledGraph construction and accessors, so that a
// bug in verify_coloring or the solver cannot hide itself.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

#include "happy/graph.h"

namespace oracle {

using happy::Color;
using happy::EdgeLabel;
using happy::LabeledGraph;
using happy::VertexId;

inline double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Straight from the definition: Near iff |difference| <= t.
inline bool valid(const LabeledGraph& g, const std::vector<Color>& c, std::int64_t t) {
  if (c.size() != g.vertex_count()) return false;
  for (const happy::Edge& e : g.edges()) {
    const bool near = std::llabs(c[e.u] - c[e.v]) <= t;
    if (near != (e.label == EdgeLabel::kNear)) return false;
  }
  return true;
}

/// Odometer over {0..r-1}^n. Returns the first valid coloring for any t in
/// 0..r-1 (or just *t).
inline std::optional<std::vector<Color>> brute_force(const LabeledGraph& g, std::int64_t r,
                                                     std::optional<std::int64_t> t = std::nullopt) {
  const std::size_t n = g.vertex_count();
  std::vector<Color> c(n, 0);
  while (true) {
    for (std::int64_t tt = t.value_or(0); tt <= (t ? *t : r - 1); ++tt) {
      if (valid(g, c, tt)) return c;
    }
    std::size_t i = 0;
    while (i < n && ++c[i] == r) c[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

inline LabeledGraph random_graph(std::mt19937_64& rng, std::size_t n, double edge_prob, double far_prob) {
  std::vector<happy::Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (uniform(rng) < edge_prob) {
        edges.push_back({u, v, uniform(rng) < far_prob ? EdgeLabel::kFar : EdgeLabel::kNear});
      }
    }
  }
  return LabeledGraph(n, std::move(edges));
}

inline LabeledGraph random_labels(const LabeledGraph& topo, std::mt19937_64& rng, double far_prob = 0.5) {
  std::vector<EdgeLabel> labels(topo.edge_count());
  for (EdgeLabel& l : labels) l = uniform(rng) < far_prob ? EdgeLabel::kFar : EdgeLabel::kNear;
  return topo.relabeled(labels);
}

/// Labeling number `bits` of the topology (bit i = edge i is Far).
inline LabeledGraph labeling(const LabeledGraph& topo, std::uint64_t bits) {
  std::vector<EdgeLabel> labels(topo.edge_count());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = (bits >> i) & 1 ? EdgeLabel::kFar : EdgeLabel::kNear;
  return topo.relabeled(labels);
}

inline std::int64_t range(const std::vector<Color>& c) {
  Color lo = c.at(0), hi = c.at(0);
  for (Color x : c) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return hi - lo + 1;
}

}  // namespace oracle
