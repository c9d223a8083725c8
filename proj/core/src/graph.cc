#include "happy/graph.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace happy {

EdgeLabel label_from_string(const std::string& s) {
  if (s == "N") return EdgeLabel::kNear;
  if (s == "F") return EdgeLabel::kFar;
  throw InputError("edge label must be \"N\" or \"F\", got \"" + s + "\"");
}

LabeledGraph::LabeledGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= vertex_count_ || e.v >= vertex_count_)
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                       std::to_string(e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw InputError("duplicate edge " + std::to_string(edges_[i].u) + "-" +
                       std::to_string(edges_[i].v));
  }

  std::vector<std::uint32_t> degree(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    adjacency_[fill[edges_[i].u]++] = {edges_[i].v, i};
    adjacency_[fill[edges_[i].v]++] = {edges_[i].u, i};
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
}

std::span<const Incidence> LabeledGraph::neighbors(VertexId v) const {
  return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

std::optional<std::size_t> LabeledGraph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count_ || b >= vertex_count_) return std::nullopt;
  auto nbrs = neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b,
                             [](const Incidence& x, VertexId y) { return x.neighbor < y; });
  if (it == nbrs.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

EdgeLabel LabeledGraph::label(VertexId a, VertexId b) const {
  auto e = find_edge(a, b);
  if (!e) throw InputError("no edge " + std::to_string(a) + "-" + std::to_string(b));
  return edges_[*e].label;
}

LabeledGraph LabeledGraph::relabeled(std::span<const EdgeLabel> labels) const {
  if (labels.size() != edges_.size()) throw InputError("label count does not match edge count");
  LabeledGraph out = *this;
  for (std::size_t i = 0; i < labels.size(); ++i) out.edges_[i].label = labels[i];
  return out;
}

std::vector<EdgeLabel> LabeledGraph::labels() const {
  std::vector<EdgeLabel> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.label);
  return out;
}

VerifyReport verify_coloring(const LabeledGraph& g, const Coloring& c, std::int64_t t) {
  if (c.size() != g.vertex_count())
    throw InputError("coloring has " + std::to_string(c.size()) + " entries, graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  if (t < 0) throw InputError("threshold must be non-negative");
  VerifyReport report;
  for (const Edge& e : g.edges()) {
    const bool near = std::llabs(c[e.u] - c[e.v]) <= t;
    if (near != (e.label == EdgeLabel::kNear)) report.violations.push_back(e);
  }
  report.valid = report.violations.empty();
  if (c.size() > 0) {
    auto [lo, hi] = std::minmax_element(c.colors.begin(), c.colors.end());
    report.min_color = *lo;
    report.max_color = *hi;
    report.range_used = *hi - *lo + 1;
  }
  return report;
}

std::int64_t range_of(const Coloring& c) {
  if (c.colors.empty()) throw InputError("range of an empty coloring");
  auto [lo, hi] = std::minmax_element(c.colors.begin(), c.colors.end());
  return *hi - *lo + 1;
}

InducedSubgraph induced_subgraph(const LabeledGraph& g, std::span<const VertexId> keep) {
  InducedSubgraph out;
  out.old_to_new.assign(g.vertex_count(), kNoVertex);
  for (VertexId v : keep) {
    if (v >= g.vertex_count()) throw InputError("vertex id out of range: " + std::to_string(v));
    out.old_to_new[v] = 0;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (out.old_to_new[v] != kNoVertex) {
      out.old_to_new[v] = static_cast<VertexId>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (out.old_to_new[e.u] != kNoVertex && out.old_to_new[e.v] != kNoVertex)
      edges.push_back({out.old_to_new[e.u], out.old_to_new[e.v], e.label});
  }
  out.graph = LabeledGraph(out.new_to_old.size(), std::move(edges));
  return out;
}

Coloring restrict_coloring(const Coloring& c, std::span<const VertexId> new_to_old) {
  Coloring out;
  out.colors.reserve(new_to_old.size());
  for (VertexId v : new_to_old) out.colors.push_back(c.colors.at(v));
  return out;
}

Coloring normalize(const Coloring& c) {
  if (c.colors.empty()) return c;
  const Color lo = *std::min_element(c.colors.begin(), c.colors.end());
  Coloring out = c;
  for (Color& x : out.colors) x -= lo;
  return out;
}

void require_same_topology(const LabeledGraph& topology, const LabeledGraph& labeled) {
  bool same = topology.vertex_count() == labeled.vertex_count() &&
              topology.edge_count() == labeled.edge_count();
  for (std::size_t i = 0; same && i < topology.edge_count(); ++i) {
    same = topology.edge(i).u == labeled.edge(i).u && topology.edge(i).v == labeled.edge(i).v;
  }
  if (!same) throw InputError("labeled graph does not match the patch topology");
}

}  // namespace happy
