#include "happy/colorer_forest.h"

#include <algorithm>
#include <deque>
#include <numeric>

namespace happy {

ForestDecomposition decompose(const LabeledGraph& g, std::vector<VertexId> independent,
                              std::vector<VertexId> forest) {
  const std::size_t n = g.vertex_count();
  enum : char { kUnset, kI, kT };
  std::vector<char> side(n, kUnset);
  for (auto [set, tag] : {std::pair{&independent, kI}, std::pair{&forest, kT}}) {
    for (VertexId v : *set) {
      if (v >= n) throw InputError("decomposition vertex out of range: " + std::to_string(v));
      if (side[v] != kUnset) throw InputError("vertex " + std::to_string(v) + " listed twice");
      side[v] = tag;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (side[v] == kUnset) throw InputError("vertex " + std::to_string(v) + " in neither I nor T");
  }
  for (VertexId x = 0; x < n; ++x) {
    int hits = side[x] == kI;
    for (const Incidence& nb : g.neighbors(x)) hits += side[nb.neighbor] == kI;
    if (hits > 1) throw InputError("I is not 2-independent around vertex " + std::to_string(x));
  }

  ForestDecomposition d;
  std::sort(independent.begin(), independent.end());
  std::sort(forest.begin(), forest.end());
  d.independent = std::move(independent);
  d.forest = std::move(forest);
  d.parent.assign(n, kNoVertex);
  std::vector<char> seen(n, 0);
  for (VertexId root : d.forest) {
    if (seen[root]) continue;
    ForestDecomposition::Component comp{root, {}};
    std::deque<VertexId> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      comp.order.push_back(x);
      for (const Incidence& nb : g.neighbors(x)) {
        const VertexId y = nb.neighbor;
        if (side[y] != kT || y == d.parent[x]) continue;
        if (seen[y]) throw InputError("G[T] contains a cycle through vertex " + std::to_string(y));
        seen[y] = 1;
        d.parent[y] = x;
        queue.push_back(y);
      }
    }
    d.components.push_back(std::move(comp));
  }
  return d;
}

ForestDecomposition decompose(const LatticePatch& patch) {
  if (patch.name != LatticeName::k6_3 && patch.name != LatticeName::k4_8_2)
    throw InputError("forest colorer needs a 6^3 or 4.8^2 patch, got " + to_string(patch.name));
  const auto& a = patch.annotations;
  if (!a.independent_set || !a.forest_vertices)
    throw InputError("patch lacks independent_set/forest_vertices annotations");
  return decompose(patch.graph, *a.independent_set, *a.forest_vertices);
}

ColoringScheme color_forest(const LabeledGraph& g, const ForestDecomposition& d) {
  if (d.parent.size() != g.vertex_count())
    throw InputError("decomposition was built for a different graph");
  std::vector<char> in_i(g.vertex_count(), 0);
  for (VertexId v : d.independent) in_i[v] = 1;

  // The I-neighbour of v and the label towards it, if any.
  auto i_label = [&](VertexId v) -> std::optional<EdgeLabel> {
    for (const Incidence& nb : g.neighbors(v)) {
      if (in_i[nb.neighbor]) return g.edge(nb.edge).label;
    }
    return std::nullopt;
  };

  Coloring c;
  c.colors.assign(g.vertex_count(), 0);
  for (const auto& comp : d.components) {
    for (VertexId v : comp.order) {
      const auto to_i = i_label(v);
      const Color magnitude = to_i == EdgeLabel::kFar ? 2 : 1;
      const VertexId p = d.parent[v];
      if (p == kNoVertex) {
        c.colors[v] = magnitude;
        continue;
      }
      const bool near = g.label(v, p) == EdgeLabel::kNear;
      Color x = magnitude;
      if ((std::abs(x - c[p]) <= 1) != near) x = -x;
      if ((std::abs(x - c[p]) <= 1) != near)
        throw InternalError("sign flip did not repair tree edge " + std::to_string(v) + "-" +
                            std::to_string(p));
      c.colors[v] = x;
    }
  }
  if (!verify_coloring(g, c, 1).valid) throw InternalError("forest coloring failed to verify");
  return {std::move(c), 5, 1, "forest"};
}

}  // namespace happy
