#include "happy/colorer_linear.h"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>

namespace happy {
namespace {

bool near(EdgeLabel l) { return l == EdgeLabel::kNear; }

// Union-find carrying the parity of each vertex relative to its root.
class ParityForest {
 public:
  explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // Path compression keeps the parity to the root.
    std::size_t y = x;
    int py = p;
    while (parent_[y] != y) {
      const std::size_t next = parent_[y];
      const int step = parity_[y];
      parent_[y] = r;
      parity_[y] = py;
      py ^= step;
      y = next;
    }
    return {r, p};
  }

  // Records x xor y = rhs; false on contradiction.
  bool unite(std::size_t x, std::size_t y, int rhs) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == rhs;
    if (ry < rx) std::swap(rx, ry);
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ rhs;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

}  // namespace

MatchingGadget make_gadget(const LabeledGraph& g, const MatchingPair& pair) {
  MatchingGadget m{pair.u, pair.v, pair.w, {}};
  m.labels[0] = g.label(pair.u, pair.v);
  for (int i = 0; i < 4; ++i) m.labels[i + 1] = g.label(i < 2 ? pair.u : pair.v, pair.w[i]);
  for (int i : {0, 2}) {
    if (!near(m.labels[i + 1]) && near(m.labels[i + 2])) {
      std::swap(m.w[i], m.w[i + 1]);
      std::swap(m.labels[i + 1], m.labels[i + 2]);
    }
  }
  return m;
}

bool extendible(const GadgetLabels& l, const std::array<Color, 4>& c) {
  if (l[1] == l[2] || l[3] == l[4]) return true;
  const bool up12 = c[0] < c[1], up34 = c[2] < c[3];
  return near(l[0]) ? up12 == up34 : up12 != up34;
}

Color lambda(Color c_i, Color c_j, Color k) { return c_i < c_j ? c_j - k - 1 : c_j + k + 1; }

std::pair<Color, Color> color_gadget(const GadgetLabels& l, const std::array<Color, 4>& c, Color k) {
  if ((!near(l[1]) && near(l[2])) || (!near(l[3]) && near(l[4])))
    throw InputError("gadget labels are not in renamed form (Far before Near on one side)");
  for (int i = 0; i < 4; ++i) {
    if (c[i] < k + 2 || c[i] > 2 * k + 1)
      throw InputError("w-color " + std::to_string(c[i]) + " outside {k+2..2k+1}");
    for (int j = 0; j < i; ++j) {
      if (c[i] == c[j]) throw InputError("w-colors are not distinct");
    }
  }
  if (!extendible(l, c)) throw InputError("w-coloring is not extendible for these labels");

  enum Side { kNN, kNF, kFF };
  auto side = [&](int first) { return near(l[first]) ? (near(l[first + 1]) ? kNN : kNF) : kFF; };
  const Side a = side(1), b = side(3);
  const bool e0_near = near(l[0]);
  // Of two candidates exactly one has the distance to `other` demanded by e0.
  auto pick = [&](Color x, Color y, Color other) {
    const bool x_ok = (std::llabs(x - other) <= k) == e0_near;
    const bool y_ok = (std::llabs(y - other) <= k) == e0_near;
    if (x_ok == y_ok) throw InternalError("gadget choice is not unique");
    return x_ok ? x : y;
  };
  const Color lo = 1, mid = k + 1, mid2 = 2 * k + 2, hi = 3 * k + 2;
  Color cu = 0, cv = 0;
  if (a == kNF && b == kNF) {
    cu = lambda(c[0], c[1], k);
    cv = lambda(c[2], c[3], k);
  } else if (a == kNF) {
    cu = lambda(c[0], c[1], k);
    cv = b == kNN ? pick(mid, mid2, cu) : pick(lo, hi, cu);
  } else if (b == kNF) {
    cv = lambda(c[2], c[3], k);
    cu = a == kNN ? pick(mid, mid2, cv) : pick(lo, hi, cv);
  } else {
    // Both sides uniform.
    cu = a == kNN ? mid : lo;
    cv = b == kNN ? mid : lo;
    if (!e0_near) {
      if (b == kFF) {
        cv = hi;
      } else if (a == kNN) {
        cv = mid2;
      } else {
        cu = hi;
      }
    }
  }

  const std::array<Color, 4> ends = {cu, cu, cv, cv};
  bool ok = (std::llabs(cu - cv) <= k) == e0_near;
  for (int i = 0; i < 4; ++i) ok = ok && (std::llabs(ends[i] - c[i]) <= k) == near(l[i + 1]);
  if (!ok) throw InternalError("gadget assignment violates an edge");
  return {cu, cv};
}

std::vector<FaceConstraint> build_constraints(const LatticePatch& patch, const LabeledGraph& labeled) {
  const auto& a = patch.annotations;
  if (!a.matching_pairs || !a.grid_faces || !a.independent_set)
    throw InputError("patch lacks matching_pairs/grid_faces/independent_set annotations");
  require_same_topology(patch.graph, labeled);
  std::vector<FaceConstraint> out;
  for (std::size_t f = 0; f < a.grid_faces->size(); ++f) {
    const GridFace& face = (*a.grid_faces)[f];
    if (face.pair >= a.matching_pairs->size()) throw InputError("grid face refers to a missing pair");
    const MatchingGadget m = make_gadget(labeled, (*a.matching_pairs)[face.pair]);
    FaceConstraint c{f, {m.w[0], m.w[1]}, {m.w[2], m.w[3]}, std::nullopt};
    if (m.labels[1] != m.labels[2] && m.labels[3] != m.labels[4]) {
      c.parity = near(m.labels[0]) ? FaceConstraint::Parity::kSame : FaceConstraint::Parity::kOpposite;
    }
    out.push_back(c);
  }
  return out;
}

GridGraph grid_graph(const LatticePatch& patch) {
  const auto& a = patch.annotations;
  if (!a.grid_faces || !a.independent_set) throw InputError("patch lacks grid_faces/independent_set");
  GridGraph h;
  h.vertices = *a.independent_set;
  std::sort(h.vertices.begin(), h.vertices.end());
  std::set<std::array<VertexId, 2>> edges;
  for (const GridFace& f : *a.grid_faces) {
    edges.insert({std::min(f.corners[0], f.corners[1]), std::max(f.corners[0], f.corners[1])});
    edges.insert({std::min(f.corners[2], f.corners[3]), std::max(f.corners[2], f.corners[3])});
  }
  h.edges.assign(edges.begin(), edges.end());
  return h;
}

GridOrientation orient_grid(const GridGraph& h, const std::vector<FaceConstraint>& constraints) {
  std::map<VertexId, std::size_t> index;
  for (VertexId v : h.vertices) index.emplace(v, index.size());
  const std::set<std::array<VertexId, 2>> edge_set(h.edges.begin(), h.edges.end());
  auto require_edge = [&](std::array<VertexId, 2> e) {
    if (!index.contains(e[0]) || !index.contains(e[1]) ||
        !edge_set.contains({std::min(e[0], e[1]), std::max(e[0], e[1])}))
      throw InputError("face side " + std::to_string(e[0]) + "-" + std::to_string(e[1]) +
                       " is not an edge of H");
  };

  // With s(x) = 1 for a sink, the side (p,q) ends up increasing iff
  // s(later) xor [later == p].
  ParityForest forest(h.vertices.size());
  for (const FaceConstraint& c : constraints) {
    require_edge(c.a);
    require_edge(c.b);
    if (!c.parity) continue;
    const VertexId la = std::max(c.a[0], c.a[1]), lb = std::max(c.b[0], c.b[1]);
    if (la == lb) throw InputError("face sides share their latest corner");
    const int rhs = int{la == c.a[0]} ^ int{lb == c.b[0]} ^
                    int{*c.parity == FaceConstraint::Parity::kOpposite};
    if (!forest.unite(index[la], index[lb], rhs))
      throw InternalError("face constraints are not simultaneously satisfiable");
  }

  GridOrientation o;
  for (VertexId v : h.vertices) o.sink[v] = forest.find(index[v]).second == 0;
  for (const auto& e : h.edges) {
    if (e[0] >= e[1]) throw InputError("H edges must be listed as (earlier, later)");
    o.arcs.push_back(o.sink[e[1]] ? e : std::array<VertexId, 2>{e[1], e[0]});
  }
  const std::set<std::array<VertexId, 2>> arcs(o.arcs.begin(), o.arcs.end());
  for (const FaceConstraint& c : constraints) {
    if (!c.parity) continue;
    const bool same = arcs.contains(c.a) == arcs.contains(c.b);
    if (same != (*c.parity == FaceConstraint::Parity::kSame))
      throw InternalError("orientation misses a face constraint");
  }
  return o;
}

std::map<VertexId, Color> assign_unique_colors(const GridGraph& h, const GridOrientation& o) {
  std::map<VertexId, std::vector<VertexId>> out;
  std::map<VertexId, int> indegree;
  for (VertexId v : h.vertices) indegree[v] = 0;
  for (const auto& [from, to] : o.arcs) {
    if (!indegree.contains(from) || !indegree.contains(to)) throw InputError("arc outside H");
    out[from].push_back(to);
    ++indegree[to];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (const auto& [v, d] : indegree) {
    if (d == 0) ready.push(v);
  }
  const auto m = static_cast<Color>(h.vertices.size());
  std::map<VertexId, Color> colors;
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    colors[v] = m + 2 + static_cast<Color>(colors.size());
    for (VertexId w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (colors.size() != h.vertices.size()) throw InternalError("orientation of H has a cycle");
  return colors;
}

ColoringScheme color_lattice_linear(const LatticePatch& patch, const LabeledGraph& labeled) {
  if (patch.name != LatticeName::kD3_2_4_3_4 && patch.name != LatticeName::kD3_4_6)
    throw InputError("linear colorer needs a D(3^2.4.3.4) or D(3^4.6) patch, got " +
                     to_string(patch.name));
  const auto constraints = build_constraints(patch, labeled);
  const GridGraph h = grid_graph(patch);
  const auto unique = assign_unique_colors(h, orient_grid(h, constraints));
  const auto m = static_cast<Color>(h.vertices.size());

  const std::size_t n = labeled.vertex_count();
  std::vector<Color> colors(n, 0);
  std::vector<char> set(n, 0);
  for (const auto& [v, c] : unique) {
    colors[v] = c;
    set[v] = 1;
  }
  for (const MatchingPair& pair : *patch.annotations.matching_pairs) {
    const MatchingGadget g = make_gadget(labeled, pair);
    std::array<Color, 4> wc{};
    for (int i = 0; i < 4; ++i) {
      if (!set[g.w[i]] || !unique.contains(g.w[i]))
        throw InputError("w-neighbour " + std::to_string(g.w[i]) + " is not a unique-color vertex");
      wc[i] = colors[g.w[i]];
    }
    if (!extendible(g.labels, wc))
      throw InternalError("unique coloring is not extendible at pair " + std::to_string(g.u) + "-" +
                          std::to_string(g.v));
    const auto [cu, cv] = color_gadget(g.labels, wc, m);
    colors[g.u] = cu;
    colors[g.v] = cv;
    set[g.u] = set[g.v] = 1;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!set[v]) throw InputError("vertex " + std::to_string(v) + " is in no matching pair");
  }
  Coloring c{std::move(colors)};
  if (!verify_coloring(labeled, c, m).valid) throw InternalError("linear coloring failed to verify");
  return {std::move(c), 3 * m + 2, m, "linear"};
}

}  // namespace happy
