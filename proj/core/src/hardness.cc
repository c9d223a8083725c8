#include "happy/hardness.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace happy {
namespace {

constexpr EdgeLabel N = EdgeLabel::kNear;
constexpr EdgeLabel F = EdgeLabel::kFar;

constexpr std::array kGadgets = {GadgetName::kFig6a, GadgetName::kFig6b, GadgetName::kFig6c,
                                 GadgetName::kFig6d, GadgetName::kFig6e};

LabeledGraph make(std::size_t n, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return LabeledGraph(n, std::move(edges));
}

// Union-find over vertex ids.
struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::vector<std::size_t> near_degrees(const LabeledGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (e.label == N) {
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  return deg;
}

// Near edges span all vertices and contain no cycle.
bool near_spanning_tree(const LabeledGraph& g) {
  Dsu dsu(g.vertex_count());
  std::size_t joined = 0;
  for (const Edge& e : g.edges()) {
    if (e.label != N) continue;
    if (!dsu.unite(e.u, e.v)) return false;
    ++joined;
  }
  return joined + 1 == g.vertex_count();
}

// Lattice faces of the patch whose corners are all present.
std::vector<std::vector<VertexId>> patch_faces(const LatticePatch& patch) {
  const PeriodicTiling& t = tiling_of(patch.name);
  std::map<SiteRef, VertexId> id_of;
  int lo = 0, hi = 0;
  for (VertexId v = 0; v < patch.keys.size(); ++v) {
    id_of[patch.keys[v]] = v;
    lo = std::min({lo, patch.keys[v].dx, patch.keys[v].dy});
    hi = std::max({hi, patch.keys[v].dx, patch.keys[v].dy});
  }
  std::vector<std::vector<VertexId>> out;
  for (const auto& face : t.faces()) {
    for (int dy = lo - 2; dy <= hi + 2; ++dy) {
      for (int dx = lo - 2; dx <= hi + 2; ++dx) {
        std::vector<VertexId> ids;
        for (const SiteRef& corner : face) {
          auto it = id_of.find(corner.shifted(dx, dy));
          if (it == id_of.end()) break;
          ids.push_back(it->second);
        }
        if (ids.size() == face.size()) out.push_back(std::move(ids));
      }
    }
  }
  return out;
}

// Backtracking growth of the Near tree for the dual spirals.
class SpiralGrower {
 public:
  SpiralGrower(const LatticePatch& patch, bool caterpillar, int size)
      : g_(patch.graph), coords_(patch.coords), caterpillar_(caterpillar) {
    faces_ = patch_faces(patch);
    faces_of_.resize(g_.vertex_count());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (faces_[f].size() != 4) throw InternalError("dual spiral lattice has a non-quadrilateral face");
      for (VertexId v : faces_[f]) faces_of_[v].push_back(f);
    }

    // Start at the face nearest the middle of the patch.
    Vec2 mid{0, 0};
    for (const Vec2& p : coords_) mid = mid + p;
    mid = (1.0 / static_cast<double>(coords_.size())) * mid;
    double best = INFINITY;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const double d = norm(centroid(f) - mid);
      if (d < best - 1e-9) {
        best = d;
        start_face_ = f;
      }
    }
    centre_ = centroid(start_face_);

    // Rings: hop distance from the start face.
    ring_.assign(g_.vertex_count(), -1);
    std::vector<VertexId> queue(faces_[start_face_].begin(), faces_[start_face_].end());
    for (VertexId v : queue) ring_[v] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const Incidence& nb : g_.neighbors(queue[i])) {
        if (ring_[nb.neighbor] < 0) {
          ring_[nb.neighbor] = ring_[queue[i]] + 1;
          queue.push_back(nb.neighbor);
        }
      }
    }
    target_ring_ = size - 1;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (ring_[v] >= 0 && ring_[v] <= target_ring_) ++missing_;
      // Every target vertex needs its whole neighbourhood inside the patch.
      if (ring_[v] >= 0 && ring_[v] <= target_ring_ + 1 && g_.degree(v) < lattice_degree(patch, v))
        throw InternalError("dual spiral patch too small");
    }
  }

  bool grow(std::uint64_t budget) {
    in_.assign(g_.vertex_count(), 0);
    near_.clear();
    const auto& f = faces_[start_face_];
    // Start path f0-f1-f2-f3 around the start face.
    for (int i = 0; i < 4; ++i) add(f[i]);
    near_.insert(key(f[0], f[1]));
    near_.insert(key(f[1], f[2]));
    near_.insert(key(f[2], f[3]));
    spine_end_ = f[3];
    budget_ = budget;
    return search();
  }

  DualSpiral result() const {
    std::vector<VertexId> new_id(g_.vertex_count(), kNoVertex);
    for (VertexId i = 0; i < order_.size(); ++i) new_id[order_[i]] = i;
    DualSpiral out;
    std::vector<Edge> edges;
    for (const Edge& e : g_.edges()) {
      if (new_id[e.u] == kNoVertex || new_id[e.v] == kNoVertex) continue;
      edges.push_back({new_id[e.u], new_id[e.v], near_.contains(key(e.u, e.v)) ? N : F});
    }
    out.graph = make(order_.size(), std::move(edges));
    for (VertexId v : order_) out.coords.push_back(coords_[v] - centre_);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (!complete(f)) continue;
      if (f == start_face_) out.exempt_face = out.faces.size();
      std::array<VertexId, 4> q{};
      for (int i = 0; i < 4; ++i) q[i] = new_id[faces_[f][i]];
      out.faces.push_back(q);
    }
    return out;
  }

 private:
  static std::pair<VertexId, VertexId> key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

  static std::size_t lattice_degree(const LatticePatch& patch, VertexId v) {
    return tiling_of(patch.name).neighbors(patch.keys[v].site).size();
  }

  Vec2 centroid(std::size_t f) const {
    Vec2 c{0, 0};
    for (VertexId v : faces_[f]) c = c + coords_[v];
    return 0.25 * c;
  }

  bool complete(std::size_t f) const {
    return std::all_of(faces_[f].begin(), faces_[f].end(), [&](VertexId v) { return in_[v] != 0; });
  }

  int near_in_face(std::size_t f) const {
    int n = 0;
    for (int i = 0; i < 4; ++i) n += near_.contains(key(faces_[f][i], faces_[f][(i + 1) % 4]));
    return n;
  }

  void add(VertexId v) {
    in_[v] = 1;
    order_.push_back(v);
    if (ring_[v] >= 0 && ring_[v] <= target_ring_) --missing_;
  }
  void remove_last() {
    const VertexId v = order_.back();
    order_.pop_back();
    in_[v] = 0;
    if (ring_[v] >= 0 && ring_[v] <= target_ring_) ++missing_;
  }

  // Faces through w stay feasible after attaching w to p.
  bool faces_ok(VertexId w) const {
    for (std::size_t f : faces_of_[w]) {
      if (f == start_face_) continue;
      const int near = near_in_face(f);
      if (complete(f) ? near != 2 : near > 2) return false;
    }
    return true;
  }

  double angle(VertexId v) const {
    const Vec2 d = coords_[v] - centre_;
    return std::atan2(d.y, d.x);
  }

  bool search() {
    if (missing_ == 0) return true;
    if (budget_-- == 0) return false;
    const VertexId p = spine_end_;
    struct Move {
      VertexId w;
      bool leaf;
      std::tuple<int, int, double> rank;
    };
    std::vector<Move> moves;
    for (const Incidence& nb : g_.neighbors(p)) {
      const VertexId w = nb.neighbor;
      if (in_[w] || ring_[w] < 0 || ring_[w] > target_ring_ + 1) continue;
      int inside = 0;
      for (const Incidence& x : g_.neighbors(w)) inside += in_[x.neighbor];
      double turn = angle(w) - angle(p);
      while (turn <= -std::numbers::pi) turn += 2 * std::numbers::pi;
      while (turn > std::numbers::pi) turn -= 2 * std::numbers::pi;
      // Hug the inner rings, then keep turning counter-clockwise.
      const std::tuple<int, int, double> rank{ring_[w], -inside, -turn};
      moves.push_back({w, false, rank});
      if (caterpillar_) moves.push_back({w, true, rank});
    }
    std::stable_sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
      return std::tie(a.rank, a.leaf) < std::tie(b.rank, b.leaf);
    });
    for (const Move& m : moves) {
      add(m.w);
      near_.insert(key(p, m.w));
      if (faces_ok(m.w)) {
        if (!m.leaf) spine_end_ = m.w;
        if (search()) return true;
        spine_end_ = p;
      }
      near_.erase(key(p, m.w));
      remove_last();
    }
    return false;
  }

  const LabeledGraph& g_;
  const std::vector<Vec2>& coords_;
  bool caterpillar_;
  std::vector<std::vector<VertexId>> faces_;
  std::vector<std::vector<std::size_t>> faces_of_;
  std::size_t start_face_ = 0;
  Vec2 centre_;
  std::vector<int> ring_;
  int target_ring_ = 0;
  std::size_t missing_ = 0;
  std::vector<char> in_;
  std::vector<VertexId> order_;
  std::set<std::pair<VertexId, VertexId>> near_;
  VertexId spine_end_ = 0;
  std::uint64_t budget_ = 0;
};

// Backtracking monomorphism search.
class Embedder {
 public:
  Embedder(const LabeledGraph& pattern, const LabeledGraph& host) : p_(pattern), h_(host) {
    // Pattern order: BFS from the highest-degree vertex of each component.
    std::vector<char> seen(p_.vertex_count(), 0);
    std::vector<VertexId> roots(p_.vertex_count());
    std::iota(roots.begin(), roots.end(), 0);
    std::stable_sort(roots.begin(), roots.end(),
                     [&](VertexId a, VertexId b) { return p_.degree(a) > p_.degree(b); });
    for (VertexId r : roots) {
      if (seen[r]) continue;
      seen[r] = 1;
      const std::size_t first = order_.size();
      order_.push_back(r);
      for (std::size_t i = first; i < order_.size(); ++i) {
        for (const Incidence& nb : p_.neighbors(order_[i])) {
          if (!seen[nb.neighbor]) {
            seen[nb.neighbor] = 1;
            order_.push_back(nb.neighbor);
          }
        }
      }
    }
  }

  std::optional<std::vector<VertexId>> run() {
    map_.assign(p_.vertex_count(), kNoVertex);
    used_.assign(h_.vertex_count(), 0);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  bool fits(VertexId pv, VertexId hv) const {
    if (used_[hv] || h_.degree(hv) < p_.degree(pv)) return false;
    for (const Incidence& nb : p_.neighbors(pv)) {
      const VertexId m = map_[nb.neighbor];
      if (m != kNoVertex && !h_.find_edge(hv, m)) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    const VertexId pv = order_[i];
    VertexId anchor = kNoVertex;
    for (const Incidence& nb : p_.neighbors(pv)) {
      if (map_[nb.neighbor] != kNoVertex) {
        anchor = map_[nb.neighbor];
        break;
      }
    }
    auto attempt = [&](VertexId hv) {
      if (!fits(pv, hv)) return false;
      map_[pv] = hv;
      used_[hv] = 1;
      if (extend(i + 1)) return true;
      used_[hv] = 0;
      map_[pv] = kNoVertex;
      return false;
    };
    if (anchor != kNoVertex) {
      for (const Incidence& nb : h_.neighbors(anchor)) {
        if (attempt(nb.neighbor)) return true;
      }
    } else {
      for (VertexId hv = 0; hv < h_.vertex_count(); ++hv) {
        if (attempt(hv)) return true;
      }
    }
    return false;
  }

  const LabeledGraph& p_;
  const LabeledGraph& h_;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_;
  std::vector<char> used_;
};

}  // namespace

std::span<const GadgetName> all_gadgets() { return kGadgets; }

std::string to_string(GadgetName name) {
  switch (name) {
    case GadgetName::kFig6a: return "fig6a";
    case GadgetName::kFig6b: return "fig6b";
    case GadgetName::kFig6c: return "fig6c";
    case GadgetName::kFig6d: return "fig6d";
    case GadgetName::kFig6e: return "fig6e";
  }
  return "?";
}

GadgetName parse_gadget(std::string_view text) {
  for (GadgetName g : kGadgets) {
    if (to_string(g) == text) return g;
  }
  throw InputError("unknown gadget '" + std::string(text) + "' (expected fig6a..fig6e)");
}

LabeledGraph build_gadget(GadgetName name) {
  switch (name) {
    case GadgetName::kFig6a:
      // Far triangle v0 v1 v2 (ids 0-2); u_i (3+i) is Near to v_i and v_{i+1}.
      return make(6, {{0, 1, F}, {1, 2, F}, {0, 2, F}, {3, 0, N}, {3, 1, N},
                      {4, 1, N}, {4, 2, N}, {5, 2, N}, {5, 0, N}});
    case GadgetName::kFig6b:
      return make(8, {{0, 1, N}, {0, 3, N}, {1, 2, N}, {1, 4, F}, {2, 5, N}, {3, 4, F},
                      {3, 6, N}, {4, 5, F}, {4, 6, N}, {4, 7, N}, {5, 7, N}, {6, 7, F}});
    case GadgetName::kFig6c:
      return make(11, {{0, 1, F}, {0, 2, N}, {0, 3, N}, {1, 3, N}, {1, 5, N}, {2, 4, N},
                       {2, 6, F}, {3, 5, F}, {3, 6, N}, {3, 7, F}, {4, 6, F}, {4, 8, N},
                       {5, 9, N}, {6, 7, N}, {6, 10, F}, {7, 9, N}, {7, 10, N}, {8, 10, N}});
    case GadgetName::kFig6d:
      // Outer triangle 0 1 2 Far, centre 3 Near to all.
      return make(4, {{0, 1, F}, {1, 2, F}, {0, 2, F}, {0, 3, N}, {1, 3, N}, {2, 3, N}});
    case GadgetName::kFig6e:
      // Wheel: centre 0, rim 1-2-3-4.
      return make(5, {{0, 1, N}, {0, 2, F}, {0, 3, F}, {0, 4, N},
                      {1, 2, N}, {2, 3, N}, {3, 4, N}, {1, 4, F}});
  }
  throw InputError("unknown gadget");
}

std::vector<LatticeName> gadget_hosts(GadgetName name) {
  switch (name) {
    case GadgetName::kFig6a: return {LatticeName::k3_6, LatticeName::k3_4_6};
    case GadgetName::kFig6b: return {LatticeName::k3_3_4_2};
    case GadgetName::kFig6c: return {LatticeName::k3_2_4_3_4};
    case GadgetName::kFig6d: return {LatticeName::kD3_12_2};
    case GadgetName::kFig6e: return {LatticeName::kD4_6_12, LatticeName::kD4_8_2};
  }
  return {};
}

std::vector<Vec2> square_spiral_coords(int n) {
  if (n < 1 || n % 2 == 0) throw InputError("square spiral needs odd n >= 1, got " + std::to_string(n));
  std::vector<Vec2> pos{{0, 0}};
  auto walk = [&](int dx, int dy, int steps) {
    for (int s = 0; s < steps; ++s) pos.push_back({pos.back().x + dx, pos.back().y + dy});
  };
  for (int k = 3; k <= n; k += 2) {
    walk(1, 0, 1);
    walk(0, 1, k - 2);
    walk(-1, 0, k - 1);
    walk(0, -1, k - 1);
    walk(1, 0, k - 1);
  }
  return pos;
}

LabeledGraph build_square_spiral(int n) {
  const std::vector<Vec2> pos = square_spiral_coords(n);
  std::map<std::pair<long, long>, VertexId> at;
  for (VertexId v = 0; v < pos.size(); ++v) at[{std::lround(pos[v].x), std::lround(pos[v].y)}] = v;
  std::vector<Edge> edges;
  for (const auto& [xy, v] : at) {
    for (auto [dx, dy] : {std::pair{1L, 0L}, std::pair{0L, 1L}}) {
      auto it = at.find({xy.first + dx, xy.second + dy});
      if (it == at.end()) continue;
      const VertexId w = it->second;
      const bool on_path = (v > w ? v - w : w - v) == 1;
      edges.push_back({v, w, on_path ? N : F});
    }
  }
  return make(pos.size(), std::move(edges));
}

std::string to_string(SpiralFamily f) {
  switch (f) {
    case SpiralFamily::kSquare: return "square";
    case SpiralFamily::kD3464: return "d3464";
    case SpiralFamily::kD3636: return "d3636";
  }
  return "?";
}

SpiralFamily parse_spiral_family(std::string_view text) {
  for (SpiralFamily f : {SpiralFamily::kSquare, SpiralFamily::kD3464, SpiralFamily::kD3636}) {
    if (to_string(f) == text) return f;
  }
  throw InputError("unknown spiral family '" + std::string(text) + "' (expected square, d3464, d3636)");
}

DualSpiral build_dual_spiral(SpiralFamily family, int size) {
  if (family == SpiralFamily::kSquare) throw InputError("use build_square_spiral for the square family");
  if (size < 1) throw InputError("spiral size must be at least 1");
  const LatticeName name = family == SpiralFamily::kD3464 ? LatticeName::kD3_4_6_4 : LatticeName::kD3_6_3_6;
  const int cells = 2 * size + 4;
  const LatticePatch patch = generate(name, {cells, cells});
  SpiralGrower grower(patch, family == SpiralFamily::kD3636, size);
  if (!grower.grow(50'000'000)) throw InternalError("dual spiral growth found no labeling at size " + std::to_string(size));
  return grower.result();
}

bool near_edges_form_path(const LabeledGraph& g) {
  if (!near_spanning_tree(g)) return false;
  const auto deg = near_degrees(g);
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d <= 2; });
}

bool near_edges_form_caterpillar(const LabeledGraph& g) {
  if (!near_spanning_tree(g)) return false;
  // Removing the leaves must leave a path.
  const auto deg = near_degrees(g);
  std::vector<std::size_t> spine_deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (e.label == N && deg[e.u] > 1 && deg[e.v] > 1) {
      ++spine_deg[e.u];
      ++spine_deg[e.v];
    }
  }
  return std::all_of(spine_deg.begin(), spine_deg.end(), [](std::size_t d) { return d <= 2; });
}

bool has_cycle_with_one_far(const LabeledGraph& g) {
  Dsu dsu(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.label == N) dsu.unite(e.u, e.v);
  }
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return e.label == F && dsu.find(e.u) == dsu.find(e.v); });
}

std::optional<std::vector<VertexId>> find_embedding(const LabeledGraph& pattern, const LabeledGraph& host) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  return Embedder(pattern, host).run();
}

bool embeds_in_lattice(const LabeledGraph& pattern, LatticeName lattice) {
  return find_embedding(pattern, generate(lattice, {4, 4}).graph).has_value();
}

}  // namespace happy
