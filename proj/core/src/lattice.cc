#include "happy/lattice.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace happy {
namespace {

constexpr std::array<LatticeName, 19> kAll = {
    LatticeName::k3_6,      LatticeName::k4_4,        LatticeName::k6_3,
    LatticeName::k3_12_2,   LatticeName::k4_8_2,      LatticeName::k4_6_12,
    LatticeName::k3_4_6,    LatticeName::k3_3_4_2,    LatticeName::k3_2_4_3_4,
    LatticeName::k3_4_6_4,  LatticeName::k3_6_3_6,    LatticeName::kD3_12_2,
    LatticeName::kD4_8_2,   LatticeName::kD4_6_12,    LatticeName::kD3_4_6,
    LatticeName::kD3_3_4_2, LatticeName::kD3_2_4_3_4, LatticeName::kD3_4_6_4,
    LatticeName::kD3_6_3_6,
};

constexpr std::array<std::string_view, 19> kNames = {
    "3^6",        "4^4",         "6^3",          "3.12^2",    "4.8^2",
    "4.6.12",     "3^4.6",       "3^3.4^2",      "3^2.4.3.4", "3.4.6.4",
    "3.6.3.6",    "D(3.12^2)",   "D(4.8^2)",     "D(4.6.12)", "D(3^4.6)",
    "D(3^3.4^2)", "D(3^2.4.3.4)", "D(3.4.6.4)",  "D(3.6.3.6)",
};

// Archimedean lattice a Laves lattice is dual to.
LatticeName primal_of(LatticeName name) {
  switch (name) {
    case LatticeName::kD3_12_2: return LatticeName::k3_12_2;
    case LatticeName::kD4_8_2: return LatticeName::k4_8_2;
    case LatticeName::kD4_6_12: return LatticeName::k4_6_12;
    case LatticeName::kD3_4_6: return LatticeName::k3_4_6;
    case LatticeName::kD3_3_4_2: return LatticeName::k3_3_4_2;
    case LatticeName::kD3_2_4_3_4: return LatticeName::k3_2_4_3_4;
    case LatticeName::kD3_4_6_4: return LatticeName::k3_4_6_4;
    case LatticeName::kD3_6_3_6: return LatticeName::k3_6_3_6;
    default: return name;
  }
}

std::vector<Vec2> ring(double radius, double start_deg, int n, Vec2 centre = {0, 0}) {
  std::vector<Vec2> out;
  for (int k = 0; k < n; ++k) {
    const double a = (start_deg + 360.0 * k / n) * std::numbers::pi / 180.0;
    out.push_back({centre.x + radius * std::cos(a), centre.y + radius * std::sin(a)});
  }
  return out;
}

// Unit edge length throughout; seeds are one orbit representative per site.
PeriodicTiling build_archimedean(LatticeName name) {
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
  const double r12 = 1.0 / (2.0 * std::sin(std::numbers::pi / 12));
  auto tri = [&](double len, std::span<const Vec2> seeds) {
    return PeriodicTiling::from_points({len, 0}, {len / 2, len * s3 / 2}, seeds);
  };
  switch (name) {
    case LatticeName::k3_6: {
      std::vector<Vec2> s{{0, 0}};
      return tri(1, s);
    }
    case LatticeName::k4_4: {
      std::vector<Vec2> s{{0, 0}};
      return PeriodicTiling::from_points({1, 0}, {0, 1}, s);
    }
    case LatticeName::k6_3: return tri(s3, ring(1, 30, 6));
    case LatticeName::k3_12_2: return tri(2 + s3, ring(r12, 15, 12));
    case LatticeName::k4_8_2: {
      const double len = 1 + s2;
      return PeriodicTiling::from_points({len, 0}, {0, len},
                                         ring(1 / (2 * std::sin(std::numbers::pi / 8)), 22.5, 8));
    }
    case LatticeName::k4_6_12: return tri(3 + s3, ring(r12, 15, 12));
    case LatticeName::k3_4_6:
      return PeriodicTiling::from_points({2.5, s3 / 2}, {0.5, 1.5 * s3}, ring(1, 0, 6));
    case LatticeName::k3_3_4_2: {
      std::vector<Vec2> s{{0, 0}, {0, 1}};
      return PeriodicTiling::from_points({1, 0}, {0.5, 1 + s3 / 2}, s);
    }
    case LatticeName::k3_2_4_3_4: {
      const double len = std::sqrt(2 + s3);
      auto s = ring(1 / s2, 60, 4);
      auto t = ring(1 / s2, 30, 4, {len / 2, len / 2});
      s.insert(s.end(), t.begin(), t.end());
      return PeriodicTiling::from_points({len, 0}, {0, len}, s);
    }
    case LatticeName::k3_4_6_4: return tri(1 + s3, ring(1, 30, 6));
    case LatticeName::k3_6_3_6: {
      std::vector<Vec2> s{{0, 0}, {1, 0}, {0.5, s3 / 2}};
      return PeriodicTiling::from_points({2, 0}, {1, s3}, s);
    }
    default: throw InternalError("not an Archimedean lattice");
  }
}

// Role layouts. Site indices refer to the tilings built above.
constexpr std::array<std::string_view, kTdRoleCount> kTdNames = {"u0", "u1", "v0", "v1",
                                                                  "v2", "v3", "v4", "v5"};
constexpr std::array<SiteRef, kTdRoleCount> kTdSites = {{
    {5, 0, -1}, {5, 0, 0}, {1, 0, 0}, {0, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}, {1, 1, 0},
}};
constexpr std::array<std::array<int, 2>, 9> kTdEdges = {{
    {kTdU0, kTdV1}, {kTdV0, kTdV1}, {kTdV0, kTdV2}, {kTdV1, kTdV2}, {kTdU1, kTdV3},
    {kTdV2, kTdV3}, {kTdU1, kTdV4}, {kTdV3, kTdV4}, {kTdV4, kTdV5},
}};

constexpr std::array<std::string_view, kShRoleCount> kShNames = {
    "u0", "u1", "u2", "u3", "u4", "v0", "v1", "v2",
    "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10"};
constexpr std::array<SiteRef, kShRoleCount> kShSites = {{
    {3, 0, 0}, {2, 0, 1}, {3, 0, 1}, {2, 1, 0}, {3, 1, 0},
    {7, 0, 0}, {8, 0, 0}, {4, 0, 0}, {10, 0, 0}, {0, 0, 1}, {1, 0, 1},
    {11, 0, 0}, {9, 0, 0}, {5, 0, 0}, {6, 1, 0}, {7, 1, 0},
}};
constexpr std::array<std::array<int, 2>, 19> kShEdges = {{
    {kShU0, kShV0}, {kShV0, kShV1}, {kShV1, kShV3}, {kShV1, kShV2}, {kShU0, kShV2},
    {kShV2, kShV8}, {kShV8, kShU3}, {kShV8, kShV7}, {kShV7, kShV6}, {kShV7, kShV9},
    {kShV9, kShU3}, {kShV9, kShV10}, {kShV10, kShU4}, {kShV6, kShV5}, {kShV6, kShV3},
    {kShV5, kShU2}, {kShV5, kShV4}, {kShV4, kShU1}, {kShV4, kShV3},
}};

bool has_linear_structure(LatticeName name) {
  return name == LatticeName::kD3_2_4_3_4 || name == LatticeName::kD3_4_6;
}

// Sites that receive unique colors in the linear construction.
std::vector<bool> unique_color_sites(const PeriodicTiling& t, LatticeName name) {
  std::vector<bool> in(t.site_count(), false);
  for (int s = 0; s < t.site_count(); ++s) {
    const auto deg = t.neighbors(s).size();
    if (name == LatticeName::kD3_2_4_3_4) {
      in[s] = deg == 4;
    } else {
      // Hexagon centres, plus degree-3 sites not touching one.
      const bool touches_hub = std::any_of(t.neighbors(s).begin(), t.neighbors(s).end(),
                                           [&](SiteRef r) { return t.neighbors(r.site).size() == 6; });
      in[s] = deg == 6 || !touches_hub;
    }
  }
  return in;
}

struct PairTemplate {
  SiteRef u, v;
  std::array<SiteRef, 4> w;
};

std::vector<PairTemplate> pair_templates(const PeriodicTiling& t, LatticeName name) {
  const auto in = unique_color_sites(t, name);
  std::vector<PairTemplate> out;
  for (int s = 0; s < t.site_count(); ++s) {
    if (in[s]) continue;
    std::vector<SiteRef> partner, w_u;
    for (SiteRef r : t.neighbors(s)) (in[r.site] ? w_u : partner).push_back(r);
    if (partner.size() != 1 || w_u.size() != 2)
      throw InternalError("degree-3 site without a unique partner");
    const SiteRef v = partner[0];
    if (SiteRef{s, 0, 0} > v) continue;  // anchor each pair once
    std::vector<SiteRef> w_v;
    for (SiteRef r : t.neighbors(v.site)) {
      const SiteRef abs = r.shifted(v.dx, v.dy);
      if (in[r.site]) w_v.push_back(abs);
    }
    out.push_back({{s, 0, 0}, v, {w_u[0], w_u[1], w_v[0], w_v[1]}});
  }
  return out;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

bool forest_site_in_i(LatticeName name, SiteRef r) {
  if (name == LatticeName::k4_8_2) return r.site == 0;
  // 6^3: phase with period 4 along a1 and 2 along a2.
  const int x = mod(r.dx, 4), y = mod(r.dy, 2);
  return (r.site == 0 && ((x == 0 && y == 0) || (x == 2 && y == 1))) ||
         (r.site == 1 && ((x == 1 && y == 0) || (x == 3 && y == 1)));
}

}  // namespace

std::span<const LatticeName> all_lattices() { return kAll; }

std::string to_string(LatticeName name) { return std::string(kNames[static_cast<int>(name)]); }

LatticeName parse_lattice(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return kAll[i];
  }
  throw InputError("unknown lattice name \"" + std::string(text) + "\"");
}

bool is_laves(LatticeName name) { return primal_of(name) != name; }

std::vector<int> name_species(LatticeName name) {
  std::string text = to_string(primal_of(name));
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    const int degree = std::stoi(text.substr(i, j - i));
    int times = 1;
    if (j < text.size() && text[j] == '^') {
      std::size_t k = j + 1;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      times = std::stoi(text.substr(j + 1, k - j - 1));
      j = k;
    }
    out.insert(out.end(), times, degree);
    i = j + 1;  // skip '.'
  }
  return out;
}

const PeriodicTiling& tiling_of(LatticeName name) {
  static const std::vector<PeriodicTiling> tilings = [] {
    std::vector<PeriodicTiling> v;
    for (LatticeName n : kAll) {
      v.push_back(is_laves(n) ? build_archimedean(primal_of(n)).dual() : build_archimedean(n));
    }
    return v;
  }();
  return tilings[static_cast<int>(name)];
}

std::span<const std::string_view> cell_role_names(LatticeName name) {
  if (name == LatticeName::k3_12_2) return kTdNames;
  if (name == LatticeName::k4_6_12) return kShNames;
  throw InputError("lattice " + to_string(name) + " has no cell roles");
}

std::span<const std::array<int, 2>> cell_role_edges(LatticeName name) {
  if (name == LatticeName::k3_12_2) return kTdEdges;
  if (name == LatticeName::k4_6_12) return kShEdges;
  throw InputError("lattice " + to_string(name) + " has no cell roles");
}

std::vector<int> canonical_cycle(std::vector<int> seq) {
  std::vector<int> best = seq;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      best = std::min(best, seq);
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

LatticePatch generate(LatticeName name, PatchParams params) {
  if (params.rows < 1 || params.cols < 1) throw InputError("rows and cols must be at least 1");
  const PeriodicTiling& t = tiling_of(name);

  // Each cell contributes a tile of sites; the patch is the union of tiles.
  std::vector<std::vector<SiteRef>> tiles;
  std::vector<PairTemplate> pairs;
  if (name == LatticeName::k3_12_2) {
    tiles.emplace_back(kTdSites.begin(), kTdSites.end());
  } else if (name == LatticeName::k4_6_12) {
    tiles.emplace_back(kShSites.begin(), kShSites.end());
  } else if (has_linear_structure(name)) {
    pairs = pair_templates(t, name);
    for (const PairTemplate& p : pairs) {
      tiles.push_back({p.u, p.v, p.w[0], p.w[1], p.w[2], p.w[3]});
    }
  } else {
    tiles = t.faces();
  }

  std::set<SiteRef> present;
  for (int j = 0; j < params.rows; ++j) {
    for (int i = 0; i < params.cols; ++i) {
      for (const auto& tile : tiles) {
        for (const SiteRef& r : tile) present.insert(r.shifted(i, j));
      }
    }
  }

  LatticePatch patch;
  patch.name = name;
  patch.params = params;
  patch.keys.assign(present.begin(), present.end());
  auto rounded = [&](const SiteRef& r) {
    const Vec2 p = t.position(r);
    return std::pair{std::llround(p.y * 1e6), std::llround(p.x * 1e6)};
  };
  std::sort(patch.keys.begin(), patch.keys.end(),
            [&](const SiteRef& a, const SiteRef& b) { return rounded(a) < rounded(b); });
  std::map<SiteRef, VertexId> id_of;
  for (VertexId v = 0; v < patch.keys.size(); ++v) {
    id_of[patch.keys[v]] = v;
    patch.coords.push_back(t.position(patch.keys[v]));
  }

  std::vector<Edge> edges;
  for (VertexId v = 0; v < patch.keys.size(); ++v) {
    const SiteRef& r = patch.keys[v];
    for (const SiteRef& n : t.neighbors(r.site)) {
      auto it = id_of.find(n.shifted(r.dx, r.dy));
      if (it != id_of.end() && it->second > v) edges.push_back({v, it->second, EdgeLabel::kNear});
    }
  }
  patch.graph = LabeledGraph(patch.keys.size(), std::move(edges));

  StructuralAnnotations& ann = patch.annotations;
  auto id = [&](SiteRef r) { return id_of.at(r); };
  if (name == LatticeName::k6_3 || name == LatticeName::k4_8_2) {
    ann.independent_set.emplace();
    ann.forest_vertices.emplace();
    for (VertexId v = 0; v < patch.keys.size(); ++v) {
      (forest_site_in_i(name, patch.keys[v]) ? *ann.independent_set : *ann.forest_vertices)
          .push_back(v);
    }
  } else if (name == LatticeName::k3_12_2 || name == LatticeName::k4_6_12) {
    const auto sites = name == LatticeName::k3_12_2 ? std::span<const SiteRef>(kTdSites)
                                                    : std::span<const SiteRef>(kShSites);
    ann.patch_cells.emplace();
    for (int j = 0; j < params.rows; ++j) {
      for (int i = 0; i < params.cols; ++i) {
        PatchCell cell{j, i, {}};
        for (const SiteRef& r : sites) cell.roles.push_back(id(r.shifted(i, j)));
        ann.patch_cells->push_back(std::move(cell));
      }
    }
  } else if (has_linear_structure(name)) {
    const auto in = unique_color_sites(t, name);
    ann.independent_set.emplace();
    for (VertexId v = 0; v < patch.keys.size(); ++v) {
      if (in[patch.keys[v].site]) ann.independent_set->push_back(v);
    }
    ann.matching_pairs.emplace();
    ann.grid_faces.emplace();
    for (int j = 0; j < params.rows; ++j) {
      for (int i = 0; i < params.cols; ++i) {
        for (const PairTemplate& p : pairs) {
          MatchingPair m{id(p.u.shifted(i, j)), id(p.v.shifted(i, j)), {}};
          for (int k = 0; k < 4; ++k) m.w[k] = id(p.w[k].shifted(i, j));
          ann.matching_pairs->push_back(m);
        }
      }
    }
    for (std::size_t k = 0; k < ann.matching_pairs->size(); ++k) {
      const auto& w = (*ann.matching_pairs)[k].w;
      const Vec2 mid12 = 0.5 * (patch.coords[w[0]] + patch.coords[w[1]]);
      const Vec2 mid34 = 0.5 * (patch.coords[w[2]] + patch.coords[w[3]]);
      const Vec2 d = mid34 - mid12;
      // Sides stacked one above the other make a vertical face.
      const auto kind = std::abs(d.y) > std::abs(d.x) ? GridFace::Kind::kVertical
                                                      : GridFace::Kind::kHorizontal;
      ann.grid_faces->push_back({kind, w, k});
    }
    std::stable_sort(ann.grid_faces->begin(), ann.grid_faces->end(),
                     [](const GridFace& a, const GridFace& b) {
                       return *std::max_element(a.corners.begin(), a.corners.end()) <
                              *std::max_element(b.corners.begin(), b.corners.end());
                     });
  }
  return patch;
}

std::optional<std::vector<int>> species_of(const LatticePatch& patch, VertexId v) {
  if (v >= patch.keys.size()) throw InputError("vertex id out of range: " + std::to_string(v));
  const PeriodicTiling& t = tiling_of(patch.name);
  const std::set<SiteRef> present(patch.keys.begin(), patch.keys.end());
  const SiteRef r = patch.keys[v];
  std::vector<int> sizes;
  for (const SiteRef& f : t.incident_faces(r.site)) {
    const auto& face = t.faces()[f.site];
    for (const SiteRef& corner : face) {
      if (!present.contains(corner.shifted(r.dx + f.dx, r.dy + f.dy))) return std::nullopt;
    }
    sizes.push_back(static_cast<int>(face.size()));
  }
  return canonical_cycle(std::move(sizes));
}

std::vector<VertexId> embed_ids(const LatticePatch& small, const LatticePatch& large) {
  if (small.name != large.name) throw InputError("patches come from different lattices");
  std::map<SiteRef, VertexId> id_of;
  for (VertexId v = 0; v < large.keys.size(); ++v) id_of[large.keys[v]] = v;
  std::vector<VertexId> out;
  for (const SiteRef& r : small.keys) {
    auto it = id_of.find(r);
    out.push_back(it == id_of.end() ? kNoVertex : it->second);
  }
  return out;
}

namespace {

class Diagnostics {
 public:
  void fail(std::string msg) { report_.violations.push_back(std::move(msg)); }
  AnnotationReport done() {
    report_.valid = report_.violations.empty();
    return std::move(report_);
  }

 private:
  AnnotationReport report_;
};

std::string vid(VertexId v) { return std::to_string(v); }

bool ids_ok(const LatticePatch& p, std::span<const VertexId> ids, std::string_view what,
            Diagnostics& d) {
  std::set<VertexId> seen;
  for (VertexId v : ids) {
    if (v >= p.graph.vertex_count()) {
      d.fail(std::string(what) + ": vertex " + vid(v) + " out of range");
      return false;
    }
    if (!seen.insert(v).second) d.fail(std::string(what) + ": vertex " + vid(v) + " repeated");
  }
  return true;
}

void check_forest(const LatticePatch& p, const StructuralAnnotations& a, Diagnostics& d) {
  const auto& g = p.graph;
  const auto& iset = *a.independent_set;
  std::vector<char> in_i(g.vertex_count(), 0);
  for (VertexId v : iset) in_i[v] = 1;
  // Distance >= 3: no edge inside I and no vertex with two I-neighbours.
  for (const Edge& e : g.edges()) {
    if (in_i[e.u] && in_i[e.v]) d.fail("independent set: adjacent vertices " + vid(e.u) + "," + vid(e.v));
  }
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    std::vector<VertexId> hits;
    for (const Incidence& n : g.neighbors(x)) {
      if (in_i[n.neighbor]) hits.push_back(n.neighbor);
    }
    if (hits.size() > 1)
      d.fail("independent set: " + vid(hits[0]) + " and " + vid(hits[1]) + " share neighbour " + vid(x));
  }
  if (!a.forest_vertices) return;
  const auto& tset = *a.forest_vertices;
  std::vector<char> in_t(g.vertex_count(), 0);
  for (VertexId v : tset) {
    if (in_i[v]) d.fail("forest: vertex " + vid(v) + " also in independent set");
    in_t[v] = 1;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!in_i[v] && !in_t[v]) d.fail("vertex " + vid(v) + " in neither set");
  }
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (!in_t[e.u] || !in_t[e.v]) continue;
    const VertexId a_root = find(e.u), b_root = find(e.v);
    if (a_root == b_root) d.fail("forest: edge " + vid(e.u) + "-" + vid(e.v) + " closes a cycle");
    parent[a_root] = b_root;
  }
}

void check_cells(const LatticePatch& p, const std::vector<PatchCell>& cells, Diagnostics& d) {
  const auto& g = p.graph;
  if (p.name != LatticeName::k3_12_2 && p.name != LatticeName::k4_6_12) {
    d.fail("patch cells on a lattice without cell roles");
    return;
  }
  const auto names = cell_role_names(p.name);
  const auto role_edges = cell_role_edges(p.name);
  const int last = p.name == LatticeName::k3_12_2 ? int{kTdV5} : int{kShV10};
  const int start = p.name == LatticeName::k3_12_2 ? int{kTdV0} : int{kShV0};
  std::vector<char> covered(g.edge_count(), 0), seen(g.vertex_count(), 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& roles = cells[c].roles;
    const std::string where = "cell " + std::to_string(c);
    if (roles.size() != names.size()) {
      d.fail(where + ": expected " + std::to_string(names.size()) + " roles");
      continue;
    }
    if (!ids_ok(p, roles, where, d)) continue;
    for (VertexId v : roles) seen[v] = 1;
    for (auto [a, b] : role_edges) {
      auto e = g.find_edge(roles[a], roles[b]);
      if (!e) {
        d.fail(where + ": missing edge " + std::string(names[a]) + "-" + std::string(names[b]));
      } else {
        covered[*e] = 1;
      }
    }
    if (c + 1 < cells.size() && cells[c + 1].row == cells[c].row && cells[c + 1].roles.size() == roles.size() &&
        cells[c + 1].roles[start] != roles[last]) {
      d.fail(where + ": " + std::string(names[last]) + " is not the next cell's " +
             std::string(names[start]));
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!covered[e]) d.fail("edge " + vid(g.edge(e).u) + "-" + vid(g.edge(e).v) + " in no cell");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) d.fail("vertex " + vid(v) + " in no cell");
  }
}

void check_pairs(const LatticePatch& p, const StructuralAnnotations& a, Diagnostics& d) {
  const auto& g = p.graph;
  std::vector<char> in_i(g.vertex_count(), 0), used(g.vertex_count(), 0);
  if (a.independent_set) {
    for (VertexId v : *a.independent_set) in_i[v] = 1;
    for (const Edge& e : g.edges()) {
      if (in_i[e.u] && in_i[e.v])
        d.fail("independent set: adjacent vertices " + vid(e.u) + "," + vid(e.v));
    }
  } else {
    d.fail("matching pairs without an independent set");
  }
  const auto& pairs = *a.matching_pairs;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const MatchingPair& m = pairs[k];
    const std::string where = "pair " + std::to_string(k);
    std::array<VertexId, 6> all{m.u, m.v, m.w[0], m.w[1], m.w[2], m.w[3]};
    if (!ids_ok(p, all, where, d)) continue;
    for (VertexId x : {m.u, m.v}) {
      if (in_i[x]) d.fail(where + ": " + vid(x) + " is in the independent set");
      if (used[x]++) d.fail(where + ": " + vid(x) + " already matched");
      if (g.degree(x) != 3) d.fail(where + ": " + vid(x) + " does not have degree 3");
    }
    if (!g.find_edge(m.u, m.v)) d.fail(where + ": u-v is not an edge");
    for (int i = 0; i < 4; ++i) {
      if (!in_i[m.w[i]]) d.fail(where + ": w" + std::to_string(i + 1) + " not in independent set");
      if (!g.find_edge(i < 2 ? m.u : m.v, m.w[i]))
        d.fail(where + ": missing edge to w" + std::to_string(i + 1));
    }
  }
  if (!a.grid_faces) return;
  for (std::size_t f = 0; f < a.grid_faces->size(); ++f) {
    const GridFace& face = (*a.grid_faces)[f];
    if (face.pair >= pairs.size() || face.corners != pairs[face.pair].w)
      d.fail("grid face " + std::to_string(f) + " does not match its matching pair");
  }
}

}  // namespace

AnnotationReport validate_annotations(const LatticePatch& patch) {
  Diagnostics d;
  const StructuralAnnotations& a = patch.annotations;
  if (a.independent_set && !ids_ok(patch, *a.independent_set, "independent set", d)) return d.done();
  if (a.forest_vertices && !ids_ok(patch, *a.forest_vertices, "forest", d)) return d.done();
  if (a.forest_vertices && !a.independent_set) d.fail("forest without an independent set");
  if (a.independent_set && a.forest_vertices) check_forest(patch, a, d);
  if (a.patch_cells) check_cells(patch, *a.patch_cells, d);
  if (a.matching_pairs) check_pairs(patch, a, d);
  if (a.grid_faces && !a.matching_pairs) d.fail("grid faces without matching pairs");
  return d.done();
}

}  // namespace happy
