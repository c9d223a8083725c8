#include "happy/tiling.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "happy/graph.h"

namespace happy {
namespace {

constexpr double kEps = 1e-6;

int floor_frac(double f) { return static_cast<int>(std::floor(f + 1e-9)); }

}  // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

Vec2 PeriodicTiling::position(SiteRef r) const {
  return sites_[r.site] + static_cast<double>(r.dx) * a1_ + static_cast<double>(r.dy) * a2_;
}

Vec2 PeriodicTiling::to_fractional(Vec2 p) const {
  const double det = a1_.x * a2_.y - a1_.y * a2_.x;
  return {(p.x * a2_.y - p.y * a2_.x) / det, (a1_.x * p.y - a1_.y * p.x) / det};
}

PeriodicTiling PeriodicTiling::from_points(Vec2 a1, Vec2 a2, std::span<const Vec2> seeds) {
  PeriodicTiling t;
  t.a1_ = a1;
  t.a2_ = a2;
  std::vector<Vec2> fracs;
  for (Vec2 p : seeds) {
    Vec2 f = t.to_fractional(p);
    f.x -= floor_frac(f.x);
    f.y -= floor_frac(f.y);
    const bool seen = std::any_of(fracs.begin(), fracs.end(), [&](Vec2 g) {
      return std::abs(g.x - f.x) < kEps && std::abs(g.y - f.y) < kEps;
    });
    if (!seen) fracs.push_back(f);
  }
  std::sort(fracs.begin(), fracs.end(), [](Vec2 a, Vec2 b) {
    if (std::abs(a.y - b.y) > kEps) return a.y < b.y;
    return a.x < b.x;
  });
  for (Vec2 f : fracs) t.sites_.push_back(f.x * a1 + f.y * a2);

  std::vector<PeriodicEdge> edges;
  for (int i = 0; i < t.site_count(); ++i) {
    for (int j = 0; j < t.site_count(); ++j) {
      for (int dx = -3; dx <= 3; ++dx) {
        for (int dy = -3; dy <= 3; ++dy) {
          SiteRef to{j, dx, dy};
          if (std::abs(norm(t.position(to) - t.sites_[i]) - 1.0) < kEps)
            edges.push_back({i, to});
        }
      }
    }
  }
  t.build_adjacency(edges);
  t.trace_faces();
  return t;
}

PeriodicTiling PeriodicTiling::from_edges(Vec2 a1, Vec2 a2, std::vector<Vec2> sites,
                                          std::span<const PeriodicEdge> edges) {
  PeriodicTiling t;
  t.a1_ = a1;
  t.a2_ = a2;
  t.sites_ = std::move(sites);
  // Accept each undirected edge in either or both directions.
  std::set<std::pair<int, SiteRef>> directed;
  for (const PeriodicEdge& e : edges) {
    directed.insert({e.from, e.to});
    directed.insert({e.to.site, SiteRef{e.from, -e.to.dx, -e.to.dy}});
  }
  std::vector<PeriodicEdge> all;
  for (const auto& [from, to] : directed) all.push_back({from, to});
  t.build_adjacency(all);
  t.trace_faces();
  return t;
}

void PeriodicTiling::build_adjacency(std::span<const PeriodicEdge> edges) {
  adjacency_.assign(sites_.size(), {});
  for (const PeriodicEdge& e : edges) adjacency_[e.from].push_back(e.to);
  for (int s = 0; s < site_count(); ++s) {
    auto& nbrs = adjacency_[s];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    const Vec2 here = sites_[s];
    std::sort(nbrs.begin(), nbrs.end(), [&](const SiteRef& a, const SiteRef& b) {
      const Vec2 da = position(a) - here;
      const Vec2 db = position(b) - here;
      return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
    });
  }
}

bool PeriodicTiling::adjacent(SiteRef a, SiteRef b) const {
  const SiteRef rel{b.site, b.dx - a.dx, b.dy - a.dy};
  const auto& nbrs = adjacency_[a.site];
  return std::find(nbrs.begin(), nbrs.end(), rel) != nbrs.end();
}

void PeriodicTiling::trace_faces() {
  const int n = site_count();
  auto back_index = [&](int s, SiteRef to) {
    const auto& nbrs = adjacency_[to.site];
    const SiteRef back{s, -to.dx, -to.dy};
    auto it = std::find(nbrs.begin(), nbrs.end(), back);
    if (it == nbrs.end()) throw InternalError("periodic adjacency is not symmetric");
    return static_cast<int>(it - nbrs.begin());
  };

  wedge_.assign(n, {});
  for (int s = 0; s < n; ++s) wedge_[s].assign(adjacency_[s].size(), SiteRef{-1, 0, 0});
  std::map<std::vector<SiteRef>, int> index_of;

  for (int s0 = 0; s0 < n; ++s0) {
    for (int k0 = 0; k0 < static_cast<int>(adjacency_[s0].size()); ++k0) {
      if (wedge_[s0][k0].site >= 0) continue;
      // Walk the face, recording (vertex, outgoing edge index) with absolute offsets.
      std::vector<SiteRef> cycle;
      std::vector<int> out_edge;
      int s = s0, k = k0, ox = 0, oy = 0;
      do {
        cycle.push_back({s, ox, oy});
        out_edge.push_back(k);
        const SiteRef to = adjacency_[s][k];
        const int j = back_index(s, to);
        const int deg = static_cast<int>(adjacency_[to.site].size());
        ox += to.dx;
        oy += to.dy;
        s = to.site;
        k = (j + deg - 1) % deg;
        if (cycle.size() > 64) throw InternalError("unbounded face while tracing tiling");
      } while (!(s == s0 && k == k0 && ox == 0 && oy == 0));

      Vec2 c{0, 0};
      for (const SiteRef& r : cycle) c = c + position(r);
      c = (1.0 / static_cast<double>(cycle.size())) * c;
      const Vec2 f = to_fractional(c);
      const int fx = floor_frac(f.x), fy = floor_frac(f.y);
      std::vector<SiteRef> canon;
      for (const SiteRef& r : cycle) canon.push_back(r.shifted(-fx, -fy));
      std::vector<SiteRef> key = canon;
      std::sort(key.begin(), key.end());
      auto [it, inserted] = index_of.try_emplace(key, static_cast<int>(faces_.size()));
      if (inserted) faces_.push_back(canon);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        wedge_[cycle[i].site][out_edge[i]] = {it->second, fx - cycle[i].dx, fy - cycle[i].dy};
      }
    }
  }
}

Vec2 PeriodicTiling::face_center(int face) const {
  Vec2 c{0, 0};
  for (const SiteRef& r : faces_[face]) c = c + position(r);
  return (1.0 / static_cast<double>(faces_[face].size())) * c;
}

PeriodicTiling PeriodicTiling::dual() const {
  std::vector<Vec2> centers;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) centers.push_back(face_center(f));
  std::vector<PeriodicEdge> edges;
  for (int s = 0; s < site_count(); ++s) {
    for (std::size_t k = 0; k < adjacency_[s].size(); ++k) {
      const SiteRef to = adjacency_[s][k];
      const SiteRef a = wedge_[s][k];
      const auto& back = adjacency_[to.site];
      const auto j = std::find(back.begin(), back.end(), SiteRef{s, -to.dx, -to.dy}) - back.begin();
      const SiteRef b = wedge_[to.site][j].shifted(to.dx, to.dy);
      edges.push_back({a.site, SiteRef{b.site, b.dx - a.dx, b.dy - a.dy}});
    }
  }
  return from_edges(a1_, a2_, std::move(centers), edges);
}

SiteRef PeriodicTiling::locate(Vec2 p) const {
  const Vec2 f = to_fractional(p);
  const int fx = floor_frac(f.x), fy = floor_frac(f.y);
  for (int dx = fx - 1; dx <= fx + 1; ++dx) {
    for (int dy = fy - 1; dy <= fy + 1; ++dy) {
      for (int s = 0; s < site_count(); ++s) {
        if (norm(position({s, dx, dy}) - p) < kEps) return {s, dx, dy};
      }
    }
  }
  throw InputError("no lattice site at the requested position");
}

}  // namespace happy
