#pragma once

#include <compare>
#include <span>
#include <vector>

namespace happy {

struct Vec2 {
  double x = 0;
  double y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
};

double norm(Vec2 v);

/// A site of the periodic tiling placed in a translated copy of the unit cell.
struct SiteRef {
  int site = 0;
  int dx = 0;
  int dy = 0;

  SiteRef shifted(int ox, int oy) const { return {site, dx + ox, dy + oy}; }
  friend auto operator<=>(const SiteRef&, const SiteRef&) = default;
};

/// A planar, doubly periodic graph: sites of one unit cell plus edges into
/// neighbouring cells. Faces are traced from the straight-line embedding.
class PeriodicTiling {
 public:
  struct PeriodicEdge {
    int from;
    SiteRef to;
  };

  /// Sites are the seed points reduced modulo the lattice; edges join sites
  /// at unit distance.
  static PeriodicTiling from_points(Vec2 a1, Vec2 a2, std::span<const Vec2> seeds);
  static PeriodicTiling from_edges(Vec2 a1, Vec2 a2, std::vector<Vec2> sites,
                                   std::span<const PeriodicEdge> edges);

  /// Face-centre dual of this tiling.
  PeriodicTiling dual() const;

  Vec2 a1() const { return a1_; }
  Vec2 a2() const { return a2_; }
  int site_count() const { return static_cast<int>(sites_.size()); }
  Vec2 position(SiteRef r) const;
  Vec2 to_fractional(Vec2 p) const;

  /// Neighbours of the site in cell (0,0), counter-clockwise by angle.
  const std::vector<SiteRef>& neighbors(int site) const { return adjacency_[site]; }
  bool adjacent(SiteRef a, SiteRef b) const;

  /// Canonical faces: each listed once, translated so its centroid lies in cell (0,0).
  const std::vector<std::vector<SiteRef>>& faces() const { return faces_; }
  Vec2 face_center(int face) const;

  /// Faces around a site in counter-clockwise order, as (face index, translation);
  /// entry k lies on the side of the directed edge site -> neighbors(site)[k].
  const std::vector<SiteRef>& incident_faces(int site) const { return wedge_[site]; }

  /// Locates the site at a Cartesian position (tolerance 1e-6).
  SiteRef locate(Vec2 p) const;

 private:
  void build_adjacency(std::span<const PeriodicEdge> edges);
  void trace_faces();

  Vec2 a1_, a2_;
  std::vector<Vec2> sites_;
  std::vector<std::vector<SiteRef>> adjacency_;
  std::vector<std::vector<SiteRef>> faces_;
  std::vector<std::vector<SiteRef>> wedge_;
};

}  // namespace happy
