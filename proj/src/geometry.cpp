#include "trilap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <set>
#include <stdexcept>
#include <utility>

namespace trilap {
namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Reflection across the line through a and b as a rigid map.
Isometry reflection_across(const Point2& a, const Point2& b) {
  const Eigen::Vector2d d = (b - a).normalized();
  Eigen::Matrix2d m;
  m << 2 * d.x() * d.x() - 1, 2 * d.x() * d.y(),  //
      2 * d.x() * d.y(), 2 * d.y() * d.y() - 1;
  Isometry iso = Isometry::Identity();
  iso.linear() = m;
  iso.translation() = a - m * a;
  return iso;
}

// Whether fundamental edge e (from vertex e to vertex e+1) carries a
// Dirichlet condition under the given tiling's prolongations. The Prager
// tiling keeps its y-axis edge as the even (Neumann) symmetry axis.
bool edge_is_dirichlet(TilingKind kind, int edge) {
  if (kind == TilingKind::Square) return true;
  return edge != 2;
}

std::array<long long, 6> tile_key(const std::array<Point2, 3>& vertices) {
  std::array<std::array<long long, 2>, 3> q;
  for (int i = 0; i < 3; ++i)
    q[i] = {std::llround(vertices[i].x() * 1e9), std::llround(vertices[i].y() * 1e9)};
  std::sort(q.begin(), q.end());
  return {q[0][0], q[0][1], q[1][0], q[1][1], q[2][0], q[2][1]};
}

bool inside_cover(const std::array<Point2, 3>& vertices, const Eigen::Vector2d& cover) {
  constexpr double tol = 1e-9;
  for (const Point2& v : vertices)
    if (v.x() < -tol || v.x() > cover.x() + tol || v.y() < -tol || v.y() > cover.y() + tol)
      return false;
  return true;
}

struct Builder {
  Tiling tiling;
  std::set<std::array<long long, 6>> seen;
  int next_id = 1;

  // Reflects `tile` across its edge `e`, keeping the vertex correspondence so
  // that edge e of any tile is always an image of fundamental edge e.
  Tile reflect_child(const Tile& tile, int e) const {
    const Isometry refl = reflection_across(tile.vertices[e], tile.vertices[(e + 1) % 3]);
    Tile child;
    for (int i = 0; i < 3; ++i) child.vertices[i] = refl * tile.vertices[i];
    child.to_fundamental = tile.to_fundamental * refl;
    child.reflection_count = tile.reflection_count + 1;
    child.crossings_dirichlet = tile.crossings_dirichlet;
    child.crossings_neumann = tile.crossings_neumann;
    if (edge_is_dirichlet(tiling.kind, e))
      ++child.crossings_dirichlet;
    else
      ++child.crossings_neumann;
    return child;
  }

  // Preorder traversal. Candidates are claimed (deduplicated) as soon as a
  // tile generates them but numbered only when visited, so numbering follows
  // the depth-first visit order while each tile is reached along the shortest
  // generation chain encountered first.
  void visit(const Tile& tile) {
    std::vector<Tile> children;
    for (int e = 0; e < 3; ++e) {
      Tile child = reflect_child(tile, e);
      if (!inside_cover(child.vertices, tiling.cover)) continue;
      if (!seen.insert(tile_key(child.vertices)).second) continue;
      children.push_back(std::move(child));
    }
    std::sort(children.begin(), children.end(), [](const Tile& a, const Tile& b) {
      Point2 ca = (a.vertices[0] + a.vertices[1] + a.vertices[2]) / 3.0;
      Point2 cb = (b.vertices[0] + b.vertices[1] + b.vertices[2]) / 3.0;
      if (ca.y() != cb.y()) return ca.y() < cb.y();
      return ca.x() < cb.x();
    });
    for (Tile& child : children) {
      child.id = ++next_id;
      tiling.tiles.push_back(child);
      visit(tiling.tiles.back());
    }
  }
};

}  // namespace

double TriangleDomain::area() const {
  const Eigen::Vector2d e1 = vertices[1] - vertices[0];
  const Eigen::Vector2d e2 = vertices[2] - vertices[0];
  return 0.5 * std::abs(e1.x() * e2.y() - e1.y() * e2.x());
}

TriangleDomain reference_triangle(TriangleKind kind) {
  TriangleDomain tri;
  tri.kind = kind;
  switch (kind) {
    case TriangleKind::Isosceles45:
      tri.vertices = {Point2(0, 0), Point2(1, 0), Point2(0, 1)};
      break;
    case TriangleKind::Hemiequilateral:
      tri.vertices = {Point2(0, 0), Point2(1 / kSqrt3, 0), Point2(0, 1)};
      break;
    case TriangleKind::Equilateral:
      tri.vertices = {Point2(-1 / kSqrt3, 0), Point2(1 / kSqrt3, 0), Point2(0, 1)};
      break;
  }
  return tri;
}

Containment contains(const TriangleDomain& tri, const Point2& p, double tol) {
  if (!p.allFinite()) throw std::invalid_argument("contains: non-finite point");
  double min_dist = std::numeric_limits<double>::max();
  for (int e = 0; e < 3; ++e) {
    const Point2& a = tri.vertices[e];
    const Point2& b = tri.vertices[(e + 1) % 3];
    const Eigen::Vector2d d = b - a;
    const double dist = (d.x() * (p.y() - a.y()) - d.y() * (p.x() - a.x())) / d.norm();
    min_dist = std::min(min_dist, dist);
  }
  if (min_dist > tol) return Containment::Interior;
  if (min_dist < -tol) return Containment::Exterior;
  return Containment::Boundary;
}

Tiling build_tiling(TilingKind kind) {
  Builder builder;
  builder.tiling.kind = kind;
  builder.tiling.fundamental = reference_triangle(
      kind == TilingKind::Square ? TriangleKind::Isosceles45 : TriangleKind::Hemiequilateral);
  builder.tiling.cover =
      kind == TilingKind::Square ? Eigen::Vector2d(1, 1) : Eigen::Vector2d(kSqrt3, 1);

  builder.tiling.tiles.reserve(8);  // keeps references stable while recursing
  Tile root;
  root.id = 1;
  root.vertices = builder.tiling.fundamental.vertices;
  root.to_fundamental = Isometry::Identity();
  builder.seen.insert(tile_key(root.vertices));
  builder.tiling.tiles.push_back(root);
  builder.visit(builder.tiling.tiles.front());
  return std::move(builder.tiling);
}

const Tiling& cached_tiling(TilingKind kind) {
  static const Tiling square = build_tiling(TilingKind::Square);
  static const Tiling prager = build_tiling(TilingKind::Prager);
  return kind == TilingKind::Square ? square : prager;
}

FoldResult fold_to_fundamental(const Tiling& t, const Point2& p, double tol) {
  if (!p.allFinite()) throw std::invalid_argument("fold_to_fundamental: non-finite point");
  if (p.x() < -tol || p.x() > t.cover.x() + tol || p.y() < -tol || p.y() > t.cover.y() + tol)
    throw std::domain_error("fold_to_fundamental: point lies outside the cover rectangle");
  // Tiles partition the cover, so an id-order scan both finds the container
  // and resolves shared-edge ties toward the lowest id.
  for (const Tile& tile : t.tiles) {
    const Point2 q = tile.to_fundamental * p;
    if (contains(t.fundamental, q, tol) != Containment::Exterior) return {tile.id, q};
  }
  // Numerical safety net: accept the least-exterior tile if it is exterior by
  // a rounding-level margin only.
  int best_id = 0;
  Point2 best_q;
  double best = -std::numeric_limits<double>::max();
  for (const Tile& tile : t.tiles) {
    const Point2 q = tile.to_fundamental * p;
    double min_dist = std::numeric_limits<double>::max();
    for (int e = 0; e < 3; ++e) {
      const Point2& a = t.fundamental.vertices[e];
      const Point2& b = t.fundamental.vertices[(e + 1) % 3];
      const Eigen::Vector2d d = b - a;
      min_dist = std::min(min_dist, (d.x() * (q.y() - a.y()) - d.y() * (q.x() - a.x())) / d.norm());
    }
    if (min_dist > best) {
      best = min_dist;
      best_id = tile.id;
      best_q = q;
    }
  }
  if (best > -1e-9) return {best_id, best_q};
  throw std::domain_error("fold_to_fundamental: point lies outside the cover rectangle");
}

double prolong_sign(const Tiling& t, ProlongationKind kind, int tile_id) {
  const bool square_kind = kind == ProlongationKind::SquareOdd;
  if (square_kind != (t.kind == TilingKind::Square))
    throw std::invalid_argument("prolong_sign: prolongation kind does not match the tiling");
  if (tile_id < 1 || tile_id > static_cast<int>(t.tiles.size()))
    throw std::out_of_range("prolong_sign: tile id out of range");
  const Tile& tile = t.tiles[tile_id - 1];
  const int flips =
      kind == ProlongationKind::Sym ? tile.crossings_dirichlet : tile.reflection_count;
  return flips % 2 == 0 ? 1.0 : -1.0;
}

MirrorSplit mirror_split(RealFn f) {
  auto shared = std::make_shared<RealFn>(std::move(f));
  MirrorSplit split;
  split.odd = [shared](const Point2& p) {
    return 0.5 * ((*shared)(p) - (*shared)(Point2(-p.x(), p.y())));
  };
  split.even = [shared](const Point2& p) {
    return 0.5 * ((*shared)(p) + (*shared)(Point2(-p.x(), p.y())));
  };
  return split;
}

}  // namespace trilap
