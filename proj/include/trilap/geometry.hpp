#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <array>
#include <functional>
#include <vector>

namespace trilap {

using Point2 = Eigen::Vector2d;
using Isometry = Eigen::Transform<double, 2, Eigen::Isometry>;
using RealFn = std::function<double(const Point2&)>;

/// The three triangle shapes handled by the library, in the fixed reference
/// placement used everywhere:
///   Isosceles45      (0,0), (1,0), (0,1)            legs on the axes
///   Hemiequilateral  (0,0), (1/sqrt3,0), (0,1)      right angle at origin
///   Equilateral      (-1/sqrt3,0), (1/sqrt3,0), (0,1)  apex on the y-axis
enum class TriangleKind { Isosceles45, Hemiequilateral, Equilateral };

enum class Containment { Interior, Boundary, Exterior };

/// Reflection tilings of a rectangle by congruent copies of a triangle:
/// Square covers [0,1]^2 with two Isosceles45 halves; Prager covers
/// [0,sqrt3]x[0,1] with six hemiequilateral tiles.
enum class TilingKind { Square, Prager };

/// How a function on the fundamental tile extends to the whole cover:
/// SquareOdd flips sign on every reflection (Square tiling); Antisym does the
/// same on the Prager tiling; Sym flips sign only when crossing images of the
/// two outer (Dirichlet) edges and extends evenly across images of the
/// symmetry axis x = 0.
enum class ProlongationKind { SquareOdd, Antisym, Sym };

struct TriangleDomain {
  TriangleKind kind;
  std::array<Point2, 3> vertices;  ///< counter-clockwise
  double area() const;
};

TriangleDomain reference_triangle(TriangleKind kind);

/// Classifies p against the closed triangle; |signed distance| <= tol counts
/// as Boundary. Throws std::invalid_argument for non-finite input.
Containment contains(const TriangleDomain& tri, const Point2& p, double tol = 1e-12);

struct Tile {
  int id = 0;                      ///< 1-based; tile 1 is the fundamental tile
  std::array<Point2, 3> vertices;  ///< images of the fundamental vertices
  Isometry to_fundamental;         ///< maps points of this tile onto tile 1
  int reflection_count = 0;        ///< reflections along the generation chain
  int crossings_dirichlet = 0;     ///< crossings of Dirichlet-edge images
  int crossings_neumann = 0;       ///< crossings of Neumann-edge images
};

struct Tiling {
  TilingKind kind;
  TriangleDomain fundamental;
  Eigen::Vector2d cover;  ///< rectangle [0, cover.x()] x [0, cover.y()]
  std::vector<Tile> tiles;
};

/// Generates the tiling by repeatedly reflecting tile 1 across tile edges,
/// discarding images that leave the cover rectangle. Traversal order (and
/// hence tile numbering) is deterministic: children of a tile are visited
/// sorted by centroid (y, then x).
Tiling build_tiling(TilingKind kind);

/// Shared, immutable tiling instances (built once per process).
const Tiling& cached_tiling(TilingKind kind);

struct FoldResult {
  int tile_id = 0;
  Point2 preimage;  ///< corresponding point of the fundamental tile
};

/// Locates the tile containing p (ties on shared edges resolved toward the
/// lowest tile id) and maps p back onto the fundamental tile. Throws
/// std::domain_error if p lies outside the cover rectangle by more than tol.
FoldResult fold_to_fundamental(const Tiling& t, const Point2& p, double tol = 1e-12);

/// Sign carried by the given tile under the given prolongation:
/// (-1)^reflection_count for SquareOdd/Antisym, (-1)^crossings_dirichlet for
/// Sym. Throws std::invalid_argument if the kind does not match the tiling.
double prolong_sign(const Tiling& t, ProlongationKind kind, int tile_id);

/// Value at p of the prolongation of f (defined on the fundamental tile) to
/// the cover rectangle.
template <class F>
double prolong_value(const Tiling& t, ProlongationKind kind, F&& f, const Point2& p) {
  const FoldResult r = fold_to_fundamental(t, p);
  return prolong_sign(t, kind, r.tile_id) * f(r.preimage);
}

struct MirrorSplit {
  RealFn odd;   ///< (f(x,y) - f(-x,y)) / 2
  RealFn even;  ///< (f(x,y) + f(-x,y)) / 2
};

/// Splits a function on the equilateral triangle into its odd and even parts
/// about the symmetry axis x = 0. The parts sum to f wherever f is defined.
MirrorSplit mirror_split(RealFn f);

}  // namespace trilap
