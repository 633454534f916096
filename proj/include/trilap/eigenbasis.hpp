#pragma once

#include <vector>

#include "trilap/geometry.hpp"

namespace trilap {

/// The three eigenfunction families.
///   SquareAntisym: Dirichlet eigenfunctions of the 45-90-45 triangle,
///     obtained from the square's sine basis by odd reflection across the
///     hypotenuse. Canonical indices 0 < m < n.
///   EquiAntisym: eigenfunctions of the hemiequilateral triangle with
///     Dirichlet data on all three edges (equivalently, the odd-about-x=0
///     eigenfunctions of the equilateral triangle). Canonical indices
///     0 < m < n, m and n of equal parity.
///   EquiSym: the even-about-x=0 companions, Neumann on the leg x = 0.
///     Canonical indices 0 <= m < n, equal parity.
enum class Family { SquareAntisym, EquiAntisym, EquiSym };

/// A canonical basis label. Construct through make_index, which validates.
struct EigenIndex {
  Family family = Family::SquareAntisym;
  int m = 0;
  int n = 0;
  friend bool operator==(const EigenIndex&, const EigenIndex&) = default;
};

/// Lexicographic order by (family, m, n); used for table iteration.
struct IndexLess {
  bool operator()(const EigenIndex& a, const EigenIndex& b) const {
    if (a.family != b.family) return a.family < b.family;
    if (a.m != b.m) return a.m < b.m;
    return a.n < b.n;
  }
};

bool is_canonical(Family family, int m, int n);

/// Validating constructor; throws std::invalid_argument if (m, n) is not a
/// canonical label for the family.
EigenIndex make_index(Family family, int m, int n);

/// Relation of an arbitrary lattice point (M, N) to the canonical index set:
/// each lattice point either is canonical, vanishes identically, or equals a
/// fixed sign times a canonical basis function.
struct IndexClass {
  enum class Kind { Canonical, FoldsTo, Zero };
  Kind kind = Kind::Zero;
  EigenIndex target;  ///< meaningful only when kind == FoldsTo
  int sign = 0;       ///< +-1 when kind == FoldsTo, else 0
};

/// Classifies lattice point (M, N). Preconditions: N >= 1 and M >= 0
/// (M >= 1 for SquareAntisym); throws std::invalid_argument otherwise.
IndexClass classify_lattice_point(Family family, int M, int N);

/// Coefficient multiplicity of a lattice point: 2 on the EquiSym line M = 3N
/// (where two folded images coincide), 1 everywhere else.
int lattice_weight(Family family, int M, int N);

/// All canonical indices with n <= band, ordered lexicographically by (m, n).
/// The overload with n_cap decouples the cap on n from the band (the default,
/// n <= band, is used everywhere in this project).
std::vector<EigenIndex> enumerate_indices(Family family, int band);
std::vector<EigenIndex> enumerate_indices(Family family, int band, int n_cap);

/// Rectangle cover and fundamental triangle backing a family.
TilingKind family_tiling(Family family);
TriangleKind family_triangle(Family family);
ProlongationKind family_prolongation(Family family);

/// Closed-form evaluation of the canonical basis function; globally defined
/// (the closed forms are trigonometric polynomials on the whole plane).
double eval_closed(const EigenIndex& idx, const Point2& p);

/// The same closed form evaluated at an arbitrary lattice point (M, N),
/// canonical or not. For the Equi families M and N must have equal parity
/// (the formula's half-integer exponents are undefined otherwise).
double eval_lattice(Family family, int M, int N, const Point2& p);

/// Defining reflection sum: the signed sum of the lattice wave over all tiles
/// of the family's tiling, evaluated at a point of the fundamental tile.
/// Accepts any lattice (M, N) with N >= 1, M >= 0. Agrees with eval_lattice
/// wherever both are defined.
double eval_by_reflection(Family family, int M, int N, const Point2& p);

/// Dirichlet eigenvalue: pi^2 (m^2 + n^2) for SquareAntisym,
/// pi^2 (m^2/3 + n^2) for the Equi families.
double eigenvalue(const EigenIndex& idx);
double eigenvalue_lattice(Family family, int M, int N);

/// Squared L^2 norm over the fundamental triangle: 1/4 (SquareAntisym),
/// sqrt3/2 (Equi families, m > 0), sqrt3 (EquiSym, m = 0).
double basis_norm_sq(const EigenIndex& idx);

enum class LatticeBasis { SineSine, CosineSine };

/// Exact finite expansion of a canonical basis function over the rectangle
/// lattice basis (sin sin, or cos sin for EquiSym). At most three entries;
/// coefficients lie in {+-1, +-2, +-4}.
struct LatticeExpansion {
  LatticeBasis basis = LatticeBasis::SineSine;
  struct Entry {
    int M = 0;
    int N = 0;
    double coeff = 0.0;
  };
  std::vector<Entry> entries;  ///< sorted by (M, N), coincident images merged
};

LatticeExpansion lattice_expansion(const EigenIndex& idx);

/// Value at p of the lattice wave sin(c M x) sin(pi N y) (or cos sin for
/// CosineSine), where c = pi for SquareAntisym and pi/sqrt3 otherwise.
double lattice_wave(Family family, int M, int N, const Point2& p);

}  // namespace trilap
