#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilap/eigenbasis.hpp"
#include "trilap/geometry.hpp"
#include "trilap/quadrature.hpp"

namespace trilap {

enum class Backend { Quadrature, Transform };

/// Truncated expansion coefficients of a function over one domain.
/// Entries iterate in (family, m, n) order. For the equilateral domain the
/// table holds both families: the odd part's coefficients over EquiAntisym
/// and the even part's over EquiSym.
struct CoefficientTable {
  TriangleKind domain = TriangleKind::Isosceles45;
  int band = 0;
  Backend backend = Backend::Quadrature;
  int order = 0;  ///< quadrature order actually used
  std::map<EigenIndex, double, IndexLess> entries;
};

/// Families a domain expands over by default. Each Equi family restricts to a
/// complete orthogonal system on the half-triangle, so the hemiequilateral
/// domain defaults to the all-Dirichlet family (EquiAntisym) alone and a
/// request naming both families there is rejected; over the equilateral
/// triangle the two families combine into one orthogonal system.
std::vector<Family> families_for(TriangleKind domain);

/// Thrown when the folded-transform consistency check fails; exit code 3 at
/// the command line.
struct ChecksumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Direct backend: coefficient = <f, basis> / ||basis||^2, integrated over
/// the triangle with a collapsed-square rule (order <= 0 selects
/// max(32, 3 * band)). Over the equilateral triangle the mirror symmetry of
/// the composite rule performs the odd/even split implicitly.
CoefficientTable analyze_quadrature(const RealFn& f, TriangleKind domain,
                                    const std::vector<Family>& families, int band,
                                    int order = 0);

/// Rectangle stage of the folded-transform backend: product sine/cosine
/// coefficients of the prolongation of f over the cover rectangle.
/// c(M, N) holds lattice point (M, N); row 0 is used only by the cosine
/// basis. The prolongation is sampled tile by tile (the fundamental rule
/// mapped through each tile's placement), which keeps the integrand smooth
/// on every tile even when the prolongation jumps across tile edges.
struct RectangleCoefficients {
  Family family = Family::SquareAntisym;
  int band = 0;
  Eigen::MatrixXd c;  ///< (band+1) x (band+1); column 0 unused
};

RectangleCoefficients rectangle_coefficients(const RealFn& f_on_triangle, Family family,
                                             int band, int order);

/// Partial sum of the rectangle lattice block at p.
double rectangle_sum(const RectangleCoefficients& rc, const Point2& p);

/// Folded-transform backend: computes the rectangle coefficients on a
/// per-tile Gauss grid of the given order (order <= 0 selects
/// max(48, 4 * band); values below 4 * band are rejected), reads canonical
/// entries off the lattice, and uses every redundant folded copy as a
/// consistency check. A copy deviating from sign * weight * canonical by
/// more than checksum_tol (relative to the largest coefficient) raises
/// ChecksumError naming the offending lattice pair.
CoefficientTable analyze_folded_transform(const RealFn& f, TriangleKind domain,
                                          const std::vector<Family>& families, int band,
                                          int order = 0, double checksum_tol = 1e-6);

/// Partial-sum evaluation. The point overload rejects points outside the
/// table's domain; the matrix overload evaluates rows of quadrature nodes
/// without re-validation.
double synthesize(const CoefficientTable& table, const Point2& p);
Eigen::VectorXd synthesize(const CoefficientTable& table,
                           const Eigen::Matrix<double, Eigen::Dynamic, 2>& points);

/// Max over sample points of | prolong(S_band f) - rectangle partial sum of
/// the prolongation's coefficients |. Zero in exact arithmetic: truncation
/// by label commutes with prolongation. For the equilateral domain the
/// family selects the odd (EquiAntisym) or even (EquiSym) part of f.
double commuting_deviation(const RealFn& f, TriangleKind domain, Family family, int band,
                           int sample_count, std::uint64_t seed, int tri_order = 0,
                           int rect_order = 0);

struct ConvergenceRow {
  std::string function;  ///< label, ":antisym" / ":sym" suffix for the parts
  double p = 0.0;
  int band = 0;
  double error = 0.0;    ///< || S_band f - f ||_p over the domain
  double seconds = 0.0;  ///< wall time of that band's analysis + synthesis
};

struct ConvergenceReport {
  Backend backend = Backend::Quadrature;
  std::vector<ConvergenceRow> rows;  ///< grouped per series, band ascending
};

/// Truncation error study over the given bands and exponents. Error norms
/// use a rule of order max(32, 2 * max(band)). When the equilateral domain
/// expands over both families, the odd/even parts are reported separately
/// (over the half-triangle) in addition to the total.
ConvergenceReport convergence_study(const RealFn& f, const std::string& label,
                                    TriangleKind domain, const std::vector<Family>& families,
                                    const std::vector<double>& ps, const std::vector<int>& bands,
                                    Backend backend, int order = 0);

/// Both sides of the prolongation norm identity
///   || P u ||_p(cover) = (#tiles)^(1/p) || u ||_p(triangle),
/// each computed by quadrature. first = left side, second = right side.
std::pair<double, double> norm_relation_check(const RealFn& u, ProlongationKind kind,
                                              double p, int order = 48);

/// || f ||_2^2 - sum of entry^2 * ||basis||^2 over the table (with the
/// doubling factor on the equilateral domain, where each family's norm is
/// taken over the half-triangle). Non-negative up to quadrature error and
/// decreasing in the band.
double parseval_residual(const RealFn& f, const CoefficientTable& table, int order = 0);

}  // namespace trilap
