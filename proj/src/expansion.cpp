#include "trilap/expansion.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "trilap/parallel.hpp"

namespace trilap {
namespace {

constexpr double kPi = std::numbers::pi;

bool family_matches_domain(Family family, TriangleKind domain) {
  const bool square_side = family == Family::SquareAntisym;
  return square_side == (domain == TriangleKind::Isosceles45);
}

void validate_request(TriangleKind domain, const std::vector<Family>& families, int band) {
  if (band < 1) throw std::invalid_argument("analyze: band must be >= 1");
  if (families.empty()) throw std::invalid_argument("analyze: no families requested");
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (!family_matches_domain(families[i], domain))
      throw std::invalid_argument("analyze: family does not act on the requested domain");
    for (std::size_t j = 0; j < i; ++j)
      if (families[i] == families[j])
        throw std::invalid_argument("analyze: family listed twice");
  }
  if (domain == TriangleKind::Hemiequilateral && families.size() > 1)
    throw std::invalid_argument(
        "analyze: each family is separately complete on the half-triangle; pick one");
}

// Gauss error for frequency-band*pi integrands turns superexponential only
// past ~2.2 points per band unit; 2*band leaves ~1e-7 in the top coefficients
// (measured at band 16), 3*band reaches rounding level.
int quadrature_default_order(int band) { return std::max(32, 3 * band); }
int transform_default_order(int band) { return std::max(48, 4 * band); }

// Normalization of <f, basis> on this domain: over the equilateral triangle
// every basis function carries twice its half-triangle norm.
double norm_factor(TriangleKind domain) {
  return domain == TriangleKind::Equilateral ? 2.0 : 1.0;
}

double partial_sum(const CoefficientTable& table, const Point2& p) {
  double sum = 0.0;
  for (const auto& [idx, coeff] : table.entries) sum += coeff * eval_closed(idx, p);
  return sum;
}

// Lattice block wide enough to contain every folded copy of every canonical
// label with n <= band.
int block_band(Family family, int band) {
  return family == Family::SquareAntisym ? band : 2 * band;
}

}  // namespace

std::vector<Family> families_for(TriangleKind domain) {
  switch (domain) {
    case TriangleKind::Isosceles45: return {Family::SquareAntisym};
    case TriangleKind::Hemiequilateral: return {Family::EquiAntisym};
    case TriangleKind::Equilateral: return {Family::EquiAntisym, Family::EquiSym};
  }
  throw std::invalid_argument("families_for: bad domain");
}

CoefficientTable analyze_quadrature(const RealFn& f, TriangleKind domain,
                                    const std::vector<Family>& families, int band, int order) {
  validate_request(domain, families, band);
  if (order <= 0) order = quadrature_default_order(band);
  const QuadratureRule rule = triangle_rule(domain, order);
  const Eigen::VectorXd fv = sample(f, rule);
  const double factor = norm_factor(domain);

  CoefficientTable table;
  table.domain = domain;
  table.band = band;
  table.backend = Backend::Quadrature;
  table.order = order;

  std::vector<EigenIndex> indices;
  for (Family family : families) {
    const std::vector<EigenIndex> part = enumerate_indices(family, band);
    indices.insert(indices.end(), part.begin(), part.end());
  }
  std::vector<double> coeffs(indices.size());
  parallel_for(static_cast<std::ptrdiff_t>(indices.size()), [&](std::ptrdiff_t k) {
    const EigenIndex idx = indices[static_cast<std::size_t>(k)];
    const Eigen::VectorXd bv = sample([&](const Point2& p) { return eval_closed(idx, p); }, rule);
    const double ip = (rule.weights.array() * fv.array() * bv.array()).sum();
    coeffs[static_cast<std::size_t>(k)] = ip / (factor * basis_norm_sq(idx));
  });
  for (std::size_t k = 0; k < indices.size(); ++k) table.entries[indices[k]] = coeffs[k];
  return table;
}

RectangleCoefficients rectangle_coefficients(const RealFn& f_on_triangle, Family family,
                                             int band, int order) {
  if (band < 1) throw std::invalid_argument("rectangle_coefficients: band must be >= 1");
  const Tiling& tiling = cached_tiling(family_tiling(family));
  const ProlongationKind kind = family_prolongation(family);
  const QuadratureRule base = triangle_rule(tiling.fundamental.kind, order);
  const Eigen::VectorXd fv = sample(f_on_triangle, base);

  const QuadratureRule cover = cover_rule(tiling, order);
  const Eigen::Index per_tile = base.nodes.rows();
  Eigen::VectorXd pf(cover.nodes.rows());
  for (std::size_t t = 0; t < tiling.tiles.size(); ++t) {
    const double sign = prolong_sign(tiling, kind, tiling.tiles[t].id);
    pf.segment(static_cast<Eigen::Index>(t) * per_tile, per_tile) = sign * fv;
  }

  const double lx = tiling.cover.x();
  const double ly = tiling.cover.y();
  const bool cosine = family == Family::EquiSym;
  const double cx = family == Family::SquareAntisym ? kPi : kPi / lx;

  Eigen::MatrixXd sx(cover.nodes.rows(), band + 1);
  Eigen::MatrixXd sy(cover.nodes.rows(), band + 1);
  parallel_for(cover.nodes.rows(), [&](std::ptrdiff_t i) {
    for (int k = 0; k <= band; ++k) {
      const double ax = cx * k * cover.nodes(i, 0);
      sx(i, k) = cosine ? std::cos(ax) : std::sin(ax);
      sy(i, k) = std::sin(kPi * k * cover.nodes(i, 1));
    }
  });

  RectangleCoefficients rc;
  rc.family = family;
  rc.band = band;
  rc.c = sx.transpose() * (cover.weights.cwiseProduct(pf)).asDiagonal() * sy;
  rc.c *= 4.0 / (lx * ly);
  if (cosine) rc.c.row(0) *= 0.5;
  return rc;
}

double rectangle_sum(const RectangleCoefficients& rc, const Point2& p) {
  const Tiling& tiling = cached_tiling(family_tiling(rc.family));
  const bool cosine = rc.family == Family::EquiSym;
  const double cx = rc.family == Family::SquareAntisym ? kPi : kPi / tiling.cover.x();
  Eigen::VectorXd vx(rc.band + 1), vy(rc.band + 1);
  for (int k = 0; k <= rc.band; ++k) {
    const double ax = cx * k * p.x();
    vx[k] = cosine ? std::cos(ax) : std::sin(ax);
    vy[k] = std::sin(kPi * k * p.y());
  }
  return vx.dot(rc.c * vy);
}

CoefficientTable analyze_folded_transform(const RealFn& f, TriangleKind domain,
                                          const std::vector<Family>& families, int band,
                                          int order, double checksum_tol) {
  validate_request(domain, families, band);
  if (order <= 0)
    order = transform_default_order(band);
  else if (order < 4 * band)
    throw std::invalid_argument(
        "analyze_folded_transform: order below 4 * band cannot resolve the lattice block");

  CoefficientTable table;
  table.domain = domain;
  table.band = band;
  table.backend = Backend::Transform;
  table.order = order;

  MirrorSplit split;
  if (domain == TriangleKind::Equilateral) split = mirror_split(f);

  for (Family family : families) {
    const RealFn* part = &f;
    if (domain == TriangleKind::Equilateral)
      part = family == Family::EquiSym ? &split.even : &split.odd;
    const double read_scale = family == Family::SquareAntisym ? 1.0 : 0.5;

    const RectangleCoefficients rc =
        rectangle_coefficients(*part, family, block_band(family, band), order);
    const double scale = std::max(1.0, rc.c.cwiseAbs().maxCoeff());
    const int m_min = family == Family::SquareAntisym ? 1 : 0;

    // Read canonical entries, then hold every redundant lattice copy (and
    // every identically-vanishing point) against them.
    for (int M = m_min; M <= rc.band; ++M) {
      for (int N = 1; N <= rc.band; ++N) {
        const IndexClass cls = classify_lattice_point(family, M, N);
        double expected = 0.0;
        if (cls.kind == IndexClass::Kind::Canonical) {
          if (cls.target.n <= band) table.entries[cls.target] = read_scale * rc.c(M, N);
          continue;
        }
        if (cls.kind == IndexClass::Kind::FoldsTo)
          expected = cls.sign * lattice_weight(family, M, N) * rc.c(cls.target.m, cls.target.n);
        const double dev = std::abs(rc.c(M, N) - expected);
        if (dev > checksum_tol * scale) {
          std::ostringstream msg;
          msg << "folded-transform checksum failed at lattice point (" << M << ", " << N
              << "): coefficient " << rc.c(M, N) << " vs expected " << expected
              << " (deviation " << dev << ", allowed " << checksum_tol * scale << ")";
          throw ChecksumError(msg.str());
        }
      }
    }
  }
  return table;
}

double synthesize(const CoefficientTable& table, const Point2& p) {
  if (contains(reference_triangle(table.domain), p) == Containment::Exterior)
    throw std::domain_error("synthesize: point lies outside the domain");
  return partial_sum(table, p);
}

Eigen::VectorXd synthesize(const CoefficientTable& table,
                           const Eigen::Matrix<double, Eigen::Dynamic, 2>& points) {
  Eigen::VectorXd out(points.rows());
  parallel_for(points.rows(), [&](std::ptrdiff_t i) {
    out[i] = partial_sum(table, Point2(points(i, 0), points(i, 1)));
  });
  return out;
}

double commuting_deviation(const RealFn& f, TriangleKind domain, Family family, int band,
                           int sample_count, std::uint64_t seed, int tri_order,
                           int rect_order) {
  validate_request(domain, {family}, band);
  if (sample_count < 1) throw std::invalid_argument("commuting_deviation: need sample points");
  if (tri_order <= 0) tri_order = quadrature_default_order(band);
  if (rect_order <= 0) rect_order = transform_default_order(band);

  const Tiling& tiling = cached_tiling(family_tiling(family));
  const ProlongationKind kind = family_prolongation(family);
  const TriangleKind tri = family_triangle(family);

  RealFn part = f;
  if (domain == TriangleKind::Equilateral) {
    MirrorSplit split = mirror_split(f);
    part = family == Family::EquiSym ? split.even : split.odd;
  }

  // Side A: expand over the triangle, truncate by label, then prolong.
  const CoefficientTable table = analyze_quadrature(part, tri, {family}, band, tri_order);

  // Side B: prolong first, then truncate the rectangle series to the lattice
  // block that folds onto the same labels.
  RectangleCoefficients rc =
      rectangle_coefficients(part, family, block_band(family, band), rect_order);
  for (int M = 0; M <= rc.band; ++M)
    for (int N = 0; N <= rc.band; ++N) {
      if (N < 1 || (M < 1 && family == Family::SquareAntisym)) {
        rc.c(M, N) = 0.0;
        continue;
      }
      const IndexClass cls = classify_lattice_point(family, M, N);
      const bool kept = cls.kind != IndexClass::Kind::Zero && cls.target.n <= band;
      if (!kept) rc.c(M, N) = 0.0;
    }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, tiling.cover.x());
  std::uniform_real_distribution<double> uy(0.0, tiling.cover.y());
  double dev = 0.0;
  for (int s = 0; s < sample_count; ++s) {
    const Point2 p(ux(rng), uy(rng));
    const double a = prolong_value(tiling, kind, [&](const Point2& q) { return partial_sum(table, q); }, p);
    const double b = rectangle_sum(rc, p);
    dev = std::max(dev, std::abs(a - b));
  }
  return dev;
}

ConvergenceReport convergence_study(const RealFn& f, const std::string& label,
                                    TriangleKind domain, const std::vector<Family>& families,
                                    const std::vector<double>& ps, const std::vector<int>& bands,
                                    Backend backend, int order) {
  if (bands.empty()) throw std::invalid_argument("convergence_study: no bands");
  if (ps.empty()) throw std::invalid_argument("convergence_study: no exponents");
  for (const double p : ps)
    if (!std::isfinite(p) || p <= 1.0)
      throw std::invalid_argument("p must lie in (1, infinity)");
  validate_request(domain, families, *std::max_element(bands.begin(), bands.end()));
  const int max_band = *std::max_element(bands.begin(), bands.end());
  const int norm_order = std::max(32, 2 * max_band);

  const QuadratureRule rule = triangle_rule(domain, norm_order);
  const Eigen::VectorXd fv = sample(f, rule);

  const bool split_parts = domain == TriangleKind::Equilateral && families.size() == 2;
  QuadratureRule half_rule;
  Eigen::VectorXd odd_v, even_v;
  MirrorSplit split;
  if (split_parts) {
    split = mirror_split(f);
    half_rule = triangle_rule(TriangleKind::Hemiequilateral, norm_order);
    odd_v = sample(split.odd, half_rule);
    even_v = sample(split.even, half_rule);
  }

  struct BandData {
    int band = 0;
    double seconds = 0.0;
    Eigen::VectorXd diff;       // S_band f - f on the domain rule
    Eigen::VectorXd diff_odd;   // odd part on the half-triangle rule
    Eigen::VectorXd diff_even;  // even part
  };
  std::vector<BandData> data;
  for (int band : bands) {
    BandData bd;
    bd.band = band;
    const auto t0 = std::chrono::steady_clock::now();
    const CoefficientTable table =
        backend == Backend::Quadrature
            ? analyze_quadrature(f, domain, families, band, order)
            : analyze_folded_transform(f, domain, families, band, order);
    bd.diff = synthesize(table, rule.nodes) - fv;
    if (split_parts) {
      CoefficientTable odd_table, even_table;
      odd_table.domain = even_table.domain = TriangleKind::Hemiequilateral;
      odd_table.band = even_table.band = band;
      for (const auto& [idx, coeff] : table.entries)
        (idx.family == Family::EquiSym ? even_table : odd_table).entries[idx] = coeff;
      bd.diff_odd = synthesize(odd_table, half_rule.nodes) - odd_v;
      bd.diff_even = synthesize(even_table, half_rule.nodes) - even_v;
    }
    const auto t1 = std::chrono::steady_clock::now();
    bd.seconds = std::chrono::duration<double>(t1 - t0).count();
    data.push_back(std::move(bd));
  }

  ConvergenceReport report;
  report.backend = backend;
  auto emit = [&](const std::string& name, const QuadratureRule& r,
                  const Eigen::VectorXd BandData::*member) {
    for (double p : ps)
      for (const BandData& bd : data)
        report.rows.push_back({name, p, bd.band, lp_norm_samples(r, bd.*member, p), bd.seconds});
  };
  emit(label, rule, &BandData::diff);
  if (split_parts) {
    emit(label + ":antisym", half_rule, &BandData::diff_odd);
    emit(label + ":sym", half_rule, &BandData::diff_even);
  }
  return report;
}

std::pair<double, double> norm_relation_check(const RealFn& u, ProlongationKind kind, double p,
                                              int order) {
  const Tiling& tiling = cached_tiling(
      kind == ProlongationKind::SquareOdd ? TilingKind::Square : TilingKind::Prager);
  const QuadratureRule tri = triangle_rule(tiling.fundamental.kind, order);
  const QuadratureRule cover = cover_rule(tiling, order);
  const double lhs = lp_norm([&](const Point2& q) { return prolong_value(tiling, kind, u, q); },
                             p, cover);
  const double rhs =
      std::pow(static_cast<double>(tiling.tiles.size()), 1.0 / p) * lp_norm(u, p, tri);
  return {lhs, rhs};
}

double parseval_residual(const RealFn& f, const CoefficientTable& table, int order) {
  if (order <= 0) order = quadrature_default_order(table.band);
  const QuadratureRule rule = triangle_rule(table.domain, order);
  const Eigen::VectorXd fv = sample(f, rule);
  const double norm_sq = (rule.weights.array() * fv.array().square()).sum();
  const double factor = norm_factor(table.domain);
  double sum = 0.0;
  for (const auto& [idx, coeff] : table.entries)
    sum += coeff * coeff * factor * basis_norm_sq(idx);
  return norm_sq - sum;
}

}  // namespace trilap
