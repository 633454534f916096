#include "trilap/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace trilap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = 1.7320508075688772;

int psign(int k) { return k % 2 == 0 ? 1 : -1; }

const char* family_tag(Family family) {
  switch (family) {
    case Family::SquareAntisym: return "square";
    case Family::EquiAntisym: return "antisym";
    case Family::EquiSym: return "sym";
  }
  return "?";
}

void validate_lattice_preconditions(Family family, int M, int N) {
  const int m_min = family == Family::SquareAntisym ? 1 : 0;
  if (N < 1 || M < m_min) {
    std::ostringstream msg;
    msg << "lattice point (" << M << ", " << N << ") out of range for family "
        << family_tag(family) << ": need N >= 1 and M >= " << m_min;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

bool is_canonical(Family family, int m, int n) {
  switch (family) {
    case Family::SquareAntisym:
      return 0 < m && m < n;
    case Family::EquiAntisym:
      return 0 < m && m < n && (n - m) % 2 == 0;
    case Family::EquiSym:
      return 0 <= m && m < n && (n - m) % 2 == 0;
  }
  return false;
}

EigenIndex make_index(Family family, int m, int n) {
  if (!is_canonical(family, m, n)) {
    std::ostringstream msg;
    msg << "(" << m << ", " << n << ") is not a canonical index of family " << family_tag(family);
    throw std::invalid_argument(msg.str());
  }
  return EigenIndex{family, m, n};
}

IndexClass classify_lattice_point(Family family, int M, int N) {
  validate_lattice_preconditions(family, M, N);
  IndexClass out;
  if (family == Family::SquareAntisym) {
    if (M == N) return out;  // Zero
    if (M < N) {
      out.kind = IndexClass::Kind::Canonical;
      out.target = EigenIndex{family, M, N};
      out.sign = 1;
      return out;
    }
    out.kind = IndexClass::Kind::FoldsTo;
    out.target = EigenIndex{family, N, M};
    out.sign = -psign(M + N);
    return out;
  }
  // Equi families. Mixed parity waves fold to zero, as do the fixed lines
  // M = N (both) and M = 0, M = 3N (antisymmetric only).
  if ((M - N) % 2 != 0) return out;
  if (M == N) return out;
  if (family == Family::EquiAntisym && (M == 0 || M == 3 * N)) return out;
  if (M < N) {
    out.kind = IndexClass::Kind::Canonical;
    out.target = EigenIndex{family, M, N};
    out.sign = 1;
    return out;
  }
  out.kind = IndexClass::Kind::FoldsTo;
  if (M == 3 * N) {  // EquiSym only: both folded images land on (0, 2N)
    out.target = EigenIndex{family, 0, 2 * N};
    out.sign = -psign(N);
    return out;
  }
  if (M < 3 * N) {
    const int mc = (3 * N - M) / 2;
    const int nc = (M + N) / 2;
    out.target = EigenIndex{family, mc, nc};
    out.sign = -psign((nc - mc) / 2);
    return out;
  }
  const int mc = (M - 3 * N) / 2;
  const int nc = (M + N) / 2;
  out.target = EigenIndex{family, mc, nc};
  out.sign = psign((mc + nc) / 2);
  if (family == Family::EquiSym) out.sign = -out.sign;
  return out;
}

int lattice_weight(Family family, int M, int N) {
  validate_lattice_preconditions(family, M, N);
  return family == Family::EquiSym && M == 3 * N ? 2 : 1;
}

std::vector<EigenIndex> enumerate_indices(Family family, int band) {
  return enumerate_indices(family, band, band);
}

std::vector<EigenIndex> enumerate_indices(Family family, int band, int n_cap) {
  std::vector<EigenIndex> out;
  for (int m = 0; m <= band; ++m)
    for (int n = m + 1; n <= n_cap; ++n)
      if (is_canonical(family, m, n)) out.push_back(EigenIndex{family, m, n});
  return out;
}

TilingKind family_tiling(Family family) {
  return family == Family::SquareAntisym ? TilingKind::Square : TilingKind::Prager;
}

TriangleKind family_triangle(Family family) {
  return family == Family::SquareAntisym ? TriangleKind::Isosceles45
                                         : TriangleKind::Hemiequilateral;
}

ProlongationKind family_prolongation(Family family) {
  switch (family) {
    case Family::SquareAntisym: return ProlongationKind::SquareOdd;
    case Family::EquiAntisym: return ProlongationKind::Antisym;
    case Family::EquiSym: return ProlongationKind::Sym;
  }
  throw std::invalid_argument("family_prolongation: bad family");
}

double eval_closed(const EigenIndex& idx, const Point2& p) {
  return eval_lattice(idx.family, idx.m, idx.n, p);
}

double eval_lattice(Family family, int M, int N, const Point2& p) {
  const double x = p.x();
  const double y = p.y();
  if (family == Family::SquareAntisym) {
    return std::sin(kPi * M * x) * std::sin(kPi * N * y) -
           psign(M + N) * std::sin(kPi * N * x) * std::sin(kPi * M * y);
  }
  if ((M - N) % 2 != 0)
    throw std::invalid_argument("eval_lattice: M and N must have equal parity");
  const double cx = kPi / kSqrt3;
  if (family == Family::EquiAntisym) {
    return 2 * std::sin(cx * M * x) * std::sin(kPi * N * y) -
           2 * psign((M + N) / 2) * std::sin(cx * (M + 3 * N) * x / 2) *
               std::sin(kPi * (M - N) * y / 2) +
           2 * psign((M - N) / 2) * std::sin(cx * (M - 3 * N) * x / 2) *
               std::sin(kPi * (M + N) * y / 2);
  }
  return 2 * std::cos(cx * M * x) * std::sin(kPi * N * y) +
         2 * psign((M + N) / 2) * std::cos(cx * (M + 3 * N) * x / 2) *
             std::sin(kPi * (M - N) * y / 2) -
         2 * psign((M - N) / 2) * std::cos(cx * (3 * N - M) * x / 2) *
             std::sin(kPi * (M + N) * y / 2);
}

double eval_by_reflection(Family family, int M, int N, const Point2& p) {
  validate_lattice_preconditions(family, M, N);
  const Tiling& tiling = cached_tiling(family_tiling(family));
  const ProlongationKind kind = family_prolongation(family);
  double sum = 0.0;
  for (const Tile& tile : tiling.tiles) {
    const Point2 q = tile.to_fundamental.inverse() * p;
    sum += prolong_sign(tiling, kind, tile.id) * lattice_wave(family, M, N, q);
  }
  return sum;
}

double eigenvalue(const EigenIndex& idx) {
  return eigenvalue_lattice(idx.family, idx.m, idx.n);
}

double eigenvalue_lattice(Family family, int M, int N) {
  const double m2 = static_cast<double>(M) * M;
  const double n2 = static_cast<double>(N) * N;
  if (family == Family::SquareAntisym) return kPi * kPi * (m2 + n2);
  return kPi * kPi * (m2 / 3.0 + n2);
}

double basis_norm_sq(const EigenIndex& idx) {
  if (idx.family == Family::SquareAntisym) return 0.25;
  if (idx.family == Family::EquiSym && idx.m == 0) return kSqrt3;
  return kSqrt3 / 2.0;
}

LatticeExpansion lattice_expansion(const EigenIndex& idx) {
  if (!is_canonical(idx.family, idx.m, idx.n))
    throw std::invalid_argument("lattice_expansion: index is not canonical");
  const int m = idx.m;
  const int n = idx.n;
  LatticeExpansion exp;
  std::vector<LatticeExpansion::Entry> raw;
  if (idx.family == Family::SquareAntisym) {
    exp.basis = LatticeBasis::SineSine;
    raw.push_back({m, n, 1.0});
    raw.push_back({n, m, static_cast<double>(-psign(m + n))});
  } else {
    const bool sym = idx.family == Family::EquiSym;
    exp.basis = sym ? LatticeBasis::CosineSine : LatticeBasis::SineSine;
    raw.push_back({m, n, 2.0});
    raw.push_back({(3 * n - m) / 2, (m + n) / 2, -2.0 * psign((n - m) / 2)});
    const double third = 2.0 * psign((m + n) / 2);
    raw.push_back({(m + 3 * n) / 2, (n - m) / 2, sym ? -third : third});
  }
  // Sort by (M, N) and merge coincident lattice points (EquiSym with m = 0
  // sends both reflected images to the same point).
  std::sort(raw.begin(), raw.end(),
            [](const LatticeExpansion::Entry& a, const LatticeExpansion::Entry& b) {
              if (a.M != b.M) return a.M < b.M;
              return a.N < b.N;
            });
  for (const auto& entry : raw) {
    if (!exp.entries.empty() && exp.entries.back().M == entry.M &&
        exp.entries.back().N == entry.N) {
      exp.entries.back().coeff += entry.coeff;
    } else {
      exp.entries.push_back(entry);
    }
  }
  return exp;
}

double lattice_wave(Family family, int M, int N, const Point2& p) {
  if (family == Family::SquareAntisym)
    return std::sin(kPi * M * p.x()) * std::sin(kPi * N * p.y());
  const double ax = kPi / kSqrt3 * M * p.x();
  const double sy = std::sin(kPi * N * p.y());
  return family == Family::EquiSym ? std::cos(ax) * sy : std::sin(ax) * sy;
}

}  // namespace trilap
