#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "trilap/eigenbasis.hpp"

using namespace trilap;

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kSqrt3 = 1.7320508075688772;

std::vector<std::pair<int, int>> labels(const std::vector<EigenIndex>& v) {
  std::vector<std::pair<int, int>> out;
  for (const EigenIndex& idx : v) out.emplace_back(idx.m, idx.n);
  return out;
}

// Interior sample points of the hemiequilateral triangle.
const std::vector<Point2> kHemiPoints = {
    Point2(0.1, 0.2), Point2(0.3, 0.1), Point2(0.05, 0.7), Point2(0.25, 0.45)};

}  // namespace

TEST_SUITE("eigenbasis") {

TEST_CASE("canonical labels obey the family constraints") {
  CHECK(is_canonical(Family::SquareAntisym, 1, 2));
  CHECK(is_canonical(Family::SquareAntisym, 2, 5));
  CHECK_FALSE(is_canonical(Family::SquareAntisym, 0, 2));   // m must be positive
  CHECK_FALSE(is_canonical(Family::SquareAntisym, 2, 2));   // strict m < n
  CHECK_FALSE(is_canonical(Family::SquareAntisym, 3, 2));

  CHECK(is_canonical(Family::EquiAntisym, 1, 3));
  CHECK(is_canonical(Family::EquiAntisym, 2, 4));
  CHECK_FALSE(is_canonical(Family::EquiAntisym, 0, 2));     // m must be positive
  CHECK_FALSE(is_canonical(Family::EquiAntisym, 1, 2));     // parity must match
  CHECK_FALSE(is_canonical(Family::EquiAntisym, 3, 3));

  CHECK(is_canonical(Family::EquiSym, 0, 2));               // m = 0 allowed here
  CHECK(is_canonical(Family::EquiSym, 1, 3));
  CHECK_FALSE(is_canonical(Family::EquiSym, 0, 1));         // parity must match
  CHECK_FALSE(is_canonical(Family::EquiSym, 2, 2));

  CHECK_THROWS_AS(make_index(Family::SquareAntisym, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_index(Family::EquiAntisym, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_index(Family::EquiSym, 0, 1), std::invalid_argument);
  CHECK(make_index(Family::EquiSym, 0, 2).n == 2);
}

TEST_CASE("index enumeration is exact and ordered") {
  using P = std::pair<int, int>;
  CHECK(labels(enumerate_indices(Family::SquareAntisym, 4)) ==
        std::vector<P>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(labels(enumerate_indices(Family::EquiAntisym, 5)) ==
        std::vector<P>{{1, 3}, {1, 5}, {2, 4}, {3, 5}});
  CHECK(labels(enumerate_indices(Family::EquiSym, 4)) ==
        std::vector<P>{{0, 2}, {0, 4}, {1, 3}, {2, 4}});
  // Decoupled cap: m bounded by the band, n by the cap.
  CHECK(labels(enumerate_indices(Family::SquareAntisym, 2, 4)) ==
        std::vector<P>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(enumerate_indices(Family::SquareAntisym, 1).empty());
}

TEST_CASE("eigenvalues and norms match the closed formulas") {
  CHECK(eigenvalue(make_index(Family::SquareAntisym, 1, 2)) ==
        doctest::Approx(5 * kPi * kPi).epsilon(1e-15));
  CHECK(eigenvalue(make_index(Family::EquiAntisym, 1, 3)) ==
        doctest::Approx(28 * kPi * kPi / 3).epsilon(1e-15));
  // A folded lattice point shares the eigenvalue of its canonical target.
  CHECK(eigenvalue_lattice(Family::EquiAntisym, 4, 2) ==
        doctest::Approx(eigenvalue(make_index(Family::EquiAntisym, 1, 3))).epsilon(1e-15));

  CHECK(basis_norm_sq(make_index(Family::SquareAntisym, 1, 2)) == doctest::Approx(0.25));
  CHECK(basis_norm_sq(make_index(Family::EquiAntisym, 1, 3)) ==
        doctest::Approx(kSqrt3 / 2).epsilon(1e-15));
  CHECK(basis_norm_sq(make_index(Family::EquiSym, 1, 3)) ==
        doctest::Approx(kSqrt3 / 2).epsilon(1e-15));
  CHECK(basis_norm_sq(make_index(Family::EquiSym, 0, 2)) ==
        doctest::Approx(kSqrt3).epsilon(1e-15));  // the m = 0 line is heavier
}

TEST_CASE("closed forms hit pinned point values") {
  const double sqrt2 = std::sqrt(2.0);
  CHECK(eval_closed(make_index(Family::SquareAntisym, 1, 2), Point2(0.25, 0.25)) ==
        doctest::Approx(sqrt2).epsilon(1e-14));
  CHECK(eval_closed(make_index(Family::EquiSym, 0, 2), Point2(0.0, 0.25)) ==
        doctest::Approx(2 + 2 * sqrt2).epsilon(1e-14));
  // Independent closed form for the same function: 2 sin(2 pi y) + 4 cos(sqrt3 pi x) sin(pi y).
  for (const Point2& p : kHemiPoints) {
    const double direct =
        2 * std::sin(2 * kPi * p.y()) + 4 * std::cos(kSqrt3 * kPi * p.x()) * std::sin(kPi * p.y());
    CHECK(eval_closed(make_index(Family::EquiSym, 0, 2), p) ==
          doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("boundary conditions hold along the triangle edges") {
  const EigenIndex u13 = make_index(Family::EquiAntisym, 1, 3);
  const EigenIndex v02 = make_index(Family::EquiSym, 0, 2);
  for (int i = 1; i < 8; ++i) {
    const double t = i / 8.0;
    CAPTURE(t);
    // Hypotenuse from (1/sqrt3, 0) to (0, 1), and the two legs.
    const Point2 hyp((1 - t) / kSqrt3, t);
    CHECK(std::abs(eval_closed(u13, hyp)) < 1e-12);
    CHECK(std::abs(eval_closed(u13, Point2(t / kSqrt3, 0.0))) < 1e-12);
    CHECK(std::abs(eval_closed(u13, Point2(0.0, t))) < 1e-12);
    CHECK(std::abs(eval_closed(v02, hyp)) < 1e-12);
    CHECK(std::abs(eval_closed(v02, Point2(t / kSqrt3, 0.0))) < 1e-12);
    // The symmetric family is even across x = 0 (Neumann leg).
    CHECK(eval_closed(v02, Point2(1e-3, t)) ==
          doctest::Approx(eval_closed(v02, Point2(-1e-3, t))).epsilon(1e-13));
  }
}

TEST_CASE("lattice points classify into canonical, folded, and zero") {
  using K = IndexClass::Kind;
  const auto cls = [](Family f, int M, int N) { return classify_lattice_point(f, M, N); };

  CHECK(cls(Family::SquareAntisym, 1, 2).kind == K::Canonical);
  CHECK(cls(Family::SquareAntisym, 2, 2).kind == K::Zero);
  {
    const IndexClass c = cls(Family::SquareAntisym, 3, 2);
    CHECK(c.kind == K::FoldsTo);
    CHECK(c.target == make_index(Family::SquareAntisym, 2, 3));
    CHECK(c.sign == 1);
  }
  CHECK(cls(Family::SquareAntisym, 2, 1).sign == 1);
  CHECK(cls(Family::SquareAntisym, 4, 2).sign == -1);
  CHECK(cls(Family::SquareAntisym, 4, 2).target == make_index(Family::SquareAntisym, 2, 4));

  for (const auto& [M, N] : std::vector<std::pair<int, int>>{{0, 4}, {3, 1}, {2, 2}, {3, 2}})
    CHECK(cls(Family::EquiAntisym, M, N).kind == K::Zero);
  {
    const IndexClass c = cls(Family::EquiAntisym, 4, 2);
    CHECK(c.target == make_index(Family::EquiAntisym, 1, 3));
    CHECK(c.sign == 1);
  }
  {
    const IndexClass c = cls(Family::EquiAntisym, 5, 1);
    CHECK(c.target == make_index(Family::EquiAntisym, 1, 3));
    CHECK(c.sign == 1);
  }

  {
    const IndexClass c = cls(Family::EquiSym, 3, 1);  // the coincidence line M = 3N
    CHECK(c.target == make_index(Family::EquiSym, 0, 2));
    CHECK(c.sign == 1);
  }
  CHECK(cls(Family::EquiSym, 4, 2).sign == 1);
  CHECK(cls(Family::EquiSym, 4, 2).target == make_index(Family::EquiSym, 1, 3));
  CHECK(cls(Family::EquiSym, 5, 1).sign == -1);
  CHECK(cls(Family::EquiSym, 5, 1).target == make_index(Family::EquiSym, 1, 3));
  CHECK(cls(Family::EquiSym, 6, 2).sign == -1);
  CHECK(cls(Family::EquiSym, 6, 2).target == make_index(Family::EquiSym, 0, 4));

  CHECK_THROWS_AS(cls(Family::SquareAntisym, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(cls(Family::SquareAntisym, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(cls(Family::EquiAntisym, -1, 2), std::invalid_argument);

  CHECK(lattice_weight(Family::EquiSym, 3, 1) == 2);
  CHECK(lattice_weight(Family::EquiSym, 2, 4) == 1);
  CHECK(lattice_weight(Family::EquiAntisym, 3, 1) == 1);
  CHECK(lattice_weight(Family::SquareAntisym, 2, 1) == 1);
}

TEST_CASE("lattice expansions are the frozen finite tables") {
  const auto entry = [](const LatticeExpansion& e, std::size_t i) {
    REQUIRE(i < e.entries.size());
    return std::make_tuple(e.entries[i].M, e.entries[i].N, e.entries[i].coeff);
  };
  using T = std::tuple<int, int, double>;

  {
    const LatticeExpansion e = lattice_expansion(make_index(Family::SquareAntisym, 1, 2));
    CHECK(e.basis == LatticeBasis::SineSine);
    REQUIRE(e.entries.size() == 2);
    CHECK(entry(e, 0) == T{1, 2, 1.0});
    CHECK(entry(e, 1) == T{2, 1, 1.0});
  }
  {
    const LatticeExpansion e = lattice_expansion(make_index(Family::SquareAntisym, 1, 3));
    REQUIRE(e.entries.size() == 2);
    CHECK(entry(e, 0) == T{1, 3, 1.0});
    CHECK(entry(e, 1) == T{3, 1, -1.0});
  }
  {
    const LatticeExpansion e = lattice_expansion(make_index(Family::EquiAntisym, 1, 3));
    CHECK(e.basis == LatticeBasis::SineSine);
    REQUIRE(e.entries.size() == 3);
    CHECK(entry(e, 0) == T{1, 3, 2.0});
    CHECK(entry(e, 1) == T{4, 2, 2.0});
    CHECK(entry(e, 2) == T{5, 1, 2.0});
  }
  {
    const LatticeExpansion e = lattice_expansion(make_index(Family::EquiSym, 1, 3));
    CHECK(e.basis == LatticeBasis::CosineSine);
    REQUIRE(e.entries.size() == 3);
    CHECK(entry(e, 0) == T{1, 3, 2.0});
    CHECK(entry(e, 1) == T{4, 2, 2.0});
    CHECK(entry(e, 2) == T{5, 1, -2.0});
  }
  {
    // On the m = 0 line two folded images coincide and merge.
    const LatticeExpansion e = lattice_expansion(make_index(Family::EquiSym, 0, 2));
    REQUIRE(e.entries.size() == 2);
    CHECK(entry(e, 0) == T{0, 2, 2.0});
    CHECK(entry(e, 1) == T{3, 1, 4.0});
  }
}

TEST_CASE("lattice expansion reproduces the closed form pointwise") {
  const std::vector<EigenIndex> cases = {
      make_index(Family::SquareAntisym, 1, 2), make_index(Family::SquareAntisym, 2, 5),
      make_index(Family::EquiAntisym, 1, 3),   make_index(Family::EquiAntisym, 3, 5),
      make_index(Family::EquiSym, 0, 2),       make_index(Family::EquiSym, 2, 6)};
  for (const EigenIndex& idx : cases) {
    const LatticeExpansion e = lattice_expansion(idx);
    for (const Point2& p : kHemiPoints) {
      double sum = 0.0;
      for (const auto& t : e.entries) sum += t.coeff * lattice_wave(idx.family, t.M, t.N, p);
      CAPTURE(idx.m);
      CAPTURE(idx.n);
      CHECK(sum == doctest::Approx(eval_closed(idx, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("classification agrees with the expansion tables across the block") {
  // Every non-leading expansion entry must classify back to its source index
  // with coefficient sign * base * weight, and every folded lattice point must
  // satisfy the pointwise identity wave(M,N) = sign * closed(target).
  for (const Family family : {Family::SquareAntisym, Family::EquiAntisym, Family::EquiSym}) {
    const double base = (family == Family::SquareAntisym) ? 1.0 : 2.0;
    for (const EigenIndex& idx : enumerate_indices(family, 8)) {
      const LatticeExpansion e = lattice_expansion(idx);
      for (const auto& t : e.entries) {
        const IndexClass c = classify_lattice_point(family, t.M, t.N);
        CAPTURE(idx.m);
        CAPTURE(idx.n);
        CAPTURE(t.M);
        CAPTURE(t.N);
        if (t.M == idx.m && t.N == idx.n) {
          CHECK(c.kind == IndexClass::Kind::Canonical);
        } else {
          CHECK(c.kind == IndexClass::Kind::FoldsTo);
          CHECK(c.target == idx);
          CHECK(t.coeff == c.sign * base * lattice_weight(family, t.M, t.N));  // exact integers
        }
      }
    }
    const int m_min = (family == Family::SquareAntisym) ? 1 : 0;
    for (int M = m_min; M <= 12; ++M) {
      for (int N = 1; N <= 6; ++N) {
        if (family != Family::SquareAntisym && (M + N) % 2 != 0) continue;
        const IndexClass c = classify_lattice_point(family, M, N);
        const Point2 p(0.11, 0.23);
        const double lhs = eval_lattice(family, M, N, p);
        if (c.kind == IndexClass::Kind::Zero) {
          CHECK(std::abs(lhs) < 1e-11);
        } else if (c.kind == IndexClass::Kind::FoldsTo) {
          CHECK(lhs == doctest::Approx(c.sign * eval_closed(c.target, p)).epsilon(1e-11));
        }
      }
    }
  }
}

TEST_CASE("reflection sums reproduce the closed forms") {
  const auto agree = [](Family family, int M, int N, const Point2& p) {
    CHECK(eval_by_reflection(family, M, N, p) ==
          doctest::Approx(eval_lattice(family, M, N, p)).epsilon(1e-12));
  };
  agree(Family::SquareAntisym, 1, 2, Point2(0.3, 0.4));
  agree(Family::SquareAntisym, 2, 3, Point2(0.1, 0.6));
  agree(Family::EquiAntisym, 1, 3, Point2(0.2, 0.3));
  agree(Family::EquiAntisym, 2, 4, Point2(0.1, 0.5));
  agree(Family::EquiSym, 0, 2, Point2(0.25, 0.2));
  agree(Family::EquiSym, 1, 3, Point2(0.15, 0.55));
}

TEST_CASE("half-integer lattice labels are rejected") {
  CHECK_THROWS_AS(eval_lattice(Family::EquiAntisym, 1, 2, Point2(0.1, 0.1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_lattice(Family::EquiSym, 2, 1, Point2(0.1, 0.1)), std::invalid_argument);
  CHECK_NOTHROW(eval_lattice(Family::SquareAntisym, 1, 2, Point2(0.1, 0.1)));
}

}  // TEST_SUITE
