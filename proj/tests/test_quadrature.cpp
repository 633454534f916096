#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "trilap/quadrature.hpp"

using namespace trilap;

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Exact integral of x^a y^b over the triangle x, y >= 0, x + y <= 1.
double simplex_monomial(int a, int b) {
  double num = 1.0, den = 1.0;
  for (int k = 2; k <= a; ++k) num *= k;
  for (int k = 2; k <= b; ++k) num *= k;
  for (int k = 2; k <= a + b + 2; ++k) den *= k;
  return num / den;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("two-point Gauss rule has the classic nodes") {
  const auto [x, w] = gauss_legendre(2);
  CHECK(x[0] == doctest::Approx(-0.5773502691896257).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(0.5773502691896257).epsilon(1e-14));
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("five-point Gauss rule matches tabulated values") {
  const auto [x, w] = gauss_legendre(5);
  CHECK(x[2] == 0.0);  // odd order pins the middle node exactly
  CHECK(x[0] == doctest::Approx(-0.9061798459386640).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(-0.5384693101056831).epsilon(1e-14));
  CHECK(w[2] == doctest::Approx(0.5688888888888889).epsilon(1e-14));
  CHECK(w[0] == doctest::Approx(0.2369268850561891).epsilon(1e-13));
  for (int i = 0; i < 5; ++i) CHECK(x[i] == -x[4 - i]);  // exact symmetry
  CHECK(w.sum() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("Gauss rules integrate polynomials up to degree 2n-1") {
  const auto [x, w] = gauss_legendre(8);
  double odd = 0.0, even = 0.0;
  for (int i = 0; i < 8; ++i) {
    odd += w[i] * std::pow(x[i], 15);
    even += w[i] * std::pow(x[i], 14);
  }
  CHECK(odd == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(even == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("Gauss order is validated") {
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(257), std::invalid_argument);
}

TEST_CASE("tensor rule integrates separable polynomials") {
  const QuadratureRule rule = tensor_rule(2.0, 3.0, 6, 6);
  CHECK(rule.weights.sum() == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(rule.area == doctest::Approx(6.0));
  const double xy = integrate([](const Point2& p) { return p.x() * p.y(); }, rule);
  CHECK(xy == doctest::Approx(9.0).epsilon(1e-13));
  CHECK_THROWS_AS(tensor_rule(0.0, 1.0, 4, 4), std::invalid_argument);
}

TEST_CASE("collapsed-square rule integrates simplex monomials exactly") {
  const QuadratureRule rule = triangle_rule(TriangleKind::Isosceles45, 4);
  CHECK(rule.weights.sum() == doctest::Approx(0.5).epsilon(1e-14));
  const double bump =
      integrate([](const Point2& p) { return p.x() * p.y() * (1 - p.x() - p.y()); }, rule);
  CHECK(bump == doctest::Approx(1.0 / 120.0).epsilon(1e-13));
  const double m32 =
      integrate([](const Point2& p) { return std::pow(p.x(), 3) * p.y() * p.y(); }, rule);
  CHECK(m32 == doctest::Approx(simplex_monomial(3, 2)).epsilon(1e-13));
}

TEST_CASE("degree bound 2*order - 2 is sharp enough for order 3") {
  const QuadratureRule rule = triangle_rule(TriangleKind::Isosceles45, 3);
  const double m22 =
      integrate([](const Point2& p) { return p.x() * p.x() * p.y() * p.y(); }, rule);
  CHECK(m22 == doctest::Approx(1.0 / 180.0).epsilon(1e-13));
}

TEST_CASE("half-triangle rule carries the right measure") {
  const QuadratureRule rule = triangle_rule(TriangleKind::Hemiequilateral, 8);
  CHECK(rule.weights.sum() == doctest::Approx(kSqrt3 / 6.0).epsilon(1e-14));
  CHECK(rule.area == doctest::Approx(kSqrt3 / 6.0).epsilon(1e-14));
  const double x1 = integrate([](const Point2& p) { return p.x(); }, rule);
  CHECK(x1 == doctest::Approx(1.0 / 18.0).epsilon(1e-13));
}

TEST_CASE("equilateral rule is mirror symmetric") {
  const QuadratureRule rule = triangle_rule(TriangleKind::Equilateral, 8);
  CHECK(rule.weights.sum() == doctest::Approx(1.0 / kSqrt3).epsilon(1e-14));
  const double x1 = integrate([](const Point2& p) { return p.x(); }, rule);
  CHECK(std::abs(x1) < 1e-15);
  const double x2 = integrate([](const Point2& p) { return p.x() * p.x(); }, rule);
  CHECK(x2 == doctest::Approx(1.0 / (18.0 * kSqrt3)).epsilon(1e-13));
}

TEST_CASE("cover rules add up the tiles") {
  const QuadratureRule square = cover_rule(cached_tiling(TilingKind::Square), 6);
  CHECK(square.weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
  const double xy = integrate([](const Point2& p) { return p.x() * p.y(); }, square);
  CHECK(xy == doctest::Approx(0.25).epsilon(1e-13));

  const QuadratureRule prager = cover_rule(cached_tiling(TilingKind::Prager), 6);
  CHECK(prager.weights.sum() == doctest::Approx(kSqrt3).epsilon(1e-13));
  const double x1 = integrate([](const Point2& p) { return p.x(); }, prager);
  CHECK(x1 == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("lp norms validate the exponent and the samples") {
  const QuadratureRule rule = triangle_rule(TriangleKind::Isosceles45, 4);
  CHECK_THROWS_AS(lp_norm([](const Point2&) { return 1.0; }, 1.0, rule), std::invalid_argument);
  CHECK_THROWS_AS(
      lp_norm([](const Point2&) { return 1.0; }, std::numeric_limits<double>::infinity(), rule),
      std::invalid_argument);
  Eigen::VectorXd bad = Eigen::VectorXd::Zero(rule.weights.size());
  bad[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(lp_norm_samples(rule, bad, 2.0), std::domain_error);
  try {
    lp_norm_samples(rule, bad, 2.0);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("node") != std::string::npos);
  }
}

TEST_CASE("lp norm of a constant recovers the measure") {
  const QuadratureRule rule = triangle_rule(TriangleKind::Hemiequilateral, 6);
  for (const double p : {1.5, 2.0, 3.0}) {
    const double norm = lp_norm([](const Point2&) { return 1.0; }, p, rule);
    CHECK(norm == doctest::Approx(std::pow(kSqrt3 / 6.0, 1.0 / p)).epsilon(1e-13));
  }
}

}  // TEST_SUITE
