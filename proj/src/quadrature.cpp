#include "trilap/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace trilap {
namespace {

constexpr double kPi = std::numbers::pi;

// Legendre P_n and P_n' at x via the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int j = 2; j <= n; ++j) {
    const double pj = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = pj;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

struct Interval {
  Eigen::VectorXd nodes;    // on [0, 1]
  Eigen::VectorXd weights;  // sum to 1
};

// Gauss rule moved to the unit interval.
Interval gauss01(int order) {
  auto [x, w] = gauss_legendre(order);
  Interval iv;
  iv.nodes = (x.array() + 1.0) * 0.5;
  iv.weights = w * 0.5;
  return iv;
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int order) {
  if (order < 1 || order > 256)
    throw std::invalid_argument("gauss_legendre: order must lie in 1..256");
  Eigen::VectorXd x(order), w(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th root in descending order; the guess is accurate enough that
    // Newton converges in a handful of steps.
    double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
    if (order % 2 == 1 && i == half - 1) z = 0.0;
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 64; ++it) {
      legendre(order, z, p, dp);
      const double delta = p / dp;
      z -= delta;
      if (std::abs(delta) < 1e-15) break;
    }
    legendre(order, z, p, dp);
    const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
    x[i] = -z;
    x[order - 1 - i] = z;
    w[i] = wi;
    w[order - 1 - i] = wi;
  }
  return {x, w};
}

QuadratureRule tensor_rule(double lx, double ly, int order_x, int order_y) {
  if (!(lx > 0.0) || !(ly > 0.0))
    throw std::invalid_argument("tensor_rule: side lengths must be positive");
  const Interval ix = gauss01(order_x);
  const Interval iy = gauss01(order_y);
  QuadratureRule rule;
  rule.nodes.resize(order_x * order_y, 2);
  rule.weights.resize(order_x * order_y);
  Eigen::Index k = 0;
  for (int i = 0; i < order_x; ++i)
    for (int j = 0; j < order_y; ++j, ++k) {
      rule.nodes(k, 0) = lx * ix.nodes[i];
      rule.nodes(k, 1) = ly * iy.nodes[j];
      rule.weights[k] = lx * ly * ix.weights[i] * iy.weights[j];
    }
  rule.area = lx * ly;
  return rule;
}

namespace {

// Collapsed-square rule on a right triangle (v0 at the right angle):
// (u, v) in [0,1]^2 maps to v0 + (u v)(v1 - v0) + v(1 - u)(v2 - v0) with
// Jacobian proportional to v, so the collapse sits at v0.
QuadratureRule duffy_rule(const Point2& v0, const Point2& v1, const Point2& v2, int order) {
  const Interval iv = gauss01(order);
  const Eigen::Vector2d e1 = v1 - v0;
  const Eigen::Vector2d e2 = v2 - v0;
  const double jac = std::abs(e1.x() * e2.y() - e1.y() * e2.x());  // = 2 * area
  QuadratureRule rule;
  rule.nodes.resize(order * order, 2);
  rule.weights.resize(order * order);
  Eigen::Index k = 0;
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j, ++k) {
      const double u = iv.nodes[i];
      const double v = iv.nodes[j];
      const double x = u * v;
      const double y = v * (1.0 - u);
      rule.nodes.row(k) = (v0 + x * e1 + y * e2).transpose();
      rule.weights[k] = iv.weights[i] * iv.weights[j] * v * jac;
    }
  rule.area = 0.5 * jac;
  return rule;
}

QuadratureRule concatenate(const QuadratureRule& a, const QuadratureRule& b) {
  QuadratureRule rule;
  rule.nodes.resize(a.nodes.rows() + b.nodes.rows(), 2);
  rule.nodes << a.nodes, b.nodes;
  rule.weights.resize(a.weights.size() + b.weights.size());
  rule.weights << a.weights, b.weights;
  rule.area = a.area + b.area;
  return rule;
}

}  // namespace

QuadratureRule triangle_rule(TriangleKind kind, int order) {
  if (kind == TriangleKind::Equilateral) {
    // Two mirrored hemiequilateral halves; the symmetric node set makes odd
    // integrands cancel to rounding.
    QuadratureRule half = triangle_rule(TriangleKind::Hemiequilateral, order);
    QuadratureRule mirrored = half;
    mirrored.nodes.col(0) = -half.nodes.col(0);
    return concatenate(half, mirrored);
  }
  const TriangleDomain tri = reference_triangle(kind);
  return duffy_rule(tri.vertices[0], tri.vertices[1], tri.vertices[2], order);
}

QuadratureRule cover_rule(const Tiling& tiling, int order) {
  const QuadratureRule base = triangle_rule(tiling.fundamental.kind, order);
  QuadratureRule rule;
  const Eigen::Index per_tile = base.nodes.rows();
  rule.nodes.resize(per_tile * static_cast<Eigen::Index>(tiling.tiles.size()), 2);
  rule.weights.resize(rule.nodes.rows());
  Eigen::Index k = 0;
  for (const Tile& tile : tiling.tiles) {
    const Isometry placement = tile.to_fundamental.inverse();
    for (Eigen::Index i = 0; i < per_tile; ++i, ++k) {
      rule.nodes.row(k) = (placement * Point2(base.nodes(i, 0), base.nodes(i, 1))).transpose();
      rule.weights[k] = base.weights[i];
    }
  }
  rule.area = tiling.cover.x() * tiling.cover.y();
  return rule;
}

double integrate_samples(const QuadratureRule& rule, const Eigen::VectorXd& values) {
  return (rule.weights.array() * values.array()).sum();
}

double lp_norm_samples(const QuadratureRule& rule, const Eigen::VectorXd& values, double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("lp_norm: p must lie in (1, inf)");
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      std::ostringstream msg;
      msg << "lp_norm: non-finite sample at node (" << rule.nodes(i, 0) << ", "
          << rule.nodes(i, 1) << ")";
      throw std::domain_error(msg.str());
    }
  }
  const double sum = (rule.weights.array() * values.array().abs().pow(p)).sum();
  return std::pow(sum, 1.0 / p);
}

}  // namespace trilap
