#pragma once

#include <Eigen/Dense>

#include <utility>

#include "trilap/geometry.hpp"

namespace trilap {

/// A positive-weight quadrature rule over a planar region.
struct QuadratureRule {
  Eigen::Matrix<double, Eigen::Dynamic, 2> nodes;  ///< one (x, y) row per node
  Eigen::VectorXd weights;                         ///< same length as nodes
  double area = 0.0;                               ///< measure of the region
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
/// Nodes are found by Newton iteration on the Legendre recurrence and are
/// accurate to better than 1e-14. Valid orders: 1..256.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int order);

/// Tensor-product Gauss rule on the rectangle [0, lx] x [0, ly].
QuadratureRule tensor_rule(double lx, double ly, int order_x, int order_y);

/// Rule over a reference triangle. Right triangles use a collapsed-square
/// (Duffy) map with the collapse at the right-angle vertex, so the Jacobian
/// stays smooth; the equilateral triangle is covered by two mirrored
/// half-triangle rules. `order` is the Gauss order per direction
/// (order^2 nodes per triangle); polynomials of total degree <= 2*order - 2
/// are integrated to machine accuracy.
QuadratureRule triangle_rule(TriangleKind kind, int order);

/// Composite rule over a tiling cover: the fundamental-triangle rule mapped
/// onto every tile (isometries preserve the weights). Tiles are traversed in
/// id order, so the node order is deterministic.
QuadratureRule cover_rule(const Tiling& tiling, int order);

/// Evaluates f at every node of the rule.
template <class F>
Eigen::VectorXd sample(F&& f, const QuadratureRule& rule) {
  Eigen::VectorXd v(rule.nodes.rows());
  for (Eigen::Index i = 0; i < rule.nodes.rows(); ++i)
    v[i] = f(Point2(rule.nodes(i, 0), rule.nodes(i, 1)));
  return v;
}

/// Weighted sum of precomputed samples.
double integrate_samples(const QuadratureRule& rule, const Eigen::VectorXd& values);

/// || samples ||_p with the rule's weights; p must be finite and > 1.
/// Throws std::domain_error naming the node if a sample is not finite.
double lp_norm_samples(const QuadratureRule& rule, const Eigen::VectorXd& values, double p);

template <class F>
double integrate(F&& f, const QuadratureRule& rule) {
  return integrate_samples(rule, sample(std::forward<F>(f), rule));
}

template <class F, class G>
double inner_product(F&& f, G&& g, const QuadratureRule& rule) {
  const Eigen::VectorXd fv = sample(std::forward<F>(f), rule);
  const Eigen::VectorXd gv = sample(std::forward<G>(g), rule);
  return (rule.weights.array() * fv.array() * gv.array()).sum();
}

template <class F>
double lp_norm(F&& f, double p, const QuadratureRule& rule) {
  return lp_norm_samples(rule, sample(std::forward<F>(f), rule), p);
}

}  // namespace trilap
