#pragma once

#include <cstddef>
#include <vector>

#include "schauder/functions.hpp"
#include "schauder/value_space.hpp"

namespace schauder {

/// Nodes and weights of a fixed rule.  Integrals are accumulated in ascending
/// node order, componentwise, so that e'(integral of f) and integral of e' o f
/// are the same floating-point sum.
struct QuadratureRule {
  enum class Kind { GaussLegendreComposite, GaussHermite, TrapezoidPeriodic };

  Kind kind = Kind::GaussLegendreComposite;
  std::vector<Point> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Sum of the weights over [first, last), i.e. mu(K) for the node range K.
  double measure(std::size_t first, std::size_t last) const;
  bool has_positive_weights() const noexcept;
};

/// Gauss-Legendre nodes/weights of the given order on [-1, 1], ascending.
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Gauss-Hermite rule for the weight exp(-x^2).  `scaled_weights` holds
/// w_i * exp(x_i^2), the weights to use when the integrand already carries
/// its own Gaussian factor (Hermite functions).
struct GaussHermiteNodes {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;
};
const GaussHermiteNodes& gauss_hermite_nodes(int count);

QuadratureRule gauss_legendre_rule(double a, double b, int panels, int order);
QuadratureRule gauss_hermite_rule(int count);
/// Tensor trapezoid rule on [-pi, pi)^d with n nodes per axis.
QuadratureRule trapezoid_periodic_rule(int n, int dim);

/// Sum of w_i f(x_i) over the node range [first, last) in ascending order.
/// Throws NumericError naming the node when a sample is not finite.
ValueVector apply_rule(const QuadratureRule& rule, const VectorFn& f, std::size_t first,
                       std::size_t last);
ValueVector apply_rule(const QuadratureRule& rule, const VectorFn& f);

/// Composite Gauss-Legendre approximation of the integral of f over [a, b].
ValueVector integrate_interval(const VectorFn& f, double a, double b, int panels = 64, int order = 8);

/// Integral of g(x) exp(-x^2) over the real line with `count` Gauss-Hermite nodes.
ValueVector integrate_gauss_hermite(const VectorFn& g, int count);

/// Un-normalized integral of a 2pi-periodic f over [-pi, pi]^d.
ValueVector integrate_periodic(const VectorFn& f, int nodes_per_axis, int dim);

/// Tensor composite Gauss-Legendre integral over the box [-half_width, half_width]^d.
ValueVector integrate_box(const VectorFn& f, double half_width, int dim, int panels_per_axis,
                          int order = 8);

/// Discrete form of p(int_K f) <= mu(K) sup_K p(f(x)).
struct PettisBound {
  std::vector<double> lhs;  ///< per seminorm
  std::vector<double> rhs;  ///< per seminorm
  bool ok = true;
};

/// Throws PreconditionError if a weight in the range is negative.
PettisBound pettis_bound_check(const ValueSpace& space, const VectorFn& f,
                               const QuadratureRule& rule, std::size_t first, std::size_t last);
PettisBound pettis_bound_check(const ValueSpace& space, const VectorFn& f,
                               const QuadratureRule& rule);

}  // namespace schauder
