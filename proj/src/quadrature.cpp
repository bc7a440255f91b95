#include "schauder/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "schauder/errors.hpp"

namespace schauder {

double QuadratureRule::measure(std::size_t first, std::size_t last) const {
  double mu = 0.0;
  for (std::size_t i = first; i < last; ++i) mu += weights[i];
  return mu;
}

bool QuadratureRule::has_positive_weights() const noexcept {
  return std::all_of(weights.begin(), weights.end(), [](double w) { return w > 0.0; });
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw InputError("Gauss-Legendre order must be positive");
  const auto n = static_cast<std::size_t>(order);
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    if (n == 1) {
      z = 0.0;
      dp = 1.0;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;
}

namespace {

GaussHermiteNodes build_gauss_hermite(int count) {
  if (count < 1) throw InputError("Gauss-Hermite node count must be positive");
  const auto n = static_cast<std::size_t>(count);
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  std::vector<double> x(n), w(n), sw(n);
  double z = 0.0;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    const double dn = static_cast<double>(n);
    if (i == 0) {
      z = std::sqrt(2.0 * dn + 1.0) - 1.85575 * std::pow(2.0 * dn + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(dn, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    double pp = 0.0;
    double p_prev = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      // orthonormal polynomials for the weight exp(-x^2)
      double p1 = pim4;
      double p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double dj = static_cast<double>(j);
        p1 = z * std::sqrt(2.0 / (dj + 1.0)) * p2 - std::sqrt(dj / (dj + 1.0)) * p3;
      }
      p_prev = p2;
      pp = std::sqrt(2.0 * dn) * p2;
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    if (n % 2 == 1 && i == n / 2) z = 0.0;
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = w[n - 1 - i] = 2.0 / (pp * pp);
    // w e^{z^2} = 1 / (n psi_{n-1}(z)^2) with psi the Hermite function
    const double psi = p_prev * std::exp(-0.5 * z * z);
    sw[i] = sw[n - 1 - i] = 1.0 / (dn * psi * psi);
  }
  GaussHermiteNodes out;
  // ascending order
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  for (std::size_t i : order) {
    out.nodes.push_back(x[i]);
    out.weights.push_back(w[i]);
    out.scaled_weights.push_back(sw[i]);
  }
  return out;
}

}  // namespace

const GaussHermiteNodes& gauss_hermite_nodes(int count) {
  static std::mutex mutex;
  static std::map<int, GaussHermiteNodes> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(count);
  if (it == cache.end()) it = cache.emplace(count, build_gauss_hermite(count)).first;
  return it->second;
}

QuadratureRule gauss_legendre_rule(double a, double b, int panels, int order) {
  if (!(a < b)) throw InputError("integration interval requires a < b");
  if (panels < 1) throw InputError("panel count must be positive");
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::GaussLegendreComposite;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double left = a + h * p;
    for (std::size_t i = 0; i < x.size(); ++i) {
      rule.nodes.emplace_back(left + 0.5 * h * (x[i] + 1.0));
      rule.weights.push_back(0.5 * h * w[i]);
    }
  }
  return rule;
}

QuadratureRule gauss_hermite_rule(int count) {
  const auto& gh = gauss_hermite_nodes(count);
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::GaussHermite;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    rule.nodes.emplace_back(gh.nodes[i]);
    rule.weights.push_back(gh.weights[i]);
  }
  return rule;
}

QuadratureRule trapezoid_periodic_rule(int n, int dim) {
  if (dim < 1 || dim > 3) throw InputError("periodic integration supports d in {1,2,3}");
  if (n < 2) throw InputError("periodic rule needs at least 2 nodes per axis");
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::TrapezoidPeriodic;
  const double h = 2.0 * std::numbers::pi / n;
  const double w = std::pow(h, dim);
  std::size_t total = 1;
  for (int k = 0; k < dim; ++k) total *= static_cast<std::size_t>(n);
  for (std::size_t flat = 0; flat < total; ++flat) {
    Point p;
    std::size_t rest = flat;
    // last axis fastest
    std::array<double, 3> c{};
    for (int k = dim - 1; k >= 0; --k) {
      c[static_cast<std::size_t>(k)] = -std::numbers::pi + h * static_cast<double>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    if (dim == 1) p = Point{c[0]};
    if (dim == 2) p = Point{c[0], c[1]};
    if (dim == 3) p = Point{c[0], c[1], c[2]};
    rule.nodes.push_back(p);
    rule.weights.push_back(w);
  }
  return rule;
}

ValueVector apply_rule(const QuadratureRule& rule, const VectorFn& f, std::size_t first,
                       std::size_t last) {
  if (first >= last || last > rule.size()) throw InputError("empty or invalid node range");
  ValueVector sum;
  for (std::size_t i = first; i < last; ++i) {
    ValueVector v = f(rule.nodes[i]);
    if (!v.is_finite()) {
      throw NumericError("non-finite integrand sample at node " + std::to_string(rule.nodes[i][0]),
                         rule.nodes[i][0]);
    }
    if (i == first) sum = ValueVector::zero(v.size());
    sum.add_scaled(rule.weights[i], v);
  }
  return sum;
}

ValueVector apply_rule(const QuadratureRule& rule, const VectorFn& f) {
  return apply_rule(rule, f, 0, rule.size());
}

ValueVector integrate_interval(const VectorFn& f, double a, double b, int panels, int order) {
  return apply_rule(gauss_legendre_rule(a, b, panels, order), f);
}

ValueVector integrate_gauss_hermite(const VectorFn& g, int count) {
  return apply_rule(gauss_hermite_rule(count), g);
}

ValueVector integrate_periodic(const VectorFn& f, int nodes_per_axis, int dim) {
  return apply_rule(trapezoid_periodic_rule(nodes_per_axis, dim), f);
}

ValueVector integrate_box(const VectorFn& f, double half_width, int dim, int panels_per_axis,
                          int order) {
  if (dim < 1 || dim > 3) throw InputError("box integration supports d in {1,2,3}");
  const QuadratureRule axis = gauss_legendre_rule(-half_width, half_width, panels_per_axis, order);
  if (dim == 1) return apply_rule(axis, f);
  const std::size_t n = axis.size();
  ValueVector sum;
  bool started = false;
  std::size_t total = 1;
  for (int k = 0; k < dim; ++k) total *= n;
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::array<std::size_t, 3> idx{};
    std::size_t rest = flat;
    for (int k = dim - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = rest % n;
      rest /= n;
    }
    Point p = dim == 2 ? Point{axis.nodes[idx[0]][0], axis.nodes[idx[1]][0]}
                       : Point{axis.nodes[idx[0]][0], axis.nodes[idx[1]][0], axis.nodes[idx[2]][0]};
    double w = 1.0;
    for (int k = 0; k < dim; ++k) w *= axis.weights[idx[static_cast<std::size_t>(k)]];
    ValueVector v = f(p);
    if (!v.is_finite()) throw NumericError("non-finite integrand sample", p[0]);
    if (!started) {
      sum = ValueVector::zero(v.size());
      started = true;
    }
    sum.add_scaled(w, v);
  }
  return sum;
}

PettisBound pettis_bound_check(const ValueSpace& space, const VectorFn& f,
                               const QuadratureRule& rule, std::size_t first, std::size_t last) {
  if (first >= last || last > rule.size()) throw InputError("empty or invalid node range");
  for (std::size_t i = first; i < last; ++i) {
    if (rule.weights[i] < 0.0) {
      throw PreconditionError("negative quadrature weight: the integral bound is not guaranteed");
    }
  }
  const std::size_t count = space.seminorm_count();
  PettisBound out;
  out.lhs.assign(count, 0.0);
  out.rhs.assign(count, 0.0);
  std::vector<double> sup(count, 0.0);
  ValueVector sum;
  for (std::size_t i = first; i < last; ++i) {
    ValueVector v = f(rule.nodes[i]);
    if (!v.is_finite()) throw NumericError("non-finite integrand sample", rule.nodes[i][0]);
    if (i == first) sum = ValueVector::zero(v.size());
    sum.add_scaled(rule.weights[i], v);
    for (std::size_t a = 0; a < count; ++a) sup[a] = std::max(sup[a], space.seminorm(a, v));
  }
  const double mu = rule.measure(first, last);
  for (std::size_t a = 0; a < count; ++a) {
    out.lhs[a] = space.seminorm(a, sum);
    out.rhs[a] = mu * sup[a];
    out.ok = out.ok && out.lhs[a] <= out.rhs[a] + 1e-12;
  }
  return out;
}

PettisBound pettis_bound_check(const ValueSpace& space, const VectorFn& f,
                               const QuadratureRule& rule) {
  return pettis_bound_check(space, f, rule, 0, rule.size());
}

}  // namespace schauder
