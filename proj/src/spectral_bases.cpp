#include "schauder/spectral_bases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schauder/errors.hpp"
#include "schauder/quadrature.hpp"

namespace schauder {

namespace {

constexpr double kPi = std::numbers::pi;

/// Uniform tensor grid with q points per axis on [lo, hi]^dim, last axis fastest.
std::vector<Point> tensor_grid(int dim, std::size_t q, double lo, double hi) {
  q = std::max<std::size_t>(q, 2);
  std::vector<double> axis(q);
  for (std::size_t i = 0; i < q; ++i) axis[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(q - 1);
  std::vector<Point> out;
  if (dim == 1) {
    for (double x : axis) out.emplace_back(x);
  } else if (dim == 2) {
    for (double x : axis)
      for (double y : axis) out.push_back(Point{x, y});
  } else {
    for (double x : axis)
      for (double y : axis)
        for (double z : axis) out.push_back(Point{x, y, z});
  }
  return out;
}

std::size_t per_axis(std::size_t count, int dim) {
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(count), 1.0 / dim))));
}

std::size_t find_index(const std::vector<MultiIndex>& indices, const MultiIndex& n, const std::string& who) {
  const auto it = std::find(indices.begin(), indices.end(), n);
  if (it == indices.end()) throw InputError(who + ": index " + format_index(n) + " beyond the truncation");
  return static_cast<std::size_t>(it - indices.begin());
}

std::vector<Scalar> conjugate_roots(int n) {
  std::vector<Scalar> roots(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) roots[static_cast<std::size_t>(r)] = std::polar(1.0, -2.0 * kPi * r / n);
  return roots;
}

std::size_t wrap(long long a, long long n) { return static_cast<std::size_t>(((a % n) + n) % n); }

ValueVector checked(ValueVector v, const char* what, double node) {
  if (!v.is_finite()) throw NumericError(what, node);
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hermite

double hermite_poly(int n, double x) {
  if (n < 0) throw InputError("Hermite order must be nonnegative");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_poly_derivative(int n, double x) {
  if (n < 0) throw InputError("Hermite order must be nonnegative");
  return n == 0 ? 0.0 : 2.0 * n * hermite_poly(n - 1, x);
}

double hermite_normalization(int n) {
  if (n < 0) throw InputError("Hermite order must be nonnegative");
  return std::exp(-0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0) + 0.5 * std::log(kPi)));
}

std::vector<double> hermite_fn_table(int max_order, double x) {
  if (max_order < 0) throw InputError("Hermite order must be nonnegative");
  std::vector<double> h(static_cast<std::size_t>(max_order) + 1);
  h[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(kPi));
  if (max_order >= 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int n = 1; n < max_order; ++n) {
    h[n + 1] = std::sqrt(2.0 / (n + 1)) * x * h[n] - std::sqrt(static_cast<double>(n) / (n + 1)) * h[n - 1];
  }
  return h;
}

double hermite_fn(int n, double x) { return hermite_fn_table(n, x).back(); }

double hermite_fn(const MultiIndex& n, const Point& x) {
  if (n.size() != x.dim()) throw InputError("Hermite index and point differ in dimension");
  double v = 1.0;
  for (std::size_t i = 0; i < n.size(); ++i) v *= hermite_fn(n[i], x[i]);
  return v;
}

int HermiteContext::node_count() const { return nodes > 0 ? nodes : std::max(40, 2 * max_order + 10); }

void HermiteContext::validate() const {
  if (dim < 1 || dim > 2) throw InputError("Hermite expansions support d = 1 or 2");
  if (max_order < 0) throw InputError("Hermite order bound must be nonnegative");
  if (node_count() <= max_order) throw InputError("too few Gauss-Hermite nodes for the order bound");
}

HermiteBasis::HermiteBasis(HermiteContext ctx) : ctx_(ctx) {
  ctx_.validate();
  ctx_.nodes = ctx_.node_count();
  indices_ = enumerate_n0d(ctx_.dim, ctx_.max_order);
  domain_.kind = Domain::Kind::RealSpace;
  domain_.dim = ctx_.dim;
  const GaussHermiteNodes& gh = gauss_hermite_nodes(ctx_.nodes);
  nodes_ = gh.nodes;
  weights_ = gh.scaled_weights;
  for (double x : nodes_) fn_table_.push_back(hermite_fn_table(ctx_.max_order, x));
}

Scalar HermiteBasis::element(std::size_t position, const Point& x) const {
  require_position(position);
  require_in_domain(x);
  return hermite_fn(indices_[position], x);
}

std::vector<ValueVector> HermiteBasis::samples(const FunctionBundle& f) const {
  std::vector<ValueVector> out;
  if (ctx_.dim == 1) {
    for (double x : nodes_) out.push_back(checked(f.value(Point{x}), "non-finite sample in Hermite coefficient", x));
  } else {
    for (double x : nodes_)
      for (double y : nodes_)
        out.push_back(checked(f.value(Point{x, y}), "non-finite sample in Hermite coefficient", x));
  }
  return out;
}

ValueVector HermiteBasis::reduce(const std::vector<ValueVector>& s, const MultiIndex& n) const {
  ValueVector sum = ValueVector::zero(s.front().size());
  const std::size_t m = nodes_.size();
  if (ctx_.dim == 1) {
    for (std::size_t i = 0; i < m; ++i) sum.add_scaled(weights_[i] * fn_table_[i][n[0]], s[i]);
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      const double wi = weights_[i] * fn_table_[i][n[0]];
      for (std::size_t k = 0; k < m; ++k) sum.add_scaled(wi * (weights_[k] * fn_table_[k][n[1]]), s[i * m + k]);
    }
  }
  return sum;
}

ValueVector HermiteBasis::coefficient(const FunctionBundle& f, std::size_t position) const {
  require_position(position);
  return reduce(samples(f), indices_[position]);
}

std::vector<ValueVector> HermiteBasis::coefficients(const FunctionBundle& f, std::size_t count) const {
  if (count > size()) throw InputError("hermite: more coefficients requested than the truncation");
  std::vector<ValueVector> out;
  if (count == 0) return out;
  const auto s = samples(f);
  for (std::size_t p = 0; p < count; ++p) out.push_back(reduce(s, indices_[p]));
  return out;
}

std::vector<Point> HermiteBasis::evaluation_grid(std::size_t count) const {
  return tensor_grid(ctx_.dim, per_axis(count, ctx_.dim), -6.0, 6.0);
}

std::size_t HermiteBasis::position_of(const MultiIndex& n) const { return find_index(indices_, n, "hermite"); }

ValueVector hermite_coefficient(const FunctionBundle& f, const MultiIndex& n) {
  HermiteContext ctx;
  ctx.dim = static_cast<int>(n.size());
  ctx.max_order = grade(n);
  const HermiteBasis basis(ctx);
  return basis.coefficient(f, basis.position_of(n));
}

std::vector<double> schwartz_seminorm(const FunctionBundle& f, int dim, int l, const ValueSpace& space,
                                      const SchwartzGrid& grid) {
  if (dim < 1 || dim > 2) throw InputError("Schwartz seminorms support d = 1 or 2");
  if (l < 0) throw InputError("Schwartz seminorm order must be nonnegative");
  std::vector<const VectorFn*> handles;
  for (const auto& beta : enumerate_n0d(dim, l)) {
    const VectorFn* h = f.partial(beta);
    if (h == nullptr) throw InputError("Schwartz seminorm: partial " + format_index(beta) + " not supplied");
    handles.push_back(h);
  }
  std::vector<double> out(space.seminorm_count(), 0.0);
  for (const Point& x : tensor_grid(dim, grid.points, -grid.half_width, grid.half_width)) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) r2 += x[i] * x[i];
    const double w = std::pow(1.0 + r2, 0.5 * l);
    for (const VectorFn* h : handles) {
      const ValueVector v = (*h)(x);
      for (std::size_t a = 0; a < out.size(); ++a) out[a] = std::max(out[a], space.seminorm(a, v) * w);
    }
  }
  return out;
}

HermitePolynomialBound hermite_polynomial_bound(const MultiIndex& n) {
  HermitePolynomialBound bound;
  for (int order : n) {
    if (order < 0) throw InputError("Hermite order must be nonnegative");
    std::vector<double> prev{1.0}, cur{1.0};
    if (order >= 1) cur = {0.0, 2.0};
    for (int k = 1; k < order; ++k) {
      std::vector<double> next(cur.size() + 1, 0.0);
      for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * k * prev[i];
      prev = std::move(cur);
      cur = std::move(next);
    }
    double s = 0.0;
    for (double c : cur) s += std::abs(c);
    bound.C *= s;
    bound.j += order;
  }
  return bound;
}

TailBound hermite_tail_bound_check(const FunctionBundle& f, const MultiIndex& n, int k, int m,
                                   const ValueSpace& space, const SchwartzGrid& grid) {
  const int d = static_cast<int>(n.size());
  if (d < 1 || d > 2) throw InputError("tail bound supports d = 1 or 2");
  if (!(k > m && m >= 1)) throw InputError("tail bound needs k > m >= 1");
  const VectorFn g = [&](const Point& x) {
    ValueVector v = f.value(x);
    v *= hermite_fn(n, x);
    return v;
  };
  const ValueVector inner = integrate_box(g, m, d, 8 * m);
  const ValueVector outer = integrate_box(g, k, d, 8 * k);
  const ValueVector diff = outer - inner;

  const HermitePolynomialBound poly = hermite_polynomial_bound(n);
  double cn = 1.0;
  for (int order : n) cn *= hermite_normalization(order);
  std::vector<double> weighted(space.seminorm_count(), 0.0);
  for (const Point& x : tensor_grid(d, grid.points, -grid.half_width, grid.half_width)) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) r2 += x[i] * x[i];
    const double w = std::pow(1.0 + r2, 0.5 * poly.j);
    const ValueVector v = f.value(x);
    for (std::size_t a = 0; a < weighted.size(); ++a) weighted[a] = std::max(weighted[a], space.seminorm(a, v) * w);
  }
  const double shell = std::pow(1.0 - std::exp(-0.5 * k * k), d) - std::pow(1.0 - std::exp(-0.5 * m * m), d);

  TailBound out;
  for (std::size_t a = 0; a < space.seminorm_count(); ++a) {
    out.lhs.push_back(space.seminorm(a, diff));
    out.rhs.push_back(std::ldexp(1.0, d) * cn * poly.C * weighted[a] * shell);
    if (!(out.lhs.back() <= out.rhs.back() * (1.0 + 1e-6))) out.ok = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fourier

void PeriodicContext::require_exact(const MultiIndex& n) const {
  int inf = 0;
  for (int v : n) inf = std::max(inf, std::abs(v));
  if (grid < 2 * inf + 1) {
    throw InputError("frequency " + format_index(n) + " needs at least " + std::to_string(2 * inf + 1) +
                     " grid points per axis, have " + std::to_string(grid));
  }
}

FourierBasis::FourierBasis(int dim, int max_order, int grid) {
  if (dim < 1 || dim > 3) throw InputError("Fourier expansions support d = 1..3");
  if (max_order < 0) throw InputError("Fourier order bound must be nonnegative");
  ctx_.dim = dim;
  ctx_.grid = grid > 0 ? grid : std::max(64, 4 * max_order + 1);
  ctx_.require_exact(MultiIndex(1, max_order));
  indices_ = enumerate_zd(dim, max_order);
  domain_.kind = Domain::Kind::Torus;
  domain_.dim = dim;
  roots_ = conjugate_roots(ctx_.grid);
}

Scalar FourierBasis::element(std::size_t position, const Point& x) const {
  require_position(position);
  require_in_domain(x);
  const MultiIndex& n = indices_[position];
  double phase = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) phase += n[i] * x[i];
  return std::polar(1.0, phase);
}

std::vector<ValueVector> FourierBasis::samples(const FunctionBundle& f) const {
  const QuadratureRule rule = trapezoid_periodic_rule(ctx_.grid, ctx_.dim);
  std::vector<ValueVector> out;
  out.reserve(rule.size());
  for (const Point& x : rule.nodes) out.push_back(checked(f.value(x), "non-finite sample in Fourier coefficient", x[0]));
  return out;
}

ValueVector FourierBasis::reduce(const std::vector<ValueVector>& s, const MultiIndex& n) const {
  // e^{-i n x_j} = (-1)^n e^{-2 pi i n j / N} on the nodes x_j = -pi + 2 pi j / N.
  const long long big_n = ctx_.grid;
  const std::size_t N = static_cast<std::size_t>(ctx_.grid);
  ValueVector sum = ValueVector::zero(s.front().size());
  std::size_t idx = 0;
  if (ctx_.dim == 1) {
    for (std::size_t j = 0; j < N; ++j) sum.add_scaled(roots_[wrap(n[0] * static_cast<long long>(j), big_n)], s[idx++]);
  } else if (ctx_.dim == 2) {
    for (std::size_t j0 = 0; j0 < N; ++j0) {
      const Scalar r0 = roots_[wrap(n[0] * static_cast<long long>(j0), big_n)];
      for (std::size_t j1 = 0; j1 < N; ++j1)
        sum.add_scaled(r0 * roots_[wrap(n[1] * static_cast<long long>(j1), big_n)], s[idx++]);
    }
  } else {
    for (std::size_t j0 = 0; j0 < N; ++j0) {
      const Scalar r0 = roots_[wrap(n[0] * static_cast<long long>(j0), big_n)];
      for (std::size_t j1 = 0; j1 < N; ++j1) {
        const Scalar r01 = r0 * roots_[wrap(n[1] * static_cast<long long>(j1), big_n)];
        for (std::size_t j2 = 0; j2 < N; ++j2)
          sum.add_scaled(r01 * roots_[wrap(n[2] * static_cast<long long>(j2), big_n)], s[idx++]);
      }
    }
  }
  const double sign = (schauder::grade(n) % 2 == 0) ? 1.0 : -1.0;
  sum *= sign / std::pow(static_cast<double>(N), ctx_.dim);
  return sum;
}

ValueVector FourierBasis::coefficient(const FunctionBundle& f, std::size_t position) const {
  require_position(position);
  return reduce(samples(f), indices_[position]);
}

std::vector<ValueVector> FourierBasis::coefficients(const FunctionBundle& f, std::size_t count) const {
  if (count > size()) throw InputError("fourier: more coefficients requested than the truncation");
  std::vector<ValueVector> out;
  if (count == 0) return out;
  const auto s = samples(f);
  for (std::size_t p = 0; p < count; ++p) out.push_back(reduce(s, indices_[p]));
  return out;
}

std::vector<Point> FourierBasis::evaluation_grid(std::size_t count) const {
  return tensor_grid(ctx_.dim, per_axis(count, ctx_.dim), -kPi, kPi);
}

std::size_t FourierBasis::position_of(const MultiIndex& n) const { return find_index(indices_, n, "fourier"); }

ValueVector fourier_coefficient(const FunctionBundle& f, const MultiIndex& n, int dim, int grid) {
  if (static_cast<int>(n.size()) != dim) throw InputError("frequency and dimension disagree");
  if (grid > 0) PeriodicContext{dim, grid}.require_exact(n);
  int inf = 0;
  for (int v : n) inf = std::max(inf, std::abs(v));
  const FourierBasis basis(dim, std::max(grade(n), inf), grid);
  return basis.coefficient(f, basis.position_of(n));
}

ValueVector fourier_partial_sum(const FunctionBundle& f, int k, const Point& x) {
  const FourierBasis basis(static_cast<int>(x.dim()), k);
  return partial_sum(basis, f, k, x);
}

// ---------------------------------------------------------------------------
// Taylor

double DiscContext::rho() const {
  if (contour > 0.0) return contour;
  return std::isinf(radius) ? 1.0 : std::min(1.0, 0.5 * radius);
}

int DiscContext::node_count(int max_order) const {
  if (contour_nodes > 0) return contour_nodes;
  int n = 64;
  while (n < 4 * max_order) n *= 2;
  return n;
}

void DiscContext::validate(int max_order) const {
  if (!(radius > 0.0)) throw InputError("disc radius must be positive");
  const double r = rho();
  if (!(r > 0.0) || !(r < radius)) throw InputError("contour radius must satisfy 0 < rho < r");
  const int nc = node_count(max_order);
  if (nc < 1 || (nc & (nc - 1)) != 0) throw InputError("contour node count must be a power of two");
  if (nc < 4 * max_order) throw InputError("contour node count must be at least 4 * max order");
}

std::vector<ValueVector> taylor_coefficients(const FunctionBundle& f, const DiscContext& ctx, int n_max) {
  if (n_max < 0) throw InputError("Taylor order must be nonnegative");
  ctx.validate(n_max);
  const double rho = ctx.rho();
  const int nc = ctx.node_count(n_max);
  const auto roots = conjugate_roots(nc);
  std::vector<ValueVector> samples;
  samples.reserve(static_cast<std::size_t>(nc));
  for (int j = 0; j < nc; ++j) {
    const Scalar z = ctx.center + rho * std::conj(roots[static_cast<std::size_t>(j)]);
    samples.push_back(checked(f.value(Point::from_complex(z)), "non-finite sample on the Taylor contour", z.real()));
  }
  std::vector<ValueVector> out;
  for (int n = 0; n <= n_max; ++n) {
    ValueVector sum = ValueVector::zero(samples.front().size());
    for (int j = 0; j < nc; ++j) {
      sum.add_scaled(roots[wrap(static_cast<long long>(j) * n, nc)], samples[static_cast<std::size_t>(j)]);
    }
    sum *= 1.0 / (nc * std::pow(rho, n));
    out.push_back(std::move(sum));
  }
  return out;
}

TaylorBasis::TaylorBasis(DiscContext ctx, int max_order) : ctx_(ctx), max_order_(max_order) {
  if (max_order_ < 0) throw InputError("Taylor order bound must be nonnegative");
  ctx_.validate(max_order_);
  ctx_.contour = ctx_.rho();
  ctx_.contour_nodes = ctx_.node_count(max_order_);
  domain_.kind = Domain::Kind::Disc;
  domain_.dim = 2;
  domain_.center = ctx_.center;
  domain_.radius = ctx_.radius;
  domain_.sample_radius = ctx_.contour;
}

Scalar TaylorBasis::element(std::size_t position, const Point& x) const {
  require_position(position);
  const Scalar u = x.as_complex() - ctx_.center;
  Scalar p = 1.0;
  for (std::size_t k = 0; k < position; ++k) p *= u;
  return p;
}

std::vector<ValueVector> TaylorBasis::coefficients(const FunctionBundle& f, std::size_t count) const {
  if (count > size()) throw InputError("taylor: more coefficients requested than the truncation");
  if (count == 0) return {};
  auto all = taylor_coefficients(f, ctx_, max_order_);
  all.resize(count);
  return all;
}

ValueVector TaylorBasis::coefficient(const FunctionBundle& f, std::size_t position) const {
  require_position(position);
  return coefficients(f, position + 1).back();
}

std::vector<Point> TaylorBasis::evaluation_grid(std::size_t count) const {
  const std::size_t rings = std::max<std::size_t>(2, static_cast<std::size_t>(std::sqrt(count / 8.0)));
  const std::size_t angles = std::max<std::size_t>(8, count / rings);
  std::vector<Point> out{Point::from_complex(ctx_.center)};
  for (std::size_t r = 1; r <= rings; ++r) {
    const double radius = ctx_.contour * static_cast<double>(r) / static_cast<double>(rings);
    for (std::size_t a = 0; a < angles; ++a) {
      out.push_back(Point::from_complex(ctx_.center + std::polar(radius, 2.0 * kPi * a / angles)));
    }
  }
  return out;
}

ValueVector cr_residual(const FunctionBundle& f, Scalar z, double h) {
  if (!(h > 0.0)) throw InputError("difference step must be positive");
  const Scalar dx(h, 0.0), dy(0.0, h);
  ValueVector ddx = f.value(Point::from_complex(z + dx)) - f.value(Point::from_complex(z - dx));
  ValueVector ddy = f.value(Point::from_complex(z + dy)) - f.value(Point::from_complex(z - dy));
  ddx.add_scaled(Scalar(0.0, 1.0), ddy);
  ddx *= 1.0 / (4.0 * h);
  return ddx;
}

// ---------------------------------------------------------------------------

TruncatedSequence to_s_space(SpectralKind kind, const FunctionBundle& f, int n_max, int dim) {
  TruncatedSequence x;
  x.space = SequenceSpaceKind::S;
  if (kind == SpectralKind::Hermite) {
    const HermiteBasis basis({dim, n_max, 0});
    x.index_set = IndexSetKind::GradedN0d;
    x.values = basis.coefficients(f, basis.size());
    for (std::size_t p = 0; p < basis.size(); ++p) x.indices.push_back(basis.index(p));
  } else {
    const FourierBasis basis(dim, n_max);
    x.index_set = IndexSetKind::GradedZd;
    x.values = basis.coefficients(f, basis.size());
    for (std::size_t p = 0; p < basis.size(); ++p) x.indices.push_back(basis.index(p));
  }
  x.validate();
  return x;
}

}  // namespace schauder
