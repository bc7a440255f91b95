#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schauder/basis.hpp"
#include "schauder/multi_index.hpp"
#include "schauder/sequence_spaces.hpp"

namespace schauder {

// ---------------------------------------------------------------------------
// Hermite

/// Physicists' Hermite polynomial H_n(x) by H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_poly(int n, double x);
/// H_n'(x) = 2n H_{n-1}(x).
double hermite_poly_derivative(int n, double x);
/// Normalization c_n = (2^n n! sqrt(pi))^{-1/2}.
double hermite_normalization(int n);
/// Normalized Hermite function h_n(x) = c_n H_n(x) exp(-x^2/2), evaluated by the
/// orthonormal three-term recurrence.
double hermite_fn(int n, double x);
/// Tensor product of 1-d Hermite functions; dim(x) must equal the length of n.
double hermite_fn(const MultiIndex& n, const Point& x);
/// h_0(x), ..., h_{max_order}(x).
std::vector<double> hermite_fn_table(int max_order, double x);

/// Dimension, order bound and quadrature size of a tensor Hermite expansion.
struct HermiteContext {
  int dim = 1;
  int max_order = 32;  ///< |n| <= max_order
  int nodes = 0;       ///< Gauss-Hermite nodes per axis; 0 picks max(40, 2 max_order + 10)

  int node_count() const;
  void validate() const;
};

/// Hermite functions h_n, n in N_0^d (d = 1 or 2), |n| <= max_order, in graded order.
/// f^(n) = integral f h_n is computed with the tensor Gauss-Hermite rule whose
/// weights already absorb exp(|x|^2), so f h_n is sampled directly.
class HermiteBasis final : public BasisFamily {
 public:
  explicit HermiteBasis(HermiteContext ctx = {});

  std::string name() const override { return "hermite"; }
  IndexSetKind index_set() const override { return IndexSetKind::GradedN0d; }
  const Domain& domain() const override { return domain_; }
  std::size_t size() const override { return indices_.size(); }
  MultiIndex index(std::size_t position) const override { return indices_.at(position); }

  Scalar element(std::size_t position, const Point& x) const override;
  ValueVector coefficient(const FunctionBundle& f, std::size_t position) const override;
  std::vector<ValueVector> coefficients(const FunctionBundle& f, std::size_t count) const override;
  double tolerance() const override { return 1e-8; }
  /// Uniform grid on [-6, 6]^d.
  std::vector<Point> evaluation_grid(std::size_t count) const override;

  const HermiteContext& context() const noexcept { return ctx_; }
  std::size_t position_of(const MultiIndex& n) const;

 private:
  std::vector<ValueVector> samples(const FunctionBundle& f) const;
  ValueVector reduce(const std::vector<ValueVector>& samples, const MultiIndex& n) const;

  HermiteContext ctx_;
  std::vector<MultiIndex> indices_;
  Domain domain_;
  std::vector<double> nodes_;
  std::vector<double> weights_;                  ///< scaled Gauss-Hermite weights
  std::vector<std::vector<double>> fn_table_;    ///< fn_table_[i][n] = h_n(nodes_[i])
};

/// f^(n) with a context sized for n.
ValueVector hermite_coefficient(const FunctionBundle& f, const MultiIndex& n);

/// Grid for Schwartz seminorms: `points` per axis, uniform on [-half_width, half_width]^d.
struct SchwartzGrid {
  double half_width = 10.0;
  std::size_t points = 2001;
};

/// Grid maximum of p_alpha(d^beta f(x)) (1 + |x|^2)^{l/2} over |beta| <= l, one
/// value per seminorm.  A lower bound for |f|_{l,alpha}.  Every partial with
/// |beta| <= l must be present in the bundle, otherwise InputError.
std::vector<double> schwartz_seminorm(const FunctionBundle& f, int dim, int l, const ValueSpace& space,
                                      const SchwartzGrid& grid = {});

/// |H_n(x)| <= C (1 + |x|^2)^{j/2} with j = |n| and C = prod_i (sum of |coefficients of H_{n_i}|).
struct HermitePolynomialBound {
  int j = 0;
  double C = 1.0;
};
HermitePolynomialBound hermite_polynomial_bound(const MultiIndex& n);

struct TailBound {
  std::vector<double> lhs;  ///< per seminorm
  std::vector<double> rhs;
  bool ok = true;
};

/// Compares p_alpha(int_{[-k,k]^d} f h_n - int_{[-m,m]^d} f h_n) against
/// 2^d C_n C |f|_{j,alpha} ((1 - e^{-k^2/2})^d - (1 - e^{-m^2/2})^d), where |f|_{j,alpha}
/// is taken as the zero-order term sup p_alpha(f(x)) (1 + |x|^2)^{j/2} on `grid`.
/// ok iff lhs <= rhs (1 + 1e-6) for every seminorm.
TailBound hermite_tail_bound_check(const FunctionBundle& f, const MultiIndex& n, int k, int m,
                                   const ValueSpace& space, const SchwartzGrid& grid = {});

// ---------------------------------------------------------------------------
// Fourier

/// Grid size N per axis of the trapezoid rule on [-pi, pi)^d.
struct PeriodicContext {
  int dim = 1;
  int grid = 0;  ///< 0 picks max(64, 4 max|n| + 1)

  /// Throws InputError if N < 2 |n|_inf + 1.
  void require_exact(const MultiIndex& n) const;
};

/// e^{i<n,x>}, n in Z^d (d = 1..3), |n| <= max_order, graded.
class FourierBasis final : public BasisFamily {
 public:
  FourierBasis(int dim = 1, int max_order = 32, int grid = 0);

  std::string name() const override { return "fourier"; }
  IndexSetKind index_set() const override { return IndexSetKind::GradedZd; }
  const Domain& domain() const override { return domain_; }
  std::size_t size() const override { return indices_.size(); }
  MultiIndex index(std::size_t position) const override { return indices_.at(position); }

  Scalar element(std::size_t position, const Point& x) const override;
  ValueVector coefficient(const FunctionBundle& f, std::size_t position) const override;
  std::vector<ValueVector> coefficients(const FunctionBundle& f, std::size_t count) const override;
  double tolerance() const override { return 1e-12; }
  /// Uniform grid on [-pi, pi]^d.
  std::vector<Point> evaluation_grid(std::size_t count) const override;

  const PeriodicContext& context() const noexcept { return ctx_; }
  std::size_t position_of(const MultiIndex& n) const;

 private:
  std::vector<ValueVector> samples(const FunctionBundle& f) const;
  ValueVector reduce(const std::vector<ValueVector>& samples, const MultiIndex& n) const;

  PeriodicContext ctx_;
  std::vector<MultiIndex> indices_;
  Domain domain_;
  std::vector<Scalar> roots_;  ///< roots_[r] = exp(-2 pi i r / N)
};

/// f^(n) = (2 pi)^{-d} integral f e^{-i<n,x>}.  grid = 0 picks the default size.
ValueVector fourier_coefficient(const FunctionBundle& f, const MultiIndex& n, int dim, int grid = 0);
/// sum_{|n| <= k} f^(n) e^{i<n,x>}.
ValueVector fourier_partial_sum(const FunctionBundle& f, int k, const Point& x);

// ---------------------------------------------------------------------------
// Taylor

/// Disc D_r(z0) and the contour used for the coefficients.
struct DiscContext {
  Scalar center{};
  double radius = 1.0;       ///< r, may be +inf
  double contour = 0.0;      ///< rho; 0 picks min(1, r/2)
  int contour_nodes = 0;     ///< N_c; 0 picks the smallest power of two >= max(64, 4 n_max)

  double rho() const;
  int node_count(int max_order) const;
  /// Throws InputError unless 0 < rho < r and N_c is a power of two >= 4 max_order.
  void validate(int max_order) const;
};

/// c_n = (1/(N_c rho^n)) sum_j f(z0 + rho w^j) w^{-jn}, w = e^{2 pi i / N_c}, n = 0..n_max.
std::vector<ValueVector> taylor_coefficients(const FunctionBundle& f, const DiscContext& ctx, int n_max);

/// (z - z0)^n on D_r(z0).  Points are (Re z, Im z).
class TaylorBasis final : public BasisFamily {
 public:
  explicit TaylorBasis(DiscContext ctx = {}, int max_order = 32);

  std::string name() const override { return "taylor"; }
  IndexSetKind index_set() const override { return IndexSetKind::Linear; }
  const Domain& domain() const override { return domain_; }
  std::size_t size() const override { return static_cast<std::size_t>(max_order_) + 1; }
  MultiIndex index(std::size_t position) const override { return {static_cast<int>(position)}; }
  int grade(std::size_t position) const override { return static_cast<int>(position); }

  Scalar element(std::size_t position, const Point& x) const override;
  ValueVector coefficient(const FunctionBundle& f, std::size_t position) const override;
  std::vector<ValueVector> coefficients(const FunctionBundle& f, std::size_t count) const override;
  double tolerance() const override { return 1e-12; }
  /// Polar grid on the closed disc of radius rho.
  std::vector<Point> evaluation_grid(std::size_t count) const override;

  const DiscContext& context() const noexcept { return ctx_; }

 private:
  DiscContext ctx_;
  int max_order_;
  Domain domain_;
};

/// Central-difference value of (1/2)(d/dx + i d/dy) f at z.
ValueVector cr_residual(const FunctionBundle& f, Scalar z, double h = 1e-4);

// ---------------------------------------------------------------------------

enum class SpectralKind { Hermite, Fourier };

/// The coefficient family (f^(n)) for |n| <= n_max as a sequence in s(N_0^d) or s(Z^d).
TruncatedSequence to_s_space(SpectralKind kind, const FunctionBundle& f, int n_max, int dim = 1);

}  // namespace schauder
