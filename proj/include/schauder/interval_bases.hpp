#pragma once

#include <cstddef>
#include <vector>

#include "schauder/basis.hpp"
#include "schauder/piecewise_polynomial.hpp"

namespace schauder {

// ---------------------------------------------------------------------------
// Haar system on [0, 1]

/// h_n(x) for n >= 1.  h_1 = 1; h_{2^k + j} is +1 on [(2j-2)/2^{k+1}, (2j-1)/2^{k+1}),
/// -1 on [(2j-1)/2^{k+1}, 2j/2^{k+1}) and 0 elsewhere (so h_n(1) = 0 for n >= 2).
double haar_eval(std::size_t n, double x);

/// Level k and shift j of n = 2^k + j, 1 <= j <= 2^k (n >= 2).
void haar_level(std::size_t n, int& level, std::size_t& shift);

/// Haar system h_1..h_N with the dual functionals lambda_n(f) = 2^k integral of f h_n
/// (n = 2^k + j; lambda_1 is the plain integral), so that lambda_m(h_n) = delta_mn.
/// Integrals use composite Gauss-Legendre on a uniform dyadic panel grid fine
/// enough that every constancy interval of every h_n is a union of panels.
class HaarBasis final : public BasisFamily {
 public:
  explicit HaarBasis(std::size_t truncation = 64, int panels_per_half = 64, int order = 8);

  std::string name() const override { return "haar"; }
  IndexSetKind index_set() const override { return IndexSetKind::Linear; }
  const Domain& domain() const override { return domain_; }
  std::size_t size() const override { return truncation_; }
  MultiIndex index(std::size_t position) const override { return {static_cast<int>(position + 1)}; }
  int grade(std::size_t position) const override { return static_cast<int>(position + 1); }

  Scalar element(std::size_t position, const Point& x) const override;
  ValueVector coefficient(const FunctionBundle& f, std::size_t position) const override;
  std::vector<ValueVector> coefficients(const FunctionBundle& f, std::size_t count) const override;
  double tolerance() const override { return 1e-8; }
  std::vector<Point> evaluation_grid(std::size_t count) const override;

  std::size_t panel_count() const noexcept { return panel_count_; }

 private:
  struct Support {
    std::size_t plus_begin, plus_end, minus_begin, minus_end;  // panel ranges
    int level;
  };
  Support support(std::size_t n) const;
  ValueVector panel_sum(const FunctionBundle& f, std::size_t panel) const;
  ValueVector combine(const Support& s, const std::vector<ValueVector>& sums, std::size_t offset) const;

  std::size_t truncation_;
  std::size_t panel_count_;
  std::vector<double> gl_nodes_;
  std::vector<double> gl_weights_;
  Domain domain_;
};

/// The raw integral of f h_n over [0, 1], integrated piecewise on the constancy
/// intervals.  HaarBasis::coefficient is this value times 2^k.
ValueVector haar_coefficient(const FunctionBundle& f, std::size_t n);

/// (integral over [0,1] of |f - g|^p)^{1/p} measured with the sup seminorm of the
/// value vectors.  Panels break at every given breakpoint and are subdivided
/// evenly; pass the dyadic breakpoints of a Haar partial sum g.
double lp_error(const FunctionBundle& f, const FunctionBundle& g, double p,
                const std::vector<double>& breakpoints = {}, int panels_per_cell = 16);

/// The 2^level + 1 dyadic points of [0, 1].
std::vector<double> dyadic_breakpoints(int level);

// ---------------------------------------------------------------------------
// Schauder hat functions over a dense sequence

/// Finite prefix t_0 = a, t_1 = b, t_2, ... of a dense sequence in [a, b].
class DenseSequence {
 public:
  /// Throws InputError unless t_0 = a, t_1 = b, all points distinct and inside [a, b].
  DenseSequence(double a, double b, std::vector<double> points);

  /// a, b, then midpoints level by level: a + (b-a) * (1/2, 1/4, 3/4, 1/8, ...).
  static DenseSequence dyadic(double a, double b, std::size_t count);

  /// a, b, then a + (b-a) * frac(n g) for n = 1, 2, ... with g the golden ratio conjugate.
  static DenseSequence golden(double a, double b, std::size_t count);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t n) const { return points_[n]; }
  const std::vector<double>& points() const noexcept { return points_; }

 private:
  double a_, b_;
  std::vector<double> points_;
};

/// Hat function of the partition T at node j (boundary hats are one-sided).
PiecewisePolynomial hat_function(const std::vector<double>& partition, std::size_t j);

/// phi_n for the sequence: the boundary hats of (t_0, t_1) for n in {0, 1},
/// otherwise the hat at t_n of the sorted partition {t_0, ..., t_n}.
PiecewisePolynomial schauder_hat(const DenseSequence& seq, std::size_t n);

/// Iterated antiderivative, k times.
PiecewisePolynomial antiderivative(const PiecewisePolynomial& p, int times = 1);

/// Schauder hat basis phi_0..phi_{N-1} of C([a, b]).
class HatBasis final : public BasisFamily {
 public:
  explicit HatBasis(DenseSequence seq);

  std::string name() const override { return "hat"; }
  IndexSetKind index_set() const override { return IndexSetKind::Linear; }
  const Domain& domain() const override { return domain_; }
  std::size_t size() const override { return hats_.size(); }
  MultiIndex index(std::size_t position) const override { return {static_cast<int>(position)}; }
  int grade(std::size_t position) const override { return static_cast<int>(position); }

  Scalar element(std::size_t position, const Point& x) const override;
  ValueVector coefficient(const FunctionBundle& f, std::size_t position) const override;
  /// The interpolatory recursion lambda_{n+1} = f(t_{n+1}) - sum_{k<=n} lambda_k phi_k(t_{n+1}).
  std::vector<ValueVector> coefficients(const FunctionBundle& f, std::size_t count) const override;
  double tolerance() const override { return 1e-12; }
  std::vector<Point> evaluation_grid(std::size_t count) const override;

  const DenseSequence& sequence() const noexcept { return seq_; }
  const PiecewisePolynomial& hat(std::size_t n) const { return hats_.at(n); }

 private:
  DenseSequence seq_;
  std::vector<PiecewisePolynomial> hats_;
  Domain domain_;
};

/// lambda_n^E(f) for the hat basis of `seq`.
ValueVector hat_coefficient(const DenseSequence& seq, const FunctionBundle& f, std::size_t n);

// ---------------------------------------------------------------------------
// Integrated hats: basis of C^k([a, b])

/// f_n = (x - a)^n / n! for n < k, the k-fold antiderivative of phi_{n-k} otherwise.
PiecewisePolynomial ck_basis_element(const DenseSequence& seq, int k, std::size_t n);

class CkBasis final : public BasisFamily {
 public:
  CkBasis(DenseSequence seq, int smoothness);

  std::string name() const override { return "ck"; }
  IndexSetKind index_set() const override { return IndexSetKind::Linear; }
  const Domain& domain() const override { return hats_.domain(); }
  std::size_t size() const override { return levels_.size(); }
  MultiIndex index(std::size_t position) const override { return {static_cast<int>(position)}; }
  int grade(std::size_t position) const override { return static_cast<int>(position); }

  Scalar element(std::size_t position, const Point& x) const override;
  /// Carries the derivatives 1..k of the element.
  ScalarHandle element_handle(std::size_t position) const override;
  /// mu_n(f) = f^{(n)}(a) for n < k, lambda_{n-k}(f^{(k)}) otherwise.  Requires the
  /// derivative handles up to order k in the bundle.
  ValueVector coefficient(const FunctionBundle& f, std::size_t position) const override;
  std::vector<ValueVector> coefficients(const FunctionBundle& f, std::size_t count) const override;
  double tolerance() const override { return 1e-12; }
  std::vector<Point> evaluation_grid(std::size_t count) const override {
    return hats_.evaluation_grid(count);
  }

  int smoothness() const noexcept { return k_; }
  /// levels(n)[i] is the i-th derivative of f_n, i = 0..k.
  const std::vector<PiecewisePolynomial>& levels(std::size_t n) const { return levels_.at(n); }

 private:
  HatBasis hats_;
  int k_;
  std::vector<std::vector<PiecewisePolynomial>> levels_;
};

/// mu_n^E(f) given the derivative handles f, f', ..., f^{(k)} (index i = order).
ValueVector ck_coefficient(const DenseSequence& seq, int k, const std::vector<VectorFn>& derivatives,
                           std::size_t n);

}  // namespace schauder
