#pragma once

#include <cstddef>
#include <vector>

namespace schauder {

/// Exact piecewise polynomial on a partition a = b_0 < b_1 < ... < b_P = b.
/// Piece i is stored in the monomial basis of the local variable x - b_i.
/// At an interior breakpoint the piece to the right is used, at b the last
/// piece.
class PiecewisePolynomial {
 public:
  /// Throws InputError unless breakpoints are strictly ascending, finite, at
  /// least two, and there is exactly one (nonempty) coefficient tuple per piece.
  PiecewisePolynomial(std::vector<double> breakpoints, std::vector<std::vector<double>> pieces);

  static PiecewisePolynomial constant(double a, double b, double value);
  /// (x - a)^n / n! on [a, b], single piece.
  static PiecewisePolynomial scaled_monomial(double a, double b, int n);

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<std::vector<double>>& pieces() const noexcept { return pieces_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }
  double left() const noexcept { return breakpoints_.front(); }
  double right() const noexcept { return breakpoints_.back(); }
  std::size_t degree() const noexcept;

  /// Throws InputError outside [left, right].
  double operator()(double x) const;
  /// order-th derivative, evaluated with the same piece selection as operator().
  double derivative_at(double x, int order) const;
  /// One-sided derivatives at a breakpoint (left limit uses the piece ending there).
  double left_limit(std::size_t breakpoint, int order) const;
  double right_limit(std::size_t breakpoint, int order) const;

  /// Antiderivative vanishing at the left endpoint, continuous by chaining the
  /// constants of integration.
  PiecewisePolynomial antiderivative() const;
  PiecewisePolynomial derivative() const;

  PiecewisePolynomial scaled(double a) const;
  /// Sum on the merged partition; both operands must share [left, right].
  friend PiecewisePolynomial operator+(const PiecewisePolynomial& p, const PiecewisePolynomial& q);

  /// max jump of the order-th derivative over interior breakpoints.
  double max_jump(int order) const;

 private:
  std::size_t locate(double x) const;
  /// Piece i re-expanded around the point x0 in [b_i, b_{i+1}].
  std::vector<double> shifted_piece(std::size_t i, double x0) const;

  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> pieces_;
};

/// Horner evaluation of sum c_k s^k and of its order-th derivative.
double eval_monomial(const std::vector<double>& coeffs, double s, int order = 0);

}  // namespace schauder
