#include "schauder/piecewise_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schauder/errors.hpp"

namespace schauder {

double eval_monomial(const std::vector<double>& coeffs, double s, int order) {
  const auto n = static_cast<int>(coeffs.size());
  if (order >= n) return 0.0;
  double acc = 0.0;
  for (int k = n - 1; k >= order; --k) {
    double c = coeffs[static_cast<std::size_t>(k)];
    for (int j = 0; j < order; ++j) c *= static_cast<double>(k - j);
    acc = acc * s + c;
  }
  return acc;
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breakpoints,
                                         std::vector<std::vector<double>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2) throw InputError("piecewise polynomial needs at least two breakpoints");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i])) throw InputError("breakpoints must be finite");
    if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i])) {
      throw InputError("breakpoints must be strictly ascending");
    }
  }
  if (pieces_.size() + 1 != breakpoints_.size()) {
    throw InputError("piece count must equal breakpoint count - 1");
  }
  for (const auto& p : pieces_) {
    if (p.empty()) throw InputError("every piece needs at least one coefficient");
  }
}

PiecewisePolynomial PiecewisePolynomial::constant(double a, double b, double value) {
  return PiecewisePolynomial({a, b}, {{value}});
}

PiecewisePolynomial PiecewisePolynomial::scaled_monomial(double a, double b, int n) {
  if (n < 0) throw InputError("monomial degree must be nonnegative");
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  c.back() = 1.0 / factorial;
  return PiecewisePolynomial({a, b}, {c});
}

std::size_t PiecewisePolynomial::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& p : pieces_) d = std::max(d, p.size() - 1);
  return d;
}

std::size_t PiecewisePolynomial::locate(double x) const {
  if (!(x >= left() && x <= right())) {
    throw InputError("point " + std::to_string(x) + " outside [" + std::to_string(left()) + ", " +
                     std::to_string(right()) + "]");
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  auto i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (i == 0) return 0;
  return std::min(i - 1, pieces_.size() - 1);
}

double PiecewisePolynomial::operator()(double x) const {
  const std::size_t i = locate(x);
  return eval_monomial(pieces_[i], x - breakpoints_[i]);
}

double PiecewisePolynomial::derivative_at(double x, int order) const {
  const std::size_t i = locate(x);
  return eval_monomial(pieces_[i], x - breakpoints_[i], order);
}

double PiecewisePolynomial::left_limit(std::size_t breakpoint, int order) const {
  if (breakpoint == 0 || breakpoint >= breakpoints_.size()) throw InputError("no piece ends there");
  const std::size_t i = breakpoint - 1;
  return eval_monomial(pieces_[i], breakpoints_[breakpoint] - breakpoints_[i], order);
}

double PiecewisePolynomial::right_limit(std::size_t breakpoint, int order) const {
  if (breakpoint + 1 >= breakpoints_.size()) throw InputError("no piece starts there");
  return eval_monomial(pieces_[breakpoint], 0.0, order);
}

PiecewisePolynomial PiecewisePolynomial::antiderivative() const {
  std::vector<std::vector<double>> out(pieces_.size());
  double carry = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    std::vector<double> q(p.size() + 1, 0.0);
    q[0] = carry;
    for (std::size_t k = 0; k < p.size(); ++k) q[k + 1] = p[k] / static_cast<double>(k + 1);
    carry = eval_monomial(q, breakpoints_[i + 1] - breakpoints_[i]);
    out[i] = std::move(q);
  }
  return PiecewisePolynomial(breakpoints_, std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  std::vector<std::vector<double>> out(pieces_.size());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (p.size() == 1) {
      out[i] = {0.0};
      continue;
    }
    out[i].resize(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) out[i][k - 1] = p[k] * static_cast<double>(k);
  }
  return PiecewisePolynomial(breakpoints_, std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::scaled(double a) const {
  auto out = pieces_;
  for (auto& p : out) {
    for (auto& c : p) c *= a;
  }
  return PiecewisePolynomial(breakpoints_, std::move(out));
}

std::vector<double> PiecewisePolynomial::shifted_piece(std::size_t i, double x0) const {
  const auto& p = pieces_[i];
  const double shift = x0 - breakpoints_[i];
  if (shift == 0.0) return p;
  // Taylor coefficients at the new origin: q_k = p^{(k)}(shift) / k!
  std::vector<double> q(p.size());
  double factorial = 1.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) factorial *= static_cast<double>(k);
    q[k] = eval_monomial(p, shift, static_cast<int>(k)) / factorial;
  }
  return q;
}

PiecewisePolynomial operator+(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  if (p.left() != q.left() || p.right() != q.right()) {
    throw InputError("piecewise polynomials must share their interval to be added");
  }
  std::vector<double> merged;
  std::merge(p.breakpoints_.begin(), p.breakpoints_.end(), q.breakpoints_.begin(),
             q.breakpoints_.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  std::vector<std::vector<double>> pieces;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const double x0 = merged[i];
    auto a = p.shifted_piece(p.locate(x0), x0);
    auto b = q.shifted_piece(q.locate(x0), x0);
    if (a.size() < b.size()) std::swap(a, b);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
    pieces.push_back(std::move(a));
  }
  return PiecewisePolynomial(std::move(merged), std::move(pieces));
}

double PiecewisePolynomial::max_jump(int order) const {
  double jump = 0.0;
  for (std::size_t b = 1; b + 1 < breakpoints_.size(); ++b) {
    jump = std::max(jump, std::abs(left_limit(b, order) - right_limit(b, order)));
  }
  return jump;
}

}  // namespace schauder
