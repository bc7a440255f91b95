#include "schauder/interval_bases.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "schauder/errors.hpp"
#include "schauder/quadrature.hpp"

namespace schauder {

// ---------------------------------------------------------------------------
// Haar

void haar_level(std::size_t n, int& level, std::size_t& shift) {
  if (n < 2) throw InputError("Haar level is defined for n >= 2");
  level = 0;
  while ((std::size_t{1} << (level + 1)) < n) ++level;  // 2^level < n <= 2^{level+1}
  shift = n - (std::size_t{1} << level);
}

double haar_eval(std::size_t n, double x) {
  if (n < 1) throw InputError("Haar index starts at 1");
  if (!(x >= 0.0 && x <= 1.0)) throw InputError("Haar functions live on [0, 1]");
  if (n == 1) return 1.0;
  int k = 0;
  std::size_t j = 0;
  haar_level(n, k, j);
  const double y = std::ldexp(x, k + 1);  // exact scaling
  const auto jj = static_cast<double>(j);
  if (y >= 2.0 * jj - 2.0 && y < 2.0 * jj - 1.0) return 1.0;
  if (y >= 2.0 * jj - 1.0 && y < 2.0 * jj) return -1.0;
  return 0.0;
}

HaarBasis::HaarBasis(std::size_t truncation, int panels_per_half, int order)
    : truncation_(truncation) {
  if (truncation_ < 1) throw InputError("Haar truncation must be at least 1");
  if (panels_per_half < 1 || (panels_per_half & (panels_per_half - 1)) != 0) {
    throw InputError("panels per half must be a power of two");
  }
  int top_level = 0;
  std::size_t shift = 0;
  if (truncation_ >= 2) haar_level(truncation_, top_level, shift);
  panel_count_ = (std::size_t{1} << (top_level + 1)) * static_cast<std::size_t>(panels_per_half);
  gauss_legendre(order, gl_nodes_, gl_weights_);
  domain_.kind = Domain::Kind::Interval;
  domain_.a = 0.0;
  domain_.b = 1.0;
}

HaarBasis::Support HaarBasis::support(std::size_t n) const {
  if (n == 1) return {0, panel_count_, panel_count_, panel_count_, 0};
  int k = 0;
  std::size_t j = 0;
  haar_level(n, k, j);
  const std::size_t w = panel_count_ >> (k + 1);
  return {(2 * j - 2) * w, (2 * j - 1) * w, (2 * j - 1) * w, 2 * j * w, k};
}

ValueVector HaarBasis::panel_sum(const FunctionBundle& f, std::size_t panel) const {
  const double h = 1.0 / static_cast<double>(panel_count_);
  const double left = static_cast<double>(panel) * h;
  ValueVector sum;
  for (std::size_t i = 0; i < gl_nodes_.size(); ++i) {
    const double x = left + 0.5 * h * (gl_nodes_[i] + 1.0);
    ValueVector v = f.value(Point{x});
    if (!v.is_finite()) throw NumericError("non-finite sample in Haar coefficient", x);
    if (i == 0) sum = ValueVector::zero(v.size());
    sum.add_scaled(0.5 * h * gl_weights_[i], v);
  }
  return sum;
}

ValueVector HaarBasis::combine(const Support& s, const std::vector<ValueVector>& sums,
                               std::size_t offset) const {
  ValueVector total = ValueVector::zero(sums[s.plus_begin - offset].size());
  for (std::size_t p = s.plus_begin; p < s.plus_end; ++p) total.add_scaled(1.0, sums[p - offset]);
  for (std::size_t p = s.minus_begin; p < s.minus_end; ++p) total.add_scaled(-1.0, sums[p - offset]);
  total *= std::ldexp(1.0, s.level);
  return total;
}

Scalar HaarBasis::element(std::size_t position, const Point& x) const {
  require_position(position);
  return haar_eval(position + 1, x[0]);
}

ValueVector HaarBasis::coefficient(const FunctionBundle& f, std::size_t position) const {
  require_position(position);
  const Support s = support(position + 1);
  const std::size_t end = std::max(s.plus_end, s.minus_end);
  std::vector<ValueVector> sums;
  sums.reserve(end - s.plus_begin);
  for (std::size_t p = s.plus_begin; p < end; ++p) sums.push_back(panel_sum(f, p));
  return combine(s, sums, s.plus_begin);
}

std::vector<ValueVector> HaarBasis::coefficients(const FunctionBundle& f, std::size_t count) const {
  if (count > truncation_) throw InputError("haar: more coefficients requested than the truncation");
  std::vector<ValueVector> out;
  if (count == 0) return out;
  std::vector<ValueVector> sums;
  sums.reserve(panel_count_);
  for (std::size_t p = 0; p < panel_count_; ++p) sums.push_back(panel_sum(f, p));
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) out.push_back(combine(support(n), sums, 0));
  return out;
}

std::vector<Point> HaarBasis::evaluation_grid(std::size_t count) const {
  count = std::max<std::size_t>(count, 2);
  std::vector<Point> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return out;
}

ValueVector haar_coefficient(const FunctionBundle& f, std::size_t n) {
  if (n < 1) throw InputError("Haar index starts at 1");
  ValueVector dual = HaarBasis(std::max<std::size_t>(n, 64)).coefficient(f, n - 1);
  if (n >= 2) {
    int k = 0;
    std::size_t j = 0;
    haar_level(n, k, j);
    dual *= std::ldexp(1.0, -k);
  }
  return dual;
}

std::vector<double> dyadic_breakpoints(int level) {
  if (level < 0 || level > 30) throw InputError("dyadic level out of range");
  const std::size_t cells = std::size_t{1} << level;
  std::vector<double> out;
  for (std::size_t i = 0; i <= cells; ++i) out.push_back(std::ldexp(static_cast<double>(i), -level));
  return out;
}

double lp_error(const FunctionBundle& f, const FunctionBundle& g, double p,
                const std::vector<double>& breakpoints, int panels_per_cell) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("L^p error requires 1 <= p < infinity");
  if (panels_per_cell < 1) throw InputError("panels per cell must be positive");
  std::vector<double> cuts{0.0, 1.0};
  for (double b : breakpoints) {
    if (b > 0.0 && b < 1.0) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> x, w;
  gauss_legendre(8, x, w);
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double h = (cuts[c + 1] - cuts[c]) / panels_per_cell;
    for (int panel = 0; panel < panels_per_cell; ++panel) {
      const double left = cuts[c] + h * panel;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const Point pt{left + 0.5 * h * (x[i] + 1.0)};
        const ValueVector diff = f.value(pt) - g.value(pt);
        double sup = 0.0;
        for (const auto& z : diff) sup = std::max(sup, std::abs(z));
        total += 0.5 * h * w[i] * std::pow(sup, p);
      }
    }
  }
  return std::pow(total, 1.0 / p);
}

// ---------------------------------------------------------------------------
// Dense sequences and hats

DenseSequence::DenseSequence(double a, double b, std::vector<double> points)
    : a_(a), b_(b), points_(std::move(points)) {
  if (!(a_ < b_)) throw InputError("dense sequence needs a < b");
  if (points_.size() < 2 || points_[0] != a_ || points_[1] != b_) {
    throw InputError("dense sequence must start with t_0 = a, t_1 = b");
  }
  for (double t : points_) {
    if (!(t >= a_ && t <= b_)) throw InputError("dense sequence point outside [a, b]");
  }
  std::vector<double> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("dense sequence points must be pairwise distinct");
  }
}

DenseSequence DenseSequence::dyadic(double a, double b, std::size_t count) {
  if (count < 2) throw InputError("dyadic sequence needs at least the two endpoints");
  std::vector<double> pts{a, b};
  for (int level = 1; pts.size() < count; ++level) {
    const std::size_t denom = std::size_t{1} << level;
    for (std::size_t m = 1; m < denom && pts.size() < count; m += 2) {
      pts.push_back(a + (b - a) * std::ldexp(static_cast<double>(m), -level));
    }
  }
  return DenseSequence(a, b, std::move(pts));
}

DenseSequence DenseSequence::golden(double a, double b, std::size_t count) {
  if (count < 2) throw InputError("golden sequence needs at least the two endpoints");
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  std::vector<double> pts{a, b};
  for (std::size_t n = 1; pts.size() < count; ++n) {
    const double frac = std::fmod(static_cast<double>(n) * phi, 1.0);
    pts.push_back(a + (b - a) * frac);
  }
  return DenseSequence(a, b, std::move(pts));
}

PiecewisePolynomial hat_function(const std::vector<double>& partition, std::size_t j) {
  const std::size_t n = partition.size();
  if (n < 2) throw InputError("hat functions need a partition with at least two points");
  if (j >= n) throw InputError("hat index out of range");
  for (std::size_t i = 1; i < n; ++i) {
    if (!(partition[i - 1] < partition[i])) throw InputError("partition must be strictly ascending");
  }
  std::vector<double> breaks;
  std::vector<std::vector<double>> pieces;
  const double a = partition.front();
  const double b = partition.back();
  if (j > 0) {
    if (j - 1 > 0) {
      breaks.push_back(a);
      pieces.push_back({0.0});
    }
    breaks.push_back(partition[j - 1]);
    pieces.push_back({0.0, 1.0 / (partition[j] - partition[j - 1])});
  }
  breaks.push_back(partition[j]);
  if (j + 1 < n) {
    pieces.push_back({1.0, -1.0 / (partition[j + 1] - partition[j])});
    breaks.push_back(partition[j + 1]);
    if (j + 2 < n) {
      pieces.push_back({0.0});
      breaks.push_back(b);
    }
  }
  return PiecewisePolynomial(std::move(breaks), std::move(pieces));
}

PiecewisePolynomial schauder_hat(const DenseSequence& seq, std::size_t n) {
  if (n >= seq.size()) throw InputError("schauder hat index beyond the dense sequence prefix");
  if (n < 2) return hat_function({seq.a(), seq.b()}, n);
  std::vector<double> partition(seq.points().begin(), seq.points().begin() + static_cast<std::ptrdiff_t>(n) + 1);
  std::sort(partition.begin(), partition.end());
  const auto j = static_cast<std::size_t>(std::lower_bound(partition.begin(), partition.end(), seq[n]) -
                                          partition.begin());
  return hat_function(partition, j);
}

PiecewisePolynomial antiderivative(const PiecewisePolynomial& p, int times) {
  if (times < 0) throw InputError("antiderivative count must be nonnegative");
  PiecewisePolynomial out = p;
  for (int i = 0; i < times; ++i) out = out.antiderivative();
  return out;
}

HatBasis::HatBasis(DenseSequence seq) : seq_(std::move(seq)) {
  domain_.kind = Domain::Kind::Interval;
  domain_.a = seq_.a();
  domain_.b = seq_.b();
  hats_.reserve(seq_.size());
  hats_.push_back(hat_function({seq_.a(), seq_.b()}, 0));
  hats_.push_back(hat_function({seq_.a(), seq_.b()}, 1));
  // Only the neighbours of t_n in the sorted partition T_n shape phi_n.
  std::set<double> nodes{seq_.a(), seq_.b()};
  for (std::size_t n = 2; n < seq_.size(); ++n) {
    const double t = seq_[n];
    auto it = nodes.insert(t).first;
    const double left = *std::prev(it);
    const double right = *std::next(it);
    std::vector<double> partition{seq_.a()};
    if (left != seq_.a()) partition.push_back(left);
    const std::size_t j = partition.size();
    partition.push_back(t);
    if (right != seq_.b()) partition.push_back(right);
    partition.push_back(seq_.b());
    hats_.push_back(hat_function(partition, j));
  }
}

Scalar HatBasis::element(std::size_t position, const Point& x) const {
  require_position(position);
  return hats_[position](x[0]);
}

std::vector<ValueVector> HatBasis::coefficients(const FunctionBundle& f, std::size_t count) const {
  if (count > hats_.size()) throw InputError("hat: more coefficients requested than the sequence prefix");
  std::vector<ValueVector> lambda;
  lambda.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double t = seq_[n];
    ValueVector value = f.value(Point{t});
    if (!value.is_finite()) throw NumericError("non-finite sample in hat coefficient", t);
    if (n >= 2) {
      ValueVector interpolant = ValueVector::zero(value.size());
      for (std::size_t k = 0; k < n; ++k) interpolant.add_scaled(hats_[k](t), lambda[k]);
      value -= interpolant;
    }
    lambda.push_back(std::move(value));
  }
  return lambda;
}

ValueVector HatBasis::coefficient(const FunctionBundle& f, std::size_t position) const {
  require_position(position);
  return coefficients(f, position + 1).back();
}

std::vector<Point> HatBasis::evaluation_grid(std::size_t count) const {
  count = std::max<std::size_t>(count, 2);
  std::vector<double> xs(seq_.points());
  const double a = seq_.a(), b = seq_.b();
  for (std::size_t i = 0; i < count; ++i) {
    xs.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return {xs.begin(), xs.end()};
}

ValueVector hat_coefficient(const DenseSequence& seq, const FunctionBundle& f, std::size_t n) {
  return HatBasis(seq).coefficient(f, n);
}

// ---------------------------------------------------------------------------
// C^k

PiecewisePolynomial ck_basis_element(const DenseSequence& seq, int k, std::size_t n) {
  if (k < 1) throw InputError("C^k basis requires k >= 1");
  if (n < static_cast<std::size_t>(k)) {
    return PiecewisePolynomial::scaled_monomial(seq.a(), seq.b(), static_cast<int>(n));
  }
  return antiderivative(schauder_hat(seq, n - static_cast<std::size_t>(k)), k);
}

CkBasis::CkBasis(DenseSequence seq, int smoothness) : hats_(std::move(seq)), k_(smoothness) {
  if (k_ < 1) throw InputError("C^k basis requires k >= 1");
  const double a = hats_.sequence().a();
  const double b = hats_.sequence().b();
  const auto k = static_cast<std::size_t>(k_);
  for (std::size_t n = 0; n < k; ++n) {
    std::vector<PiecewisePolynomial> lv;
    for (std::size_t i = 0; i <= k; ++i) {
      lv.push_back(i <= n ? PiecewisePolynomial::scaled_monomial(a, b, static_cast<int>(n - i))
                          : PiecewisePolynomial::constant(a, b, 0.0));
    }
    levels_.push_back(std::move(lv));
  }
  for (std::size_t m = 0; m < hats_.size(); ++m) {
    std::vector<PiecewisePolynomial> chain{hats_.hat(m)};
    for (std::size_t i = 1; i <= k; ++i) chain.push_back(chain.back().antiderivative());
    std::reverse(chain.begin(), chain.end());  // chain[i] = i-th derivative of f_{m+k}
    levels_.push_back(std::move(chain));
  }
}

Scalar CkBasis::element(std::size_t position, const Point& x) const {
  require_position(position);
  return levels_[position][0](x[0]);
}

ScalarHandle CkBasis::element_handle(std::size_t position) const {
  require_position(position);
  ScalarHandle h{[this, position](const Point& x) { return Scalar(levels_[position][0](x[0])); }, {}};
  for (std::size_t i = 1; i <= static_cast<std::size_t>(k_); ++i) {
    h.derivatives.push_back(
        [this, position, i](const Point& x) { return Scalar(levels_[position][i](x[0])); });
  }
  return h;
}

std::vector<ValueVector> CkBasis::coefficients(const FunctionBundle& f, std::size_t count) const {
  if (count > size()) throw InputError("ck: more coefficients requested than the truncation");
  const auto k = static_cast<std::size_t>(k_);
  std::vector<ValueVector> out;
  const double a = hats_.sequence().a();
  for (std::size_t n = 0; n < std::min(count, k); ++n) {
    const VectorFn* d = f.derivative(static_cast<int>(n));
    if (d == nullptr) {
      throw InputError("ck: derivative of order " + std::to_string(n) + " not supplied");
    }
    ValueVector v = (*d)(Point{a});
    if (!v.is_finite()) throw NumericError("non-finite endpoint derivative", a);
    out.push_back(std::move(v));
  }
  if (count > k) {
    const VectorFn* top = f.derivative(k_);
    if (top == nullptr) {
      throw InputError("ck: derivative of order " + std::to_string(k_) + " not supplied");
    }
    auto rest = hats_.coefficients(FunctionBundle(*top), count - k);
    for (auto& v : rest) out.push_back(std::move(v));
  }
  return out;
}

ValueVector CkBasis::coefficient(const FunctionBundle& f, std::size_t position) const {
  require_position(position);
  return coefficients(f, position + 1).back();
}

ValueVector ck_coefficient(const DenseSequence& seq, int k, const std::vector<VectorFn>& derivatives,
                           std::size_t n) {
  if (k < 1) throw InputError("C^k basis requires k >= 1");
  if (derivatives.size() < static_cast<std::size_t>(k) + 1) {
    throw InputError("ck_coefficient needs the derivative handles f, f', ..., f^(k)");
  }
  FunctionBundle f(derivatives[0]);
  for (std::size_t i = 1; i < derivatives.size(); ++i) {
    f.partials[MultiIndex{static_cast<int>(i)}] = derivatives[i];
  }
  return CkBasis(seq, k).coefficient(f, n);
}

}  // namespace schauder
