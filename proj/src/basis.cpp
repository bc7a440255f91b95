#include "schauder/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "schauder/errors.hpp"
#include "schauder/quadrature.hpp"

namespace schauder {

bool Domain::contains(const Point& x) const {
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!std::isfinite(x[i])) return false;
  }
  switch (kind) {
    case Kind::Interval: return x.dim() == 1 && x[0] >= a && x[0] <= b;
    case Kind::RealSpace:
    case Kind::Torus: return static_cast<int>(x.dim()) == dim;
    case Kind::Disc: return x.dim() == 2 && std::abs(x.as_complex() - center) < radius;
    case Kind::IndexSet:
      return x.dim() == 1 && x[0] == std::floor(x[0]) && x[0] >= 1.0 &&
             x[0] <= static_cast<double>(index_count);
  }
  return false;
}

std::string Domain::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Interval: os << "[" << a << ", " << b << "]"; break;
    case Kind::RealSpace: os << "R^" << dim; break;
    case Kind::Torus: os << "[-pi, pi]^" << dim; break;
    case Kind::Disc: os << "D_" << radius << "(" << center.real() << "+" << center.imag() << "i)"; break;
    case Kind::IndexSet: os << "{1.." << index_count << "}"; break;
  }
  return os.str();
}

int BasisFamily::grade(std::size_t position) const { return schauder::grade(index(position)); }

ScalarHandle BasisFamily::element_handle(std::size_t position) const {
  require_position(position);
  return ScalarHandle{[this, position](const Point& x) { return element(position, x); }, {}};
}

std::vector<ValueVector> BasisFamily::coefficients(const FunctionBundle& f, std::size_t count) const {
  std::vector<ValueVector> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(coefficient(f, n));
  return out;
}

std::size_t BasisFamily::count_up_to_rank(int rank) const {
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (grade(mid) <= rank) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void BasisFamily::require_position(std::size_t position) const {
  if (position >= size()) {
    throw InputError(name() + ": position " + std::to_string(position) + " beyond truncation " +
                     std::to_string(size()));
  }
}

void BasisFamily::require_in_domain(const Point& x) const {
  if (!domain().contains(x)) throw InputError(name() + ": point outside domain " + domain().describe());
}

FiniteRankElement::FiniteRankElement(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw InputError("finite-rank element needs at least one term");
  for (const auto& t : terms_) {
    if (t.value.size() != terms_.front().value.size()) {
      throw InputError("finite-rank element terms live in different value spaces");
    }
  }
}

FunctionBundle FiniteRankElement::as_function() const {
  auto terms = std::make_shared<const std::vector<Term>>(terms_);
  FunctionBundle out([terms](const Point& x) {
    ValueVector sum = ValueVector::zero(terms->front().value.size());
    for (const auto& t : *terms) sum.add_scaled(t.function.value(x), t.value);
    return sum;
  });
  std::size_t common = std::numeric_limits<std::size_t>::max();
  for (const auto& t : terms_) common = std::min(common, t.function.derivatives.size());
  for (std::size_t k = 1; k <= common; ++k) {
    out.partials[MultiIndex{static_cast<int>(k)}] = [terms, k](const Point& x) {
      ValueVector sum = ValueVector::zero(terms->front().value.size());
      for (const auto& t : *terms) sum.add_scaled(t.function.derivatives[k - 1](x), t.value);
      return sum;
    };
  }
  return out;
}

ScalarFunctional point_evaluation(const Point& x) {
  return [x](const ScalarHandle& f) { return f.value(x); };
}

ValueVector finite_rank_apply(const FiniteRankElement& elem, const ScalarFunctional& y) {
  ValueVector sum = ValueVector::zero(elem.value_dimension());
  for (const auto& t : elem.terms()) sum.add_scaled(y(t.function), t.value);
  return sum;
}

ValueVector tensor_as_function(const FiniteRankElement& elem, const Point& x) {
  ValueVector sum = ValueVector::zero(elem.value_dimension());
  for (const auto& t : elem.terms()) sum.add_scaled(t.function.value(x), t.value);
  return sum;
}

std::vector<ValueVector> expansion_coefficients(const BasisFamily& basis, const FunctionBundle& f,
                                                int rank) {
  return basis.coefficients(f, basis.count_up_to_rank(rank));
}

namespace {

std::size_t probe_dimension(const BasisFamily& basis, const FunctionBundle& f) {
  return f.value(basis.evaluation_grid(1).front()).size();
}

}  // namespace

FiniteRankElement materialize(const BasisFamily& basis, const std::vector<ValueVector>& coefficients,
                              std::size_t count) {
  if (count > coefficients.size()) throw InputError("not enough coefficients to materialize");
  if (coefficients.empty()) throw InputError("materialize needs the value dimension from a coefficient");
  std::vector<FiniteRankElement::Term> terms;
  if (count == 0) {
    terms.push_back({basis.element_handle(0), ValueVector::zero(coefficients.front().size())});
  }
  for (std::size_t n = 0; n < count; ++n) terms.push_back({basis.element_handle(n), coefficients[n]});
  return FiniteRankElement(std::move(terms));
}

ValueVector evaluate_expansion(const BasisFamily& basis, const std::vector<ValueVector>& coefficients,
                               std::size_t count, const Point& x) {
  if (count > coefficients.size()) throw InputError("not enough coefficients to evaluate");
  const std::size_t dim = coefficients.empty() ? 1 : coefficients.front().size();
  ValueVector sum = ValueVector::zero(dim);
  for (std::size_t n = 0; n < count; ++n) sum.add_scaled(basis.element(n, x), coefficients[n]);
  return sum;
}

ValueVector partial_sum(const BasisFamily& basis, const FunctionBundle& f, int rank, const Point& x) {
  basis.require_in_domain(x);
  const std::size_t count = basis.count_up_to_rank(rank);
  if (count == 0) return ValueVector::zero(f.value(x).size());
  return evaluate_expansion(basis, basis.coefficients(f, count), count, x);
}

namespace {

void check_rank(const BasisFamily& basis, int rank) {
  if (rank < 0 || rank > basis.max_rank()) {
    throw InputError(basis.name() + ": rank " + std::to_string(rank) + " outside [0, " +
                     std::to_string(basis.max_rank()) + "]");
  }
}

double max_seminorm(const ValueSpace& space, const ValueVector& v) {
  double m = 0.0;
  for (std::size_t a = 0; a < space.seminorm_count(); ++a) m = std::max(m, space.seminorm(a, v));
  return m;
}

/// partial sums at one point for every rank 0..max_rank, ascending accumulation.
std::vector<ValueVector> partial_sums_by_rank(const BasisFamily& basis,
                                              const std::vector<ValueVector>& coeffs, int max_rank,
                                              std::size_t dim, const Point& x) {
  std::vector<ValueVector> out;
  out.reserve(static_cast<std::size_t>(max_rank) + 1);
  ValueVector sum = ValueVector::zero(dim);
  std::size_t n = 0;
  for (int r = 0; r <= max_rank; ++r) {
    while (n < coeffs.size() && basis.grade(n) <= r) {
      sum.add_scaled(basis.element(n, x), coeffs[n]);
      ++n;
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace

double projection_algebra_check(const BasisFamily& basis, const ValueSpace& space,
                                const FunctionBundle& f, int k, int j,
                                const std::vector<Point>& points) {
  check_rank(basis, k);
  check_rank(basis, j);
  const std::size_t dim = probe_dimension(basis, f);
  const std::size_t ck = basis.count_up_to_rank(k);
  const std::size_t cj = basis.count_up_to_rank(j);
  const std::size_t cmin = std::min(ck, cj);
  std::vector<ValueVector> cf = basis.coefficients(f, std::max(ck, cj));
  if (cf.empty()) cf.push_back(ValueVector::zero(dim));
  const FunctionBundle pj = materialize(basis, cf, cj).as_function();
  std::vector<ValueVector> cg = basis.coefficients(pj, ck);
  double worst = 0.0;
  for (const auto& x : points) {
    const ValueVector lhs = ck == 0 ? ValueVector::zero(dim) : evaluate_expansion(basis, cg, ck, x);
    const ValueVector rhs = cmin == 0 ? ValueVector::zero(dim) : evaluate_expansion(basis, cf, cmin, x);
    worst = std::max(worst, max_seminorm(space, lhs - rhs));
  }
  return worst;
}

double projection_semigroup_max(const BasisFamily& basis, const ValueSpace& space,
                                const FunctionBundle& f, int max_rank,
                                const std::vector<Point>& points) {
  check_rank(basis, max_rank);
  const std::size_t dim = probe_dimension(basis, f);
  const std::size_t cmax = basis.count_up_to_rank(max_rank);
  std::vector<ValueVector> cf = basis.coefficients(f, cmax);
  if (cf.empty()) cf.push_back(ValueVector::zero(dim));

  // P_r f (x) for every rank r and point x
  std::vector<std::vector<ValueVector>> direct;
  direct.reserve(points.size());
  for (const auto& x : points) direct.push_back(partial_sums_by_rank(basis, cf, max_rank, dim, x));

  double worst = 0.0;
  for (int j = 0; j <= max_rank; ++j) {
    const FunctionBundle pj = materialize(basis, cf, basis.count_up_to_rank(j)).as_function();
    std::vector<ValueVector> cg = basis.coefficients(pj, cmax);
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto twice = partial_sums_by_rank(basis, cg, max_rank, dim, points[p]);
      for (int k = 0; k <= max_rank; ++k) {
        const auto& once = direct[p][static_cast<std::size_t>(std::min(j, k))];
        worst = std::max(worst, max_seminorm(space, twice[static_cast<std::size_t>(k)] - once));
      }
    }
  }
  return worst;
}

Scalar biorthogonality_check(const BasisFamily& basis, std::size_t n, std::size_t m) {
  basis.require_position(n);
  basis.require_position(m);
  return basis.coefficient(lift(basis.element_handle(n)), m)[0];
}

double biorthogonality_defect(const BasisFamily& basis, std::size_t count) {
  count = std::min(count, basis.size());
  double worst = 0.0;
  for (std::size_t n = 0; n < count; ++n) {
    const auto row = basis.coefficients(lift(basis.element_handle(n)), count);
    for (std::size_t m = 0; m < count; ++m) {
      const Scalar expected = m == n ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(row[m][0] - expected));
    }
  }
  return worst;
}

double distinctness_margin(const BasisFamily& basis, int max_rank) {
  check_rank(basis, max_rank);
  const auto grid = basis.evaluation_grid(257);
  const ValueSpace scalar = ValueSpace::complex_sup(1);
  double margin = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= max_rank; ++j) {
    const std::size_t first = basis.count_up_to_rank(j - 1);
    if (first >= basis.count_up_to_rank(j)) continue;  // no element of grade j
    // normalized witness f_w / sup |f_w|
    double norm = 0.0;
    for (const auto& x : grid) norm = std::max(norm, std::abs(basis.element(first, x)));
    if (norm == 0.0) return 0.0;
    const ScalarHandle raw = basis.element_handle(first);
    ScalarHandle witness{[raw, norm](const Point& x) { return raw.value(x) / norm; }, {}};
    for (const auto& d : raw.derivatives) {
      witness.derivatives.push_back([d, norm](const Point& x) { return d(x) / norm; });
    }
    const auto coeffs = basis.coefficients(lift(witness), basis.count_up_to_rank(j));
    std::vector<double> sep(static_cast<std::size_t>(j), 0.0);
    for (const auto& x : grid) {
      const auto sums = partial_sums_by_rank(basis, coeffs, j, 1, x);
      for (int k = 0; k < j; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        sep[kk] = std::max(sep[kk], scalar.seminorm(0, sums[static_cast<std::size_t>(j)] - sums[kk]));
      }
    }
    for (double s : sep) margin = std::min(margin, s);
  }
  return margin;
}

double vector_scalar_consistency(const BasisFamily& basis, const FunctionBundle& f,
                                 std::size_t position) {
  basis.require_position(position);
  const ValueVector direct = basis.coefficient(f, position);
  double worst = 0.0;
  for (std::size_t i = 0; i < direct.size(); ++i) {
    const ValueVector scalar = basis.coefficient(coordinate(f, i), position);
    worst = std::max(worst, std::abs(direct[i] - scalar[0]));
  }
  return worst;
}

std::vector<ConvergenceRow> convergence_report(const BasisFamily& basis, const ValueSpace& space,
                                               const FunctionBundle& f, const std::vector<int>& ranks,
                                               const ErrorMode& mode) {
  if (ranks.empty()) throw InputError("convergence report needs at least one rank");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    check_rank(basis, ranks[i]);
    if (i > 0 && ranks[i] <= ranks[i - 1]) throw InputError("ranks must be strictly ascending");
  }
  const int top = ranks.back();
  const std::size_t dim = probe_dimension(basis, f);
  const std::size_t alphas = space.seminorm_count();
  std::vector<ValueVector> coeffs = basis.coefficients(f, basis.count_up_to_rank(top));
  if (coeffs.empty()) coeffs.push_back(ValueVector::zero(dim));

  std::vector<ConvergenceRow> rows;
  for (int r : ranks) rows.push_back({r, std::vector<double>(alphas, 0.0)});

  if (mode.kind == ErrorMode::Kind::GridSup) {
    for (const auto& x : basis.evaluation_grid(mode.grid_points)) {
      const ValueVector fx = f.value(x);
      space.require_member(fx);
      const auto sums = partial_sums_by_rank(basis, coeffs, top, dim, x);
      for (auto& row : rows) {
        const ValueVector diff = fx - sums[static_cast<std::size_t>(row.rank)];
        for (std::size_t a = 0; a < alphas; ++a) row.errors[a] = std::max(row.errors[a], space.seminorm(a, diff));
      }
    }
    return rows;
  }

  if (basis.domain().kind != Domain::Kind::Interval) {
    throw InputError("L^p error mode requires an interval domain");
  }
  if (mode.p < 1.0) throw InputError("L^p error requires p >= 1");
  const QuadratureRule rule = gauss_legendre_rule(basis.domain().a, basis.domain().b, mode.lp_panels, 8);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Point& x = rule.nodes[i];
    const ValueVector fx = f.value(x);
    space.require_member(fx);
    const auto sums = partial_sums_by_rank(basis, coeffs, top, dim, x);
    for (auto& row : rows) {
      const ValueVector diff = fx - sums[static_cast<std::size_t>(row.rank)];
      for (std::size_t a = 0; a < alphas; ++a) {
        row.errors[a] += rule.weights[i] * std::pow(space.seminorm(a, diff), mode.p);
      }
    }
  }
  for (auto& row : rows) {
    for (auto& e : row.errors) e = std::pow(e, 1.0 / mode.p);
  }
  return rows;
}

}  // namespace schauder
