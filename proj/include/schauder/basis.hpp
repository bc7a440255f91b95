#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "schauder/functions.hpp"
#include "schauder/multi_index.hpp"
#include "schauder/value_space.hpp"

namespace schauder {

/// Where basis elements live and where expansions are checked.
struct Domain {
  enum class Kind { Interval, RealSpace, Torus, Disc, IndexSet };

  Kind kind = Kind::Interval;
  int dim = 1;
  double a = 0.0;  ///< interval left end
  double b = 1.0;  ///< interval right end
  Scalar center{};  ///< disc center
  double radius = 0.0;  ///< disc radius (may be +inf)
  double sample_radius = 0.0;  ///< radius of the closed disc used for checks
  std::size_t index_count = 0;  ///< index sets: points 1..index_count

  bool contains(const Point& x) const;
  std::string describe() const;
};

/// Uniform contract of a truncated Schauder basis (f_n) with coefficient
/// functionals (lambda_n).  Elements are addressed by their position in the
/// enumeration of the index set; grade(position) is nondecreasing and the
/// partial sum of rank k collects every position of grade <= k.
class BasisFamily {
 public:
  virtual ~BasisFamily() = default;

  virtual std::string name() const = 0;
  virtual IndexSetKind index_set() const = 0;
  virtual const Domain& domain() const = 0;
  /// Number of enumerated elements (the truncation).
  virtual std::size_t size() const = 0;
  virtual MultiIndex index(std::size_t position) const = 0;
  virtual int grade(std::size_t position) const;

  virtual Scalar element(std::size_t position, const Point& x) const = 0;
  /// Element as a scalar handle; bases that know derivatives attach them.
  virtual ScalarHandle element_handle(std::size_t position) const;

  /// lambda_n^E(f), componentwise with a shared rule.
  virtual ValueVector coefficient(const FunctionBundle& f, std::size_t position) const = 0;
  /// lambda_0..lambda_{count-1}; bases override this to share samples.  The
  /// result must equal calling coefficient() for every position.
  virtual std::vector<ValueVector> coefficients(const FunctionBundle& f, std::size_t count) const;

  /// Biorthogonality / consistency tolerance: 1e-12 exact, 1e-8 quadrature.
  virtual double tolerance() const = 0;
  /// Deterministic evaluation grid of roughly `count` points in the domain.
  virtual std::vector<Point> evaluation_grid(std::size_t count) const = 0;

  /// Number of positions with grade <= rank (0 when rank < lowest grade).
  std::size_t count_up_to_rank(int rank) const;
  int max_rank() const { return grade(size() - 1); }

  void require_position(std::size_t position) const;
  void require_in_domain(const Point& x) const;
};

using BasisPtr = std::shared_ptr<const BasisFamily>;

/// Sum of f_i (x) e_i over a finite list of terms.
class FiniteRankElement {
 public:
  struct Term {
    ScalarHandle function;
    ValueVector value;
  };

  /// Throws InputError on an empty list or mixed value dimensions.
  explicit FiniteRankElement(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t value_dimension() const noexcept { return terms_.front().value.size(); }

  /// x -> sum f_i(x) e_i as a bundle; derivative k is attached when every term has it.
  FunctionBundle as_function() const;

 private:
  std::vector<Term> terms_;
};

/// A functional on scalar functions.
using ScalarFunctional = std::function<Scalar(const ScalarHandle&)>;

/// The point evaluation delta_x.
ScalarFunctional point_evaluation(const Point& x);

/// sum y(f_i) e_i.
ValueVector finite_rank_apply(const FiniteRankElement& elem, const ScalarFunctional& y);
/// sum f_i(x) e_i; bit-identical to finite_rank_apply(elem, point_evaluation(x)).
ValueVector tensor_as_function(const FiniteRankElement& elem, const Point& x);

/// Coefficients lambda_n(f) for every position of grade <= rank.
std::vector<ValueVector> expansion_coefficients(const BasisFamily& basis, const FunctionBundle& f,
                                                int rank);

/// P_k f materialized from precomputed coefficients (first `count` positions).
/// A zero-length expansion is represented by the single term 0 * f_0.
FiniteRankElement materialize(const BasisFamily& basis, const std::vector<ValueVector>& coefficients,
                              std::size_t count);

/// sum_{grade(n) <= rank} c_n f_n(x), accumulated in ascending position.
ValueVector evaluate_expansion(const BasisFamily& basis, const std::vector<ValueVector>& coefficients,
                               std::size_t count, const Point& x);

/// (P_k f)(x).
ValueVector partial_sum(const BasisFamily& basis, const FunctionBundle& f, int rank, const Point& x);

/// max over points and seminorms of p(P_k P_j f (x) - P_min(j,k) f (x)).  P_j f is
/// re-expanded as an exact function handle.
double projection_algebra_check(const BasisFamily& basis, const ValueSpace& space,
                                const FunctionBundle& f, int k, int j,
                                const std::vector<Point>& points);

/// Same quantity maximized over all k, j <= max_rank, reusing coefficient tables.
double projection_semigroup_max(const BasisFamily& basis, const ValueSpace& space,
                                const FunctionBundle& f, int max_rank,
                                const std::vector<Point>& points);

/// lambda_m(f_n).
Scalar biorthogonality_check(const BasisFamily& basis, std::size_t n, std::size_t m);
/// max |lambda_m(f_n) - delta_mn| over n, m < count.
double biorthogonality_defect(const BasisFamily& basis, std::size_t count);

/// For each k < j <= max_rank: min over witnesses of p(P_j f_w - P_k f_w), with f_w the
/// first element of grade j.  Returns the smallest such separation.
double distinctness_margin(const BasisFamily& basis, int max_rank);

/// max_i |lambda_n(f)_i - lambda_n(e'_i o f)|.
double vector_scalar_consistency(const BasisFamily& basis, const FunctionBundle& f,
                                 std::size_t position);

struct ConvergenceRow {
  int rank = 0;
  std::vector<double> errors;  ///< one per seminorm
};

/// Error measure used by convergence_report.
struct ErrorMode {
  enum class Kind { GridSup, Lp };
  Kind kind = Kind::GridSup;
  double p = 2.0;
  std::size_t grid_points = 1001;  ///< GridSup
  int lp_panels = 4096;  ///< Lp: uniform composite Gauss-Legendre panels on the interval

  static ErrorMode grid_sup(std::size_t points = 1001) { return {Kind::GridSup, 2.0, points, 4096}; }
  static ErrorMode lp(double p, int panels = 4096) { return {Kind::Lp, p, 1001, panels}; }
};

/// error(k) per seminorm, rows in rank order.  Throws InputError on empty or
/// non-ascending ranks, or Lp mode on a non-interval domain.
std::vector<ConvergenceRow> convergence_report(const BasisFamily& basis, const ValueSpace& space,
                                               const FunctionBundle& f, const std::vector<int>& ranks,
                                               const ErrorMode& mode);

}  // namespace schauder
