#include <doctest.h>

#include <cmath>
#include <numbers>

#include "schauder/basis.hpp"
#include "schauder/errors.hpp"
#include "schauder/interval_bases.hpp"
#include "schauder/multi_index.hpp"
#include "schauder/quadrature.hpp"
#include "schauder/spectral_bases.hpp"
#include "../support.hpp"

using namespace schauder;
using testing_support::max_diff;
using testing_support::scalar_fn;

namespace {

ScalarHandle handle(std::function<double(double)> f) {
  return {[f = std::move(f)](const Point& x) { return Scalar(f(x[0])); }, {}};
}

}  // namespace

TEST_CASE("graded enumeration") {
  const auto n0 = enumerate_n0d(2, 2);
  REQUIRE(n0.size() == 6);
  CHECK(n0[0] == MultiIndex{0, 0});
  CHECK(n0[1] == MultiIndex{0, 1});
  CHECK(n0[2] == MultiIndex{1, 0});
  CHECK(n0[5] == MultiIndex{2, 0});
  const auto z1 = enumerate_zd(1, 2);
  REQUIRE(z1.size() == 5);
  CHECK(z1[1] == MultiIndex{-1});
  CHECK(z1[2] == MultiIndex{1});
  CHECK(enumerate_zd(2, 1).size() == 5);
  CHECK(grade(MultiIndex{-2, 3}) == 5);
  CHECK(euclidean_norm_sq(MultiIndex{-2, 3}) == 13.0);
  for (int d = 1; d <= 3; ++d) {
    const auto idx = enumerate_zd(d, 4);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) CHECK(grade(idx[i]) <= grade(idx[i + 1]));
  }
}

TEST_CASE("partial sums") {
  const HatBasis hat(DenseSequence::dyadic(0.0, 1.0, 17));
  const ValueVector v = partial_sum(hat, scalar_fn([](double x) { return x; }), 1, Point(0.3));
  CHECK(std::abs(v[0] - 0.3) <= 1e-15);

  const FunctionBundle zero([](const Point&) { return ValueVector(2); });
  const HaarBasis haar(32);
  for (int k : {1, 5, 32}) CHECK(partial_sum(haar, zero, k, Point(0.4)).is_zero());

  const FourierBasis fourier(1, 4);
  const ValueVector c = partial_sum(fourier, scalar_fn([](double x) { return std::cos(x); }), 1, Point(0.0));
  CHECK(std::abs(c[0] - 1.0) <= 1e-14);
}

TEST_CASE("projection algebra check") {
  const HaarBasis haar(32);
  const ValueSpace e = ValueSpace::real_sup(1);
  const FunctionBundle x2 = scalar_fn([](double x) { return x * x; });
  const auto grid = haar.evaluation_grid(101);
  CHECK(projection_algebra_check(haar, e, x2, 8, 4, grid) <= 1e-10);
  CHECK(projection_algebra_check(haar, e, x2, 6, 6, grid) <= 1e-10);
  const HatBasis hat(DenseSequence::dyadic(0.0, 1.0, 33));
  const FunctionBundle s = scalar_fn([](double x) { return std::sin(3 * x); });
  CHECK(projection_algebra_check(hat, e, s, 0, 7, hat.evaluation_grid(101)) == 0.0);
}

TEST_CASE("biorthogonality examples") {
  const HatBasis hat(DenseSequence::dyadic(0.0, 1.0, 17));
  CHECK(std::abs(biorthogonality_check(hat, 3, 3) - 1.0) <= 1e-12);
  const HaarBasis haar(16);
  CHECK(std::abs(biorthogonality_check(haar, 1, 4)) <= 1e-12);
  const HermiteBasis hermite({1, 8, 0});
  CHECK(std::abs(biorthogonality_check(hermite, 0, 0) - 1.0) <= 1e-8);
}

TEST_CASE("convergence report") {
  const HatBasis hat(DenseSequence::dyadic(0.0, 1.0, 17));
  const ValueSpace e = ValueSpace::real_sup(1);
  const ScalarHandle f2 = hat.element_handle(2);
  const FunctionBundle b = lift(f2);
  for (const auto& row : convergence_report(hat, e, b, {2, 3, 8}, ErrorMode::grid_sup()))
    CHECK(row.errors[0] <= hat.tolerance());

  const FourierBasis fourier(1, 4);
  const auto rows = convergence_report(fourier, e, scalar_fn([](double x) { return std::cos(x); }), {0, 1, 2},
                                       ErrorMode::grid_sup());
  CHECK(std::abs(rows[0].errors[0] - 1.0) <= 1e-12);
  CHECK(rows[1].errors[0] <= 1e-12);
  CHECK(rows[2].errors[0] <= 1e-12);

  CHECK_THROWS_AS(convergence_report(hat, e, b, {}, ErrorMode::grid_sup()), InputError);
  CHECK_THROWS_AS(convergence_report(hat, e, b, {3, 2}, ErrorMode::grid_sup()), InputError);
  CHECK_THROWS_AS(convergence_report(fourier, e, b, {1}, ErrorMode::lp(1.0)), InputError);
}

TEST_CASE("finite-rank elements") {
  const FiniteRankElement one({{handle([](double x) { return x; }), ValueVector{1.0, 2.0}}});
  const ValueVector at_half = finite_rank_apply(one, point_evaluation(Point(0.5)));
  CHECK(at_half == ValueVector{0.5, 1.0});

  const FiniteRankElement two({{handle([](double x) { return x; }), ValueVector{1.0, 2.0}},
                               {handle([](double x) { return x * x; }), ValueVector{-1.0, 3.0}}});
  CHECK(finite_rank_apply(two, [](const ScalarHandle&) { return Scalar(0.0); }).is_zero());

  const FiniteRankElement pair({{handle([](double) { return 1.0; }), ValueVector{1.0, 0.0}},
                                {handle([](double x) { return x; }), ValueVector{0.0, 1.0}}});
  const ScalarFunctional integral = [](const ScalarHandle& f) {
    return integrate_interval([&f](const Point& x) { return ValueVector{f(x)}; }, 0.0, 1.0)[0];
  };
  const ValueVector r = finite_rank_apply(pair, integral);
  CHECK(max_diff(r, ValueVector{1.0, 0.5}) <= 1e-14);

  const FiniteRankElement sq({{handle([](double x) { return x * x; }), ValueVector{3.0}}});
  CHECK(tensor_as_function(sq, Point(2.0)) == ValueVector{12.0});
  const FiniteRankElement zero({{handle([](double x) { return x; }), ValueVector(1)}});
  CHECK(tensor_as_function(zero, Point(0.7)).is_zero());
  CHECK_THROWS_AS(FiniteRankElement({}), InputError);
}

TEST_CASE("tensor evaluation and the point-evaluation functional agree bitwise") {
  const FiniteRankElement e({{handle([](double x) { return std::sin(x); }), ValueVector{1.0, Scalar(0, 2)}},
                             {handle([](double x) { return std::exp(x); }), ValueVector{-0.3, 0.7}}});
  for (double x : {-1.3, 0.0, 0.1, 2.9}) {
    CHECK(tensor_as_function(e, Point(x)) == finite_rank_apply(e, point_evaluation(Point(x))));
  }
}

TEST_CASE("materialized partial sums match partial_sum") {
  const FunctionBundle f([](const Point& x) {
    return ValueVector{std::exp(x[0]), Scalar(std::sin(5 * x[0]), x[0])};
  });
  const HatBasis hat(DenseSequence::dyadic(0.0, 1.0, 40));
  const HaarBasis haar(40);
  auto gen = testing_support::rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const BasisFamily* b : {static_cast<const BasisFamily*>(&hat), static_cast<const BasisFamily*>(&haar)}) {
    for (int k : {1, 7, 20}) {
      const auto coeffs = expansion_coefficients(*b, f, k);
      const FunctionBundle g = materialize(*b, coeffs, coeffs.size()).as_function();
      for (int i = 0; i < 50; ++i) {
        const Point x(u(gen));
        CHECK(max_diff(g(x), partial_sum(*b, f, k, x)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("partial sums are linear in the function") {
  const HatBasis hat(DenseSequence::dyadic(0.0, 1.0, 33));
  const HermiteBasis hermite({1, 10, 0});
  auto gen = testing_support::rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = u(gen), p = u(gen), q = u(gen);
    const FunctionBundle f = scalar_fn([p](double x) { return std::exp(-x * x) * std::cos(p * x); });
    const FunctionBundle g = scalar_fn([q](double x) { return std::exp(-x * x / 2) * (x - q); });
    const FunctionBundle h = combine(a, f, g);
    for (const BasisFamily* b : {static_cast<const BasisFamily*>(&hat), static_cast<const BasisFamily*>(&hermite)}) {
      const Point x(b == &hat ? std::abs(u(gen)) / 2 : u(gen));
      const ValueVector lhs = partial_sum(*b, h, 9, x);
      const ValueVector rhs = axpy(a, partial_sum(*b, f, 9, x), partial_sum(*b, g, 9, x));
      CHECK(max_diff(lhs, rhs) <= 1e-10);
    }
  }
}

TEST_CASE("vector and scalar coefficients agree") {
  const HaarBasis haar(16);
  const FunctionBundle xx([](const Point& x) { return ValueVector{x[0], x[0] * x[0]}; });
  CHECK(vector_scalar_consistency(haar, xx, 2) <= 1e-12);
  const FunctionBundle c([](const Point&) { return ValueVector{1.5, -2.0, Scalar(0, 1)}; });
  CHECK(vector_scalar_consistency(haar, c, 5) == 0.0);

  const HermiteBasis hermite({1, 6, 0});
  const FunctionBundle hh([](const Point& x) { return ValueVector{hermite_fn(0, x[0]), hermite_fn(1, x[0])}; });
  CHECK(vector_scalar_consistency(hermite, hh, 1) <= 1e-10);
  const ValueVector c1 = hermite.coefficient(hh, 1);
  CHECK(max_diff(c1, ValueVector{0.0, 1.0}) <= 1e-10);
}

TEST_CASE("distinctness of the projections") {
  const HatBasis hat(DenseSequence::dyadic(0.0, 1.0, 12));
  CHECK(distinctness_margin(hat, 11) >= 0.5);
  const HaarBasis haar(12);
  CHECK(distinctness_margin(haar, 12) >= 0.5);
}
