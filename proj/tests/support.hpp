#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "schauder/functions.hpp"
#include "schauder/value_space.hpp"

namespace testing_support {

using schauder::FunctionBundle;
using schauder::Point;
using schauder::Scalar;
using schauder::ValueVector;

/// One-component real function of the first coordinate.
inline FunctionBundle scalar_fn(std::function<double(double)> f) {
  return FunctionBundle([f = std::move(f)](const Point& x) { return ValueVector{Scalar(f(x[0]))}; });
}

/// Componentwise maximum of |a_i - b_i|.
inline double max_diff(const ValueVector& a, const ValueVector& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(20240611u + salt); }

inline ValueVector random_vector(std::mt19937_64& gen, std::size_t m, bool complex_field) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  ValueVector v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = Scalar(u(gen), complex_field ? u(gen) : 0.0);
  return v;
}

}  // namespace testing_support
