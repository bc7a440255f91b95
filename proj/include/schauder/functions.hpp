#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <vector>

#include "schauder/value_space.hpp"

namespace schauder {

/// A point of a basis domain: up to three real coordinates.  Points of the
/// complex disc use (Re z, Im z); points of an index set carry the index as a
/// double.
class Point {
 public:
  static constexpr std::size_t kMaxDim = 3;

  Point() = default;
  Point(double x) : coords_{x, 0.0, 0.0}, dim_(1) {}  // NOLINT: implicit on purpose
  Point(std::initializer_list<double> xs);

  static Point from_complex(Scalar z) { return Point{z.real(), z.imag()}; }

  std::size_t dim() const noexcept { return dim_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  Scalar as_complex() const noexcept { return {coords_[0], coords_[1]}; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::array<double, kMaxDim> coords_{};
  std::size_t dim_ = 0;
};

using MultiIndex = std::vector<int>;

using ScalarFn = std::function<Scalar(const Point&)>;
using VectorFn = std::function<ValueVector(const Point&)>;

/// A vector-valued function together with whatever partial derivatives are
/// known for it.  Partials are keyed by the multi-index beta; on a 1-d domain
/// the key {k} is the k-th derivative.
struct FunctionBundle {
  VectorFn value;
  std::map<MultiIndex, VectorFn> partials;

  FunctionBundle() = default;
  FunctionBundle(VectorFn f) : value(std::move(f)) {}  // NOLINT: implicit on purpose
  FunctionBundle(VectorFn f, std::map<MultiIndex, VectorFn> d)
      : value(std::move(f)), partials(std::move(d)) {}

  ValueVector operator()(const Point& x) const { return value(x); }

  /// partial(beta) or nullptr; the zero multi-index is the function itself.
  const VectorFn* partial(const MultiIndex& beta) const;
  /// k-th derivative of a 1-d function, k = 0 being the function itself.
  const VectorFn* derivative(int order) const { return partial(MultiIndex{order}); }
};

/// Scalar function with optional derivatives (1-d domains only).
struct ScalarHandle {
  ScalarFn value;
  std::vector<ScalarFn> derivatives;  ///< derivatives[k-1] is the k-th derivative

  Scalar operator()(const Point& x) const { return value(x); }
};

/// Lift a scalar handle into a one-component vector bundle (derivatives carried along).
FunctionBundle lift(const ScalarHandle& f);

/// Coordinate i of a bundle as a one-component bundle, e'_i o f.
FunctionBundle coordinate(const FunctionBundle& f, std::size_t i);

/// Stack one-component bundles into an m-component bundle.  Partials are kept
/// where every component supplies them.
FunctionBundle stack(const std::vector<FunctionBundle>& components);

/// a*f + g.
FunctionBundle combine(Scalar a, const FunctionBundle& f, const FunctionBundle& g);

}  // namespace schauder
