#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace schauder {

using Scalar = std::complex<double>;

enum class Field { Real, Complex };

/// Element of the finite-dimensional value space E.  Coordinates are stored
/// as complex numbers regardless of the field; real spaces simply keep the
/// imaginary parts at zero.
class ValueVector {
 public:
  ValueVector() = default;
  explicit ValueVector(std::size_t dimension) : coords_(dimension) {}
  explicit ValueVector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  ValueVector(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static ValueVector zero(std::size_t dimension) { return ValueVector(dimension); }
  static ValueVector from_real(std::span<const double> values);

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }

  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  std::span<const Scalar> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_finite() const noexcept;
  bool is_zero() const noexcept;

  ValueVector& operator+=(const ValueVector& other);
  ValueVector& operator-=(const ValueVector& other);
  ValueVector& operator*=(Scalar a);
  ValueVector& operator*=(double a);

  /// this += a * x, coordinatewise.  The hot path of every weighted sum.
  ValueVector& add_scaled(Scalar a, const ValueVector& x);
  ValueVector& add_scaled(double a, const ValueVector& x);

  friend bool operator==(const ValueVector&, const ValueVector&) = default;

 private:
  std::vector<Scalar> coords_;
};

ValueVector operator+(ValueVector lhs, const ValueVector& rhs);
ValueVector operator-(ValueVector lhs, const ValueVector& rhs);
ValueVector operator*(Scalar a, ValueVector v);
ValueVector operator*(double a, ValueVector v);

/// Concrete realization of one seminorm p_alpha on E.
struct SeminormSpec {
  enum class Kind { Sup, WeightedSup, Euclidean, CoordinateSubsetSup };

  Kind kind = Kind::Sup;
  /// Per-coordinate nonnegative weights.  Required for WeightedSup and
  /// CoordinateSubsetSup (positive entries select the subset); optional for
  /// Euclidean.
  std::vector<double> weights;

  static SeminormSpec sup() { return {Kind::Sup, {}}; }
  static SeminormSpec weighted_sup(std::vector<double> w) { return {Kind::WeightedSup, std::move(w)}; }
  static SeminormSpec euclidean() { return {Kind::Euclidean, {}}; }
  static SeminormSpec subset_sup(std::vector<double> mask) {
    return {Kind::CoordinateSubsetSup, std::move(mask)};
  }
};

std::string to_string(SeminormSpec::Kind kind);
SeminormSpec::Kind seminorm_kind_from_string(const std::string& name);

/// The value space E: field, dimension m and a finite seminorm family.
/// Immutable after construction.
class ValueSpace {
 public:
  /// Throws InputError when m == 0, the family is empty, a weight tuple is
  /// malformed, or the family fails to separate points.
  ValueSpace(Field field, std::size_t dimension, std::vector<SeminormSpec> seminorms);

  /// m-dimensional space with the single sup seminorm.
  static ValueSpace real_sup(std::size_t dimension);
  static ValueSpace complex_sup(std::size_t dimension);

  Field field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t seminorm_count() const noexcept { return seminorms_.size(); }
  const std::vector<SeminormSpec>& seminorms() const noexcept { return seminorms_; }

  /// p_alpha(v).
  double seminorm(std::size_t alpha, const ValueVector& v) const;
  /// All seminorms of v, in family order.
  std::vector<double> seminorms_of(const ValueVector& v) const;

  void require_member(const ValueVector& v) const;

 private:
  Field field_;
  std::size_t dimension_;
  std::vector<SeminormSpec> seminorms_;
};

/// a*x + y.
ValueVector axpy(Scalar a, const ValueVector& x, const ValueVector& y);

/// The i-th coordinate projection, standing in for a dual element e'.
Scalar coordinate_functional(std::size_t i, const ValueVector& v);

}  // namespace schauder
