#include "schauder/value_space.hpp"

#include <algorithm>
#include <cmath>

#include "schauder/errors.hpp"

namespace schauder {

namespace {

void require_same_size(const ValueVector& a, const ValueVector& b) {
  if (a.size() != b.size()) {
    throw InputError("value vector dimension mismatch: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

}  // namespace

ValueVector ValueVector::from_real(std::span<const double> values) {
  ValueVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v.coords_[i] = values[i];
  return v;
}

bool ValueVector::is_finite() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool ValueVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& z) { return z == Scalar{}; });
}

ValueVector& ValueVector::operator+=(const ValueVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

ValueVector& ValueVector::operator-=(const ValueVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

ValueVector& ValueVector::operator*=(Scalar a) {
  for (auto& c : coords_) c *= a;
  return *this;
}

ValueVector& ValueVector::operator*=(double a) {
  for (auto& c : coords_) c *= a;
  return *this;
}

ValueVector& ValueVector::add_scaled(Scalar a, const ValueVector& x) {
  require_same_size(*this, x);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += a * x.coords_[i];
  return *this;
}

ValueVector& ValueVector::add_scaled(double a, const ValueVector& x) {
  require_same_size(*this, x);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += a * x.coords_[i];
  return *this;
}

ValueVector operator+(ValueVector lhs, const ValueVector& rhs) { return lhs += rhs; }
ValueVector operator-(ValueVector lhs, const ValueVector& rhs) { return lhs -= rhs; }
ValueVector operator*(Scalar a, ValueVector v) { return v *= a; }
ValueVector operator*(double a, ValueVector v) { return v *= a; }

std::string to_string(SeminormSpec::Kind kind) {
  switch (kind) {
    case SeminormSpec::Kind::Sup: return "sup";
    case SeminormSpec::Kind::WeightedSup: return "weighted-sup";
    case SeminormSpec::Kind::Euclidean: return "euclidean";
    case SeminormSpec::Kind::CoordinateSubsetSup: return "coordinate-subset-sup";
  }
  return "?";
}

SeminormSpec::Kind seminorm_kind_from_string(const std::string& name) {
  if (name == "sup") return SeminormSpec::Kind::Sup;
  if (name == "weighted-sup") return SeminormSpec::Kind::WeightedSup;
  if (name == "euclidean") return SeminormSpec::Kind::Euclidean;
  if (name == "coordinate-subset-sup") return SeminormSpec::Kind::CoordinateSubsetSup;
  throw InputError("unknown seminorm kind '" + name + "'");
}

ValueSpace::ValueSpace(Field field, std::size_t dimension, std::vector<SeminormSpec> seminorms)
    : field_(field), dimension_(dimension), seminorms_(std::move(seminorms)) {
  if (dimension_ == 0) throw InputError("value space dimension must be positive");
  if (seminorms_.empty()) throw InputError("seminorm family must be nonempty");
  for (const auto& s : seminorms_) {
    const bool needs_weights = s.kind == SeminormSpec::Kind::WeightedSup ||
                               s.kind == SeminormSpec::Kind::CoordinateSubsetSup;
    if (s.weights.empty()) {
      if (needs_weights) throw InputError(to_string(s.kind) + " seminorm requires weights");
      continue;
    }
    if (s.weights.size() != dimension_) {
      throw InputError("seminorm weights must have length " + std::to_string(dimension_));
    }
    if (std::any_of(s.weights.begin(), s.weights.end(),
                    [](double w) { return !(w >= 0.0) || !std::isfinite(w); })) {
      throw InputError("seminorm weights must be finite and nonnegative");
    }
    if (std::none_of(s.weights.begin(), s.weights.end(), [](double w) { return w > 0.0; })) {
      throw InputError("seminorm weights need at least one positive entry");
    }
  }
  // Separation: every coordinate direction must be seen by some seminorm.
  for (std::size_t i = 0; i < dimension_; ++i) {
    ValueVector unit(dimension_);
    unit[i] = 1.0;
    bool seen = false;
    for (std::size_t a = 0; a < seminorms_.size() && !seen; ++a) seen = seminorm(a, unit) > 0.0;
    if (!seen) {
      throw InputError("seminorm family does not separate points (coordinate " +
                       std::to_string(i) + " is invisible)");
    }
  }
}

ValueSpace ValueSpace::real_sup(std::size_t dimension) {
  return ValueSpace(Field::Real, dimension, {SeminormSpec::sup()});
}

ValueSpace ValueSpace::complex_sup(std::size_t dimension) {
  return ValueSpace(Field::Complex, dimension, {SeminormSpec::sup()});
}

void ValueSpace::require_member(const ValueVector& v) const {
  if (v.size() != dimension_) {
    throw InputError("value vector has dimension " + std::to_string(v.size()) +
                     ", space has dimension " + std::to_string(dimension_));
  }
}

double ValueSpace::seminorm(std::size_t alpha, const ValueVector& v) const {
  if (alpha >= seminorms_.size()) {
    throw InputError("seminorm index " + std::to_string(alpha) + " out of range");
  }
  require_member(v);
  const SeminormSpec& s = seminorms_[alpha];
  double result = 0.0;
  switch (s.kind) {
    case SeminormSpec::Kind::Sup:
      for (const auto& c : v) result = std::max(result, std::abs(c));
      break;
    case SeminormSpec::Kind::WeightedSup:
      for (std::size_t i = 0; i < v.size(); ++i) result = std::max(result, s.weights[i] * std::abs(v[i]));
      break;
    case SeminormSpec::Kind::CoordinateSubsetSup:
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (s.weights[i] > 0.0) result = std::max(result, std::abs(v[i]));
      }
      break;
    case SeminormSpec::Kind::Euclidean: {
      // hypot-style accumulation keeps homogeneity exact for power-of-two scalings
      double scale = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = s.weights.empty() ? 1.0 : std::sqrt(s.weights[i]);
        scale = std::max(scale, w * std::abs(v[i]));
      }
      if (scale == 0.0) return 0.0;
      double sum = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = s.weights.empty() ? 1.0 : std::sqrt(s.weights[i]);
        const double t = w * std::abs(v[i]) / scale;
        sum += t * t;
      }
      result = scale * std::sqrt(sum);
      break;
    }
  }
  return result;
}

std::vector<double> ValueSpace::seminorms_of(const ValueVector& v) const {
  std::vector<double> out(seminorms_.size());
  for (std::size_t a = 0; a < seminorms_.size(); ++a) out[a] = seminorm(a, v);
  return out;
}

ValueVector axpy(Scalar a, const ValueVector& x, const ValueVector& y) {
  ValueVector out = y;
  out.add_scaled(a, x);
  return out;
}

Scalar coordinate_functional(std::size_t i, const ValueVector& v) {
  if (i >= v.size()) {
    throw InputError("coordinate index " + std::to_string(i) + " out of range for dimension " +
                     std::to_string(v.size()));
  }
  return v[i];
}

}  // namespace schauder
