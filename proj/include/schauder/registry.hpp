#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schauder/basis.hpp"
#include "schauder/functions.hpp"

namespace schauder {

/// A builtin scalar function of one variable.  On d-dimensional real domains
/// the registry uses the tensor product f(x_1) ... f(x_d); on a disc the
/// holomorphic extension is evaluated at z = x + iy.
struct RegisteredFunction {
  std::string name;
  std::string description;
  double holomorphy_radius;                       ///< distance from 0 to the nearest singularity
  std::function<double(int, double)> derivative;  ///< (order, x) -> f^(order)(x)
  std::function<Scalar(Scalar)> holomorphic;
};

const std::vector<RegisteredFunction>& function_registry();
/// Throws UsageError for an unknown name.
const RegisteredFunction& find_function(const std::string& name);

/// The function as an m-component bundle on `domain`, component i being (i + 1) f.
/// On real domains of dimension 1 derivatives up to `max_derivative` are attached,
/// on higher dimensions every partial with |beta| <= 4.
FunctionBundle registry_lookup(const std::string& name, const Domain& domain, std::size_t m = 1,
                               int max_derivative = 6);

/// Piecewise-linear interpolant of samples at strictly ascending points.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> points, std::vector<ValueVector> values);
  /// {"points": [...], "values": [...]}; each value is a number or a coordinate list.
  static SampledFunction from_json(const nlohmann::json& j);
  static SampledFunction load(const std::string& path);

  ValueVector operator()(double x) const;
  FunctionBundle bundle() const;
  std::size_t value_dimension() const { return values_.front().size(); }

 private:
  std::vector<double> points_;
  std::vector<ValueVector> values_;
};

/// Attaches derivatives 1..max_order computed by k-th order differences with step h.
/// The stencil is centered (O(h^2) accurate) wherever it fits inside [a, b] and
/// shifted inward near the endpoints, where the accuracy drops to O(h).
FunctionBundle with_finite_differences(FunctionBundle f, int max_order, double a, double b, double h);

/// Parameters a basis accepts, with defaults, for `bases` listings.
struct BasisEntry {
  std::string id;
  std::string description;
  nlohmann::json schema;
  bool complex_valued = false;
  /// Functions used by the verify suite on this basis.
  std::vector<std::string> corpus;
  /// Build a truncation covering every rank <= max_rank.  `fn_radius` is the
  /// holomorphy radius of the function being expanded (used by taylor).
  std::function<BasisPtr(const nlohmann::json& params, int max_rank, double fn_radius)> make;
};

const std::vector<BasisEntry>& basis_registry();
/// Throws UsageError for an unknown id.
const BasisEntry& find_basis(const std::string& id);

}  // namespace schauder
