#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "schauder/basis.hpp"
#include "schauder/interval_bases.hpp"
#include "schauder/piecewise_polynomial.hpp"
#include "schauder/sequence_spaces.hpp"
#include "schauder/value_space.hpp"

namespace schauder::io {

using Json = nlohmann::json;

/// Shortest decimal string that reads back to the same double.
std::string format_number(double v);

/// {field, dimension, seminorms: [{kind, weights?}, ...]}
Json to_json(const ValueSpace& space);
ValueSpace value_space_from_json(const Json& j);

/// A plain list [t_0, t_1, ...] (then a = t_0, b = t_1) or {a, b, points}.
DenseSequence dense_sequence_from_json(const Json& j);
Json to_json(const DenseSequence& seq);

/// {breakpoints, pieces}
Json to_json(const PiecewisePolynomial& p);
PiecewisePolynomial piecewise_polynomial_from_json(const Json& j);

/// A value vector as a list of coordinates; each coordinate is a number when
/// real and [re, im] otherwise.
Json to_json(const ValueVector& v);
ValueVector value_vector_from_json(const Json& j);

/// {space, index_set, indices, values, limit?}
Json to_json(const TruncatedSequence& x);
TruncatedSequence truncated_sequence_from_json(const Json& j);

/// Index columns (n or n1..nd), then re_i, im_i per value coordinate.
std::string coefficient_table_csv(const BasisFamily& basis, const std::vector<ValueVector>& coefficients);
Json coefficient_table_json(const BasisFamily& basis, const std::vector<ValueVector>& coefficients);

/// k, then one error column per seminorm (p0, p1, ...).
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
Json convergence_json(const std::vector<ConvergenceRow>& rows);
std::string profile_csv(const std::vector<ProfileRow>& rows);

}  // namespace schauder::io
