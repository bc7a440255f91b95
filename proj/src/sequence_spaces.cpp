#include "schauder/sequence_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "schauder/errors.hpp"

namespace schauder {

std::string to_string(SequenceSpaceKind kind) {
  switch (kind) {
    case SequenceSpaceKind::C0: return "c0";
    case SequenceSpaceKind::S: return "s";
    case SequenceSpaceKind::EN: return "EN";
    case SequenceSpaceKind::CN: return "cN";
  }
  return "?";
}

SequenceSpaceKind sequence_space_from_string(const std::string& name) {
  if (name == "c0") return SequenceSpaceKind::C0;
  if (name == "s") return SequenceSpaceKind::S;
  if (name == "EN") return SequenceSpaceKind::EN;
  if (name == "cN") return SequenceSpaceKind::CN;
  throw InputError("unknown sequence space '" + name + "'");
}

// ---------------------------------------------------------------------------

KotheMatrix::KotheMatrix(Entry entry, std::size_t rows, std::size_t cols)
    : entry_(std::move(entry)), rows_(rows), cols_(cols) {
  if (!entry_) throw InputError("Koethe matrix needs an entry function");
  if (rows_ == 0 || cols_ == 0) throw InputError("Koethe matrix needs a nonempty tabulation");
}

KotheMatrix KotheMatrix::from_table(std::vector<std::vector<double>> table) {
  if (table.empty() || table.front().empty()) throw InputError("Koethe table is empty");
  const std::size_t cols = table.front().size();
  for (const auto& row : table) {
    if (row.size() != cols) throw InputError("Koethe table rows differ in length");
  }
  const std::size_t rows = table.size();
  auto shared = std::make_shared<const std::vector<std::vector<double>>>(std::move(table));
  return KotheMatrix([shared](std::size_t k, std::size_t j) { return (*shared)[k - 1][j - 1]; }, rows,
                     cols);
}

double KotheMatrix::operator()(std::size_t k, std::size_t j) const {
  if (k < 1 || k > rows_ || j < 1 || j > cols_) {
    throw InputError("Koethe entry (" + std::to_string(k) + ", " + std::to_string(j) +
                     ") outside the tabulated range");
  }
  return entry_(k, j);
}

KotheReport kothe_validate(const KotheMatrix& a) {
  KotheReport report;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    bool positive = false;
    double previous = 0.0;
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      const double v = a(k, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw InputError("Koethe entry (" + std::to_string(k) + ", " + std::to_string(j) +
                         ") is negative or not finite");
      }
      positive = positive || v > 0.0;
      if (j > 1 && previous > v) report.decreasing_in_j.emplace_back(k, j - 1);
      previous = v;
    }
    if (!positive) report.rows_without_positive_entry.push_back(k);
  }
  return report;
}

// ---------------------------------------------------------------------------

TruncatedSequence TruncatedSequence::over_n(SequenceSpaceKind space, std::vector<ValueVector> values,
                                            std::optional<ValueVector> limit) {
  TruncatedSequence x;
  x.space = space;
  x.index_set = IndexSetKind::Linear;
  for (std::size_t k = 1; k <= values.size(); ++k) x.indices.push_back({static_cast<int>(k)});
  x.values = std::move(values);
  x.limit = std::move(limit);
  x.validate();
  return x;
}

TruncatedSequence TruncatedSequence::from_scalars(SequenceSpaceKind space, const std::vector<double>& values,
                                                  std::optional<double> limit) {
  std::vector<ValueVector> vs;
  vs.reserve(values.size());
  for (double v : values) vs.push_back(ValueVector{Scalar(v)});
  std::optional<ValueVector> lim;
  if (limit) lim = ValueVector{Scalar(*limit)};
  return over_n(space, std::move(vs), std::move(lim));
}

std::size_t TruncatedSequence::value_dimension() const {
  if (!values.empty()) return values.front().size();
  if (limit) return limit->size();
  return 0;
}

void TruncatedSequence::validate() const {
  if (indices.size() != values.size()) throw InputError("sequence indices and values differ in length");
  const std::size_t m = value_dimension();
  for (const auto& v : values) {
    if (v.size() != m) throw InputError("sequence entries differ in dimension");
  }
  if (limit && limit->size() != m && !values.empty()) {
    throw InputError("declared limit differs in dimension from the entries");
  }
  if (space == SequenceSpaceKind::CN && !limit) throw InputError("c(N) needs a declared limit");
  if (space != SequenceSpaceKind::CN && limit) {
    throw InputError("a declared limit is only meaningful for c(N)");
  }
  if ((space == SequenceSpaceKind::CN || space == SequenceSpaceKind::EN ||
       space == SequenceSpaceKind::C0) &&
      index_set != IndexSetKind::Linear) {
    throw InputError(to_string(space) + " is indexed by N");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (index_set == IndexSetKind::Linear && (indices[i].size() != 1 || indices[i][0] < 1)) {
      throw InputError("sequences over N use indices 1, 2, ...");
    }
    if (i > 0 && grade(indices[i]) < grade(indices[i - 1])) {
      throw InputError("sequence indices must be in graded order");
    }
  }
}

namespace {

std::size_t linear_index(const MultiIndex& n) { return static_cast<std::size_t>(n.at(0)); }

/// max over entries of p_alpha(x_k) * weight(k), per seminorm.
template <typename Weight>
std::vector<double> weighted_sup(const TruncatedSequence& x, const ValueSpace& space, Weight weight,
                                 std::size_t first = 0) {
  std::vector<double> out(space.seminorm_count(), 0.0);
  for (std::size_t i = first; i < x.size(); ++i) {
    const double w = weight(i);
    if (w == 0.0) continue;
    for (std::size_t a = 0; a < out.size(); ++a) {
      out[a] = std::max(out[a], space.seminorm(a, x.values[i]) * w);
    }
  }
  return out;
}

double s_weight(const MultiIndex& n, int j) {
  return std::pow(1.0 + euclidean_norm_sq(n), 0.5 * j);
}

}  // namespace

std::vector<double> c0_seminorm(const TruncatedSequence& x, const KotheMatrix& a, std::size_t j,
                                const ValueSpace& space) {
  x.validate();
  return weighted_sup(x, space, [&](std::size_t i) { return a(linear_index(x.indices[i]), j); });
}

std::vector<double> s_seminorm(const TruncatedSequence& x, int j, const ValueSpace& space) {
  x.validate();
  return weighted_sup(x, space, [&](std::size_t i) { return s_weight(x.indices[i], j); });
}

std::vector<double> en_seminorm(const TruncatedSequence& x, std::size_t l, const ValueSpace& space) {
  x.validate();
  if (l < 1 || l > x.size()) throw InputError("E^N seminorm index must lie in 1..truncation");
  return weighted_sup(x, space, [&](std::size_t i) { return linear_index(x.indices[i]) <= l ? 1.0 : 0.0; });
}

std::vector<UnitTerm> unit_decomposition(const TruncatedSequence& x) {
  x.validate();
  std::vector<UnitTerm> terms;
  if (x.space == SequenceSpaceKind::CN) {
    terms.push_back({*x.limit, std::nullopt});
    for (std::size_t i = 0; i < x.size(); ++i) terms.push_back({x.values[i] - *x.limit, x.indices[i]});
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) terms.push_back({x.values[i], x.indices[i]});
  }
  return terms;
}

TruncatedSequence reassemble(const std::vector<UnitTerm>& terms, const TruncatedSequence& shape) {
  TruncatedSequence out = shape;
  const std::size_t m = shape.value_dimension();
  for (std::size_t i = 0; i < shape.size(); ++i) {
    std::optional<ValueVector> sum;
    for (const auto& t : terms) {
      const bool hits = !t.index || *t.index == shape.indices[i];
      if (!hits) continue;
      if (sum) {
        *sum += t.coefficient;
      } else {
        sum = t.coefficient;
      }
    }
    out.values[i] = sum ? *sum : ValueVector::zero(m);
  }
  return out;
}

TruncatedSequence sequence_projection(const TruncatedSequence& x, int k) {
  x.validate();
  TruncatedSequence out = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (grade(x.indices[i]) > k) {
      out.values[i] = x.space == SequenceSpaceKind::CN ? *x.limit : ValueVector::zero(x.value_dimension());
    }
  }
  return out;
}

std::vector<ProfileRow> projection_error_profile(const TruncatedSequence& x, const std::vector<int>& ranks,
                                                 const ProfileWeight& weight, const ValueSpace& space) {
  x.validate();
  if (x.space == SequenceSpaceKind::C0 && weight.kothe == nullptr) {
    throw InputError("c0(A) profile needs a Koethe matrix");
  }
  TruncatedSequence tail = x;
  if (x.space == SequenceSpaceKind::CN) {
    for (auto& v : tail.values) v -= *x.limit;
  }
  std::vector<ProfileRow> rows;
  for (int k : ranks) {
    if (k < 0) throw InputError("ranks must be nonnegative");
    auto w = [&](std::size_t i) -> double {
      const MultiIndex& n = x.indices[i];
      if (grade(n) <= k) return 0.0;
      switch (x.space) {
        case SequenceSpaceKind::C0: return (*weight.kothe)(linear_index(n), static_cast<std::size_t>(weight.j));
        case SequenceSpaceKind::S: return s_weight(n, weight.j);
        case SequenceSpaceKind::EN: return linear_index(n) <= weight.l ? 1.0 : 0.0;
        case SequenceSpaceKind::CN: return 1.0;
      }
      return 0.0;
    };
    rows.push_back({k, weighted_sup(tail, space, w)});
  }
  return rows;
}

std::vector<MembershipRow> s_membership_diagnostic(const TruncatedSequence& x, int j_max,
                                                   const ValueSpace& space) {
  x.validate();
  if (j_max < 1) throw InputError("j_max must be at least 1");
  std::vector<MembershipRow> rows;
  const std::size_t head_end = x.size() - x.size() / 4;
  for (int j = 1; j <= j_max; ++j) {
    MembershipRow row;
    row.j = j;
    row.seminorm = s_seminorm(x, j, space);
    auto head_weight = [&](std::size_t i) { return i < head_end ? s_weight(x.indices[i], j) : 0.0; };
    auto tail_weight = [&](std::size_t i) { return s_weight(x.indices[i], j); };
    const auto head = weighted_sup(x, space, head_weight);
    const auto tail = weighted_sup(x, space, tail_weight, head_end);
    for (std::size_t a = 0; a < head.size(); ++a) {
      if (tail[a] > 0.0 && tail[a] >= head[a]) row.suspected_non_member = true;
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
    for (std::size_t a = 0; a < rows[r].seminorm.size(); ++a) {
      const double lo = rows[r].seminorm[a];
      rows[r].growth.push_back(lo > 0.0 ? rows[r + 1].seminorm[a] / lo : 0.0);
    }
  }
  return rows;
}

ValueVector tail_mean_estimate(const TruncatedSequence& x, std::size_t window) {
  if (window == 0 || window > x.size()) throw InputError("tail window must lie in 1..truncation");
  ValueVector sum = ValueVector::zero(x.value_dimension());
  for (std::size_t i = x.size() - window; i < x.size(); ++i) sum += x.values[i];
  sum *= 1.0 / static_cast<double>(window);
  return sum;
}

// ---------------------------------------------------------------------------

SequenceUnitBasis::SequenceUnitBasis(std::size_t truncation) {
  if (truncation == 0) throw InputError("sequence basis needs a positive truncation");
  domain_.kind = Domain::Kind::IndexSet;
  domain_.index_count = truncation;
}

Scalar SequenceUnitBasis::element(std::size_t position, const Point& x) const {
  require_position(position);
  require_in_domain(x);
  return x[0] == static_cast<double>(position + 1) ? 1.0 : 0.0;
}

ValueVector SequenceUnitBasis::coefficient(const FunctionBundle& f, std::size_t position) const {
  require_position(position);
  ValueVector v = f.value(Point{static_cast<double>(position + 1)});
  if (!v.is_finite()) throw NumericError("non-finite sequence entry", static_cast<double>(position + 1));
  return v;
}

std::vector<Point> SequenceUnitBasis::evaluation_grid(std::size_t) const {
  std::vector<Point> out;
  for (std::size_t k = 1; k <= size(); ++k) out.emplace_back(static_cast<double>(k));
  return out;
}

FunctionBundle as_function(const TruncatedSequence& x) {
  x.validate();
  if (x.index_set != IndexSetKind::Linear) throw InputError("only sequences over N are functions on N");
  auto shared = std::make_shared<const TruncatedSequence>(x);
  return FunctionBundle([shared](const Point& p) {
    const double k = p[0];
    if (k < 1.0 || k > static_cast<double>(shared->size()) || k != std::floor(k)) {
      throw InputError("index outside the sequence prefix");
    }
    return shared->values[static_cast<std::size_t>(k) - 1];
  });
}

}  // namespace schauder
