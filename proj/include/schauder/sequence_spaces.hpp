#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schauder/basis.hpp"
#include "schauder/multi_index.hpp"
#include "schauder/value_space.hpp"

namespace schauder {

enum class SequenceSpaceKind {
  C0,  ///< c_0(A, E), weighted by a Koethe matrix
  S,   ///< s(Omega, E), rapidly decreasing
  EN,  ///< E^N, the product space
  CN   ///< c(N, E), convergent sequences
};

std::string to_string(SequenceSpaceKind kind);
SequenceSpaceKind sequence_space_from_string(const std::string& name);

/// Nonnegative weights a(k, j) tabulated for 1 <= k <= rows, 1 <= j <= cols.
class KotheMatrix {
 public:
  using Entry = std::function<double(std::size_t k, std::size_t j)>;

  KotheMatrix(Entry entry, std::size_t rows, std::size_t cols);
  /// table[k-1][j-1] = a(k, j); rows must have equal length.
  static KotheMatrix from_table(std::vector<std::vector<double>> table);

  double operator()(std::size_t k, std::size_t j) const;
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

 private:
  Entry entry_;
  std::size_t rows_, cols_;
};

struct KotheReport {
  std::vector<std::size_t> rows_without_positive_entry;               ///< condition (1)
  std::vector<std::pair<std::size_t, std::size_t>> decreasing_in_j;  ///< condition (2): a(k,j) > a(k,j+1)

  bool valid() const noexcept { return rows_without_positive_entry.empty() && decreasing_in_j.empty(); }
};

/// Throws InputError on a negative or non-finite entry.
KotheReport kothe_validate(const KotheMatrix& a);

/// Finite prefix of a sequence over N (indices 1, 2, ...), N_0^d or Z^d, in
/// graded order.  `limit` is the declared limit x_infinity and is present
/// exactly for c(N).
struct TruncatedSequence {
  SequenceSpaceKind space = SequenceSpaceKind::C0;
  IndexSetKind index_set = IndexSetKind::Linear;
  std::vector<MultiIndex> indices;
  std::vector<ValueVector> values;
  std::optional<ValueVector> limit;

  /// Sequence over N with indices 1..values.size().
  static TruncatedSequence over_n(SequenceSpaceKind space, std::vector<ValueVector> values,
                                  std::optional<ValueVector> limit = std::nullopt);
  static TruncatedSequence from_scalars(SequenceSpaceKind space, const std::vector<double>& values,
                                        std::optional<double> limit = std::nullopt);

  std::size_t size() const noexcept { return values.size(); }
  std::size_t value_dimension() const;
  /// Throws InputError on shape mismatch, non-graded indices, or a limit that
  /// is present for a space other than c(N) (or missing for c(N)).
  void validate() const;
};

/// sup_k p_alpha(x_k) a(k, j), one value per seminorm.
std::vector<double> c0_seminorm(const TruncatedSequence& x, const KotheMatrix& a, std::size_t j,
                                const ValueSpace& space);
/// sup_k p_alpha(x_k) (1 + |k|^2)^{j/2} with the Euclidean |k|.
std::vector<double> s_seminorm(const TruncatedSequence& x, int j, const ValueSpace& space);
/// max_{k <= l} p_alpha(x_k).
std::vector<double> en_seminorm(const TruncatedSequence& x, std::size_t l, const ValueSpace& space);

/// One term c * phi of a unit-function decomposition; `index` empty means phi_infinity.
struct UnitTerm {
  ValueVector coefficient;
  std::optional<MultiIndex> index;
};

/// x = sum x_n phi_n, or x = x_inf phi_inf + sum (x_n - x_inf) phi_n for c(N).
/// Zero coefficients are kept so that term i + (c(N) ? 1 : 0) belongs to x_i.
std::vector<UnitTerm> unit_decomposition(const TruncatedSequence& x);

/// Evaluates sum c * phi at every index of `shape`.  Each entry is the sum of the
/// contributing terms in order, starting from the first one.
TruncatedSequence reassemble(const std::vector<UnitTerm>& terms, const TruncatedSequence& shape);

/// P_k x: the entries of grade <= k (the rest zeroed); c(N) keeps the limit term.
TruncatedSequence sequence_projection(const TruncatedSequence& x, int k);

/// What the error profile measures.
struct ProfileWeight {
  int j = 1;                           ///< c_0(A) column or s weight exponent
  std::size_t l = 1;                   ///< E^N seminorm index
  const KotheMatrix* kothe = nullptr;  ///< required for c_0(A)
};

struct ProfileRow {
  int rank = 0;
  std::vector<double> errors;  ///< one per seminorm
};

/// |x - P_k x| for each rank, computed directly as the supremum over the tail
/// grade(n) > k.  For c(N) the tail entries are x_n - x_inf.
std::vector<ProfileRow> projection_error_profile(const TruncatedSequence& x, const std::vector<int>& ranks,
                                                 const ProfileWeight& weight, const ValueSpace& space);

struct MembershipRow {
  int j = 0;
  std::vector<double> seminorm;     ///< |x|_j per seminorm
  std::vector<double> growth;       ///< |x|_{j+1} / |x|_j (empty for the last j)
  bool suspected_non_member = false;
};

/// Heuristic s-membership diagnostic for j = 1..j_max.  A j is flagged when the
/// weighted entries over the last quarter of the prefix do not fall below their
/// maximum over the first three quarters; a finite prefix cannot decide
/// membership either way.
std::vector<MembershipRow> s_membership_diagnostic(const TruncatedSequence& x, int j_max,
                                                   const ValueSpace& space);

/// Mean of the last `window` entries: a diagnostic guess at the limit, never used
/// as the declared limit.
ValueVector tail_mean_estimate(const TruncatedSequence& x, std::size_t window);

/// Unit sequences phi_1..phi_K as a basis on the index set {1..K}.  Functions on
/// the index set are sequences; lambda_n(x) = x_n.
class SequenceUnitBasis final : public BasisFamily {
 public:
  explicit SequenceUnitBasis(std::size_t truncation = 64);

  std::string name() const override { return "sequence"; }
  IndexSetKind index_set() const override { return IndexSetKind::Linear; }
  const Domain& domain() const override { return domain_; }
  std::size_t size() const override { return domain_.index_count; }
  MultiIndex index(std::size_t position) const override { return {static_cast<int>(position + 1)}; }
  int grade(std::size_t position) const override { return static_cast<int>(position + 1); }

  Scalar element(std::size_t position, const Point& x) const override;
  ValueVector coefficient(const FunctionBundle& f, std::size_t position) const override;
  double tolerance() const override { return 1e-12; }
  std::vector<Point> evaluation_grid(std::size_t count) const override;

 private:
  Domain domain_;
};

/// View a truncated sequence over N as a function on its index set.
FunctionBundle as_function(const TruncatedSequence& x);

}  // namespace schauder
