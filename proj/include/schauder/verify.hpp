#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "schauder/basis.hpp"
#include "schauder/registry.hpp"

namespace schauder {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string rule;  ///< how value is compared with threshold
};

struct VerifyReport {
  std::string basis;
  int max_rank = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Seed for randomized checks: SCHAUDER_SEED if set, otherwise a fixed default.
std::uint64_t verify_seed();

/// The 3-dimensional value space used by verify: sup, euclidean and a weighted sup.
ValueSpace verify_value_space(bool complex_field);

/// Corpus vectors (c_i, c_{i+1}, c_{i+2}) built cyclically from the basis's corpus.
std::vector<FunctionBundle> corpus_vectors(const BasisFamily& basis, const std::vector<std::string>& corpus);

/// Projection algebra, biorthogonality, vector/scalar consistency, Pettis bound
/// and distinctness of the partial-sum projections on one basis.
VerifyReport verify_basis(const BasisFamily& basis, const BasisEntry& entry, int max_rank, std::uint64_t seed);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace schauder
