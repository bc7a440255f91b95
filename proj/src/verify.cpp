#include "schauder/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "schauder/quadrature.hpp"

namespace schauder {

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::uint64_t verify_seed() {
  if (const char* s = std::getenv("SCHAUDER_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
    }
  }
  return 20240611;
}

ValueSpace verify_value_space(bool complex_field) {
  return ValueSpace(complex_field ? Field::Complex : Field::Real, 3,
                    {SeminormSpec::sup(), SeminormSpec::euclidean(), SeminormSpec::weighted_sup({1.0, 0.5, 0.25})});
}

std::vector<FunctionBundle> corpus_vectors(const BasisFamily& basis, const std::vector<std::string>& corpus) {
  std::vector<FunctionBundle> out;
  const std::size_t n = corpus.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FunctionBundle> parts;
    for (std::size_t c = 0; c < 3; ++c) parts.push_back(registry_lookup(corpus[(i + c) % n], basis.domain()));
    out.push_back(stack(parts));
  }
  return out;
}

VerifyReport verify_basis(const BasisFamily& basis, const BasisEntry& entry, int max_rank, std::uint64_t seed) {
  VerifyReport report;
  report.basis = entry.id;
  report.max_rank = std::min(max_rank, basis.max_rank());
  const ValueSpace space = verify_value_space(entry.complex_valued);
  const auto vectors = corpus_vectors(basis, entry.corpus);
  const auto grid = basis.evaluation_grid(101);

  double algebra = 0.0;
  for (const auto& f : vectors) algebra = std::max(algebra, projection_semigroup_max(basis, space, f, report.max_rank, grid));
  report.checks.push_back({"projection-algebra", algebra, 1e-10, algebra <= 1e-10, "<="});

  const std::size_t count = std::min<std::size_t>(21, basis.size());
  const double bio = biorthogonality_defect(basis, count);
  report.checks.push_back({"biorthogonality", bio, basis.tolerance(), bio <= basis.tolerance(), "<="});

  double consistency = 0.0;
  for (const auto& f : vectors) {
    const auto vec = basis.coefficients(f, count);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto scalar = basis.coefficients(coordinate(f, i), count);
      for (std::size_t p = 0; p < count; ++p) consistency = std::max(consistency, std::abs(vec[p][i] - scalar[p][0]));
    }
  }
  report.checks.push_back({"vector-scalar-consistency", consistency, 1e-12, consistency <= 1e-12, "<="});

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.01, 1.0);
  double violations = 0.0;
  for (const auto& f : vectors) {
    QuadratureRule rule;
    rule.nodes = basis.evaluation_grid(64);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) rule.weights.push_back(weight(rng));
    if (!pettis_bound_check(space, f.value, rule).ok) violations += 1.0;
  }
  report.checks.push_back({"pettis-bound", violations, 0.0, violations == 0.0, "violations =="});

  const double margin = distinctness_margin(basis, std::min(report.max_rank, 16));
  report.checks.push_back({"distinctness", margin, 0.5, margin >= 0.5, ">="});
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"check", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"rule", c.rule}, {"pass", c.pass}});
  }
  return {{"basis", report.basis}, {"max_rank", report.max_rank}, {"checks", checks}, {"pass", report.all_pass()}};
}

}  // namespace schauder
