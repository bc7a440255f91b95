#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace schauder::cli {

/// One job of the command-line tool.
struct JobConfig {
  std::string command;            ///< expand | converge | verify | bases
  std::string basis;              ///< basis id, or "all" for verify
  nlohmann::json basis_params = nlohmann::json::object();
  std::string function = "zero";  ///< registry name
  std::string sampled_path;       ///< sampled-data JSON; overrides `function` when set
  std::optional<nlohmann::json> value_space;
  std::vector<int> ranks;
  int max_n = 16;
  double lp = 0.0;                ///< converge: L^p error when >= 1, grid sup otherwise
  std::string output;             ///< empty: stdout
  std::string format = "csv";     ///< csv | json
};

/// Parse argv into a config.  A --config JSON file is read first and flags
/// override it.  Throws UsageError on malformed input; returns nullopt when
/// help was printed to `out`.
std::optional<JobConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Run a job.  Returns 0 on success, 1 on numeric failure or a failed check,
/// 2 on usage errors.  Diagnostics go to `err` as JSON.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schauder::cli
