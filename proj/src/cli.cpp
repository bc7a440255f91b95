#include "schauder/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "schauder/errors.hpp"
#include "schauder/interval_bases.hpp"
#include "schauder/io.hpp"
#include "schauder/registry.hpp"
#include "schauder/verify.hpp"

namespace schauder::cli {

namespace {

using nlohmann::json;

std::vector<int> parse_ranks(const std::string& text) {
  std::vector<int> ranks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      ranks.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed rank '" + item + "' in --ranks");
    }
  }
  return ranks;
}

void apply_config_file(const std::string& path, JobConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
    if (j.contains("command")) cfg.command = j.at("command").get<std::string>();
    if (j.contains("basis")) {
      const json& b = j.at("basis");
      if (b.is_string()) {
        cfg.basis = b.get<std::string>();
      } else {
        cfg.basis = b.at("name").get<std::string>();
        cfg.basis_params = b;
        cfg.basis_params.erase("name");
      }
    }
    if (j.contains("function")) {
      const json& f = j.at("function");
      if (f.is_string()) {
        cfg.function = f.get<std::string>();
      } else {
        cfg.sampled_path = f.at("sampled").get<std::string>();
      }
    }
    if (j.contains("value_space")) cfg.value_space = j.at("value_space");
    if (j.contains("ranks")) cfg.ranks = j.at("ranks").get<std::vector<int>>();
    if (j.contains("max_n")) cfg.max_n = j.at("max_n").get<int>();
    if (j.contains("lp")) cfg.lp = j.at("lp").get<double>();
    if (j.contains("output")) {
      const json& o = j.at("output");
      if (o.is_string()) {
        cfg.output = o.get<std::string>();
      } else {
        cfg.output = o.value("path", "");
        cfg.format = o.value("format", cfg.format);
      }
    }
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
  } catch (const json::exception& e) {
    throw UsageError("malformed config '" + path + "': " + e.what());
  }
}

json merged_params(const BasisEntry& entry, const json& given) {
  json params = entry.schema;
  for (auto it = given.begin(); it != given.end(); ++it) params[it.key()] = it.value();
  return params;
}

void emit(const JobConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + cfg.output + "'");
  file << text;
}

ValueSpace job_space(const JobConfig& cfg, bool complex_field) {
  if (cfg.value_space) return io::value_space_from_json(*cfg.value_space);
  return complex_field ? ValueSpace::complex_sup(1) : ValueSpace::real_sup(1);
}

struct Prepared {
  BasisPtr basis;
  FunctionBundle f;
  ValueSpace space;
};

Prepared prepare(const JobConfig& cfg, int max_rank) {
  const BasisEntry& entry = find_basis(cfg.basis);
  const ValueSpace space = job_space(cfg, entry.complex_valued);
  std::optional<SampledFunction> sampled;
  double radius = std::numeric_limits<double>::infinity();
  if (!cfg.sampled_path.empty()) {
    sampled = SampledFunction::load(cfg.sampled_path);
    if (sampled->value_dimension() != space.dimension()) {
      throw InputError("sampled values do not match the value space dimension");
    }
  } else {
    radius = find_function(cfg.function).holomorphy_radius;
  }
  BasisPtr basis = entry.make(merged_params(entry, cfg.basis_params), max_rank, radius);
  FunctionBundle f = sampled ? sampled->bundle() : registry_lookup(cfg.function, basis->domain(), space.dimension());
  if (sampled && cfg.basis == "ck") {
    const Domain& d = basis->domain();
    f = with_finite_differences(std::move(f), static_cast<const CkBasis&>(*basis).smoothness(), d.a, d.b,
                                1e-3 * (d.b - d.a));
  }
  return {basis, f, space};
}

int run_expand(const JobConfig& cfg, std::ostream& out) {
  if (cfg.max_n < 0) throw UsageError("--max-n must be nonnegative");
  Prepared p = prepare(cfg, cfg.max_n);
  const int rank = std::min(cfg.max_n, p.basis->max_rank());
  const auto coeffs = expansion_coefficients(*p.basis, p.f, rank);
  if (cfg.format == "json") {
    emit(cfg, io::coefficient_table_json(*p.basis, coeffs).dump(2) + "\n", out);
  } else {
    emit(cfg, io::coefficient_table_csv(*p.basis, coeffs), out);
  }
  return 0;
}

int run_converge(const JobConfig& cfg, std::ostream& out) {
  if (cfg.ranks.empty()) throw UsageError("converge needs --ranks");
  Prepared p = prepare(cfg, *std::max_element(cfg.ranks.begin(), cfg.ranks.end()));
  const ErrorMode mode = cfg.lp >= 1.0 ? ErrorMode::lp(cfg.lp) : ErrorMode::grid_sup();
  const auto rows = convergence_report(*p.basis, p.space, p.f, cfg.ranks, mode);
  if (cfg.format == "json") {
    emit(cfg, json{{"basis", p.basis->name()}, {"rows", io::convergence_json(rows)}}.dump(2) + "\n", out);
  } else {
    emit(cfg, io::convergence_csv(rows), out);
  }
  return 0;
}

int run_verify(const JobConfig& cfg, std::ostream& out) {
  if (cfg.max_n < 1) throw UsageError("verify needs --max-n >= 1");
  std::vector<const BasisEntry*> entries;
  if (cfg.basis == "all") {
    for (const auto& e : basis_registry()) entries.push_back(&e);
  } else {
    entries.push_back(&find_basis(cfg.basis));
  }
  const std::uint64_t seed = verify_seed();
  json reports = json::array();
  bool pass = true;
  for (const BasisEntry* e : entries) {
    const json params = merged_params(*e, cfg.basis == "all" ? json::object() : cfg.basis_params);
    BasisPtr basis = e->make(params, cfg.max_n, std::numeric_limits<double>::infinity());
    const VerifyReport report = verify_basis(*basis, *e, cfg.max_n, seed);
    pass = pass && report.all_pass();
    reports.push_back(to_json(report));
  }
  emit(cfg, json{{"seed", seed}, {"reports", reports}, {"pass", pass}}.dump(2) + "\n", out);
  return pass ? 0 : 1;
}

int run_bases(const JobConfig& cfg, std::ostream& out) {
  json list = json::array();
  for (const auto& e : basis_registry()) {
    list.push_back({{"id", e.id}, {"description", e.description}, {"parameters", e.schema}, {"verify_corpus", e.corpus}});
  }
  json functions = json::array();
  for (const auto& f : function_registry()) functions.push_back({{"name", f.name}, {"description", f.description}});
  emit(cfg, json{{"bases", list}, {"functions", functions}}.dump(2) + "\n", out);
  return 0;
}

}  // namespace

std::optional<JobConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Schauder basis expansions of vector-valued functions"};
  std::string command, config_path, ranks, params;
  JobConfig cfg;
  int dim = 0;
  app.add_option("command", command, "expand | converge | verify | bases");
  app.add_option("--config", config_path, "JSON job file; flags override its fields");
  auto* basis = app.add_option("--basis", cfg.basis, "basis id (see `bases`), or `all` for verify");
  auto* fn = app.add_option("--fn", cfg.function, "registry function name or sampled-data JSON path");
  auto* max_n = app.add_option("--max-n", cfg.max_n, "largest rank");
  app.add_option("--ranks", ranks, "comma-separated ranks for converge");
  auto* lp = app.add_option("--lp", cfg.lp, "converge: report L^p errors (p >= 1) instead of grid sup");
  app.add_option("--params", params, "basis parameters as a JSON object");
  app.add_option("--dim", dim, "domain dimension for hermite and fourier");
  auto* output = app.add_option("--output", cfg.output, "output file (default stdout)");
  auto* format = app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  JobConfig merged;
  if (!config_path.empty()) apply_config_file(config_path, merged);
  if (!command.empty()) merged.command = command;
  if (basis->count()) merged.basis = cfg.basis;
  if (fn->count()) {
    const bool path_like = cfg.function.find('/') != std::string::npos ||
                           (cfg.function.size() > 5 && cfg.function.ends_with(".json"));
    if (path_like) {
      merged.sampled_path = cfg.function;
    } else {
      merged.function = cfg.function;
      merged.sampled_path.clear();
    }
  }
  if (max_n->count()) merged.max_n = cfg.max_n;
  if (!ranks.empty()) merged.ranks = parse_ranks(ranks);
  if (lp->count()) merged.lp = cfg.lp;
  if (!params.empty()) {
    try {
      merged.basis_params = json::parse(params);
    } catch (const json::exception& e) {
      throw UsageError(std::string("--params is not valid JSON: ") + e.what());
    }
    if (!merged.basis_params.is_object()) throw UsageError("--params must be a JSON object");
  }
  if (dim > 0) merged.basis_params["dim"] = dim;
  if (output->count()) merged.output = cfg.output;
  if (format->count()) merged.format = cfg.format;

  if (merged.command.empty()) throw UsageError("missing command (expand | converge | verify | bases)");
  if (merged.command != "expand" && merged.command != "converge" && merged.command != "verify" &&
      merged.command != "bases") {
    throw UsageError("unknown command '" + merged.command + "'");
  }
  if (merged.command != "bases" && merged.basis.empty()) throw UsageError("--basis is required");
  if (merged.format != "csv" && merged.format != "json") throw UsageError("--format must be csv or json");
  return merged;
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "expand") return run_expand(config, out);
    if (config.command == "converge") return run_converge(config, out);
    if (config.command == "verify") return run_verify(config, out);
    if (config.command == "bases") return run_bases(config, out);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const NumericError& e) {
    err << json{{"error", "numeric"}, {"message", e.what()}, {"node", e.node()}}.dump() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << json{{"error", "precondition"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto cfg = parse_args(argc, argv, out);
    if (!cfg) return 0;
    return run(*cfg, out, err);
  } catch (const InputError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}

}  // namespace schauder::cli
