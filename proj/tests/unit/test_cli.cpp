#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schauder/cli.hpp"
#include "schauder/errors.hpp"
#include "schauder/interval_bases.hpp"
#include "schauder/io.hpp"
#include "schauder/registry.hpp"
#include "../support.hpp"

using namespace schauder;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "schauder");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "schauder-cli-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("number formatting is shortest round trip") {
  CHECK(io::format_number(0.1) == "0.1");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1e-300) == "1e-300");
  CHECK(io::format_number(2.0) == "2");
  for (double v : {1.0 / 3.0, std::sqrt(2.0), -7.25e17, 5e-324}) {
    CHECK(std::strtod(io::format_number(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("JSON converters round trip") {
  const ValueSpace e(Field::Complex, 3, {SeminormSpec::sup(), SeminormSpec::weighted_sup({1.0, 0.5, 0.25})});
  const ValueSpace back = io::value_space_from_json(io::to_json(e));
  CHECK(back.field() == Field::Complex);
  CHECK(back.dimension() == 3);
  CHECK(back.seminorms()[1].weights == std::vector<double>{1.0, 0.5, 0.25});
  CHECK_THROWS_AS(io::value_space_from_json(json{{"dimension", 0}, {"seminorms", json::array({{{"kind", "sup"}}})}}),
                  InputError);

  const ValueVector v{1.5, Scalar(0.0, -2.0)};
  CHECK(io::value_vector_from_json(io::to_json(v)) == v);

  const TruncatedSequence x = TruncatedSequence::from_scalars(SequenceSpaceKind::CN, {2.0, 1.5, 1.25}, 1.0);
  const TruncatedSequence y = io::truncated_sequence_from_json(io::to_json(x));
  CHECK(y.space == SequenceSpaceKind::CN);
  CHECK(y.values == x.values);
  CHECK(*y.limit == *x.limit);

  const DenseSequence seq = io::dense_sequence_from_json(json::array({-1.0, 1.0, 0.25}));
  CHECK(seq.a() == -1.0);
  CHECK(seq[2] == 0.25);
  const PiecewisePolynomial p = hat_function({0.0, 0.5, 1.0}, 1);
  const PiecewisePolynomial q = io::piecewise_polynomial_from_json(io::to_json(p));
  CHECK(q.breakpoints() == p.breakpoints());
  CHECK(q.pieces() == p.pieces());
}

TEST_CASE("function registry") {
  const Domain unit;
  const FunctionBundle zero = registry_lookup("zero", unit);
  CHECK(zero(Point(0.3)).is_zero());
  const FunctionBundle x2 = registry_lookup("x2", unit);
  CHECK(x2(Point(0.5))[0] == 0.25);
  REQUIRE(x2.derivative(1) != nullptr);
  REQUIRE(x2.derivative(2) != nullptr);
  CHECK((*x2.derivative(1))(Point(0.5))[0] == 1.0);
  CHECK((*x2.derivative(2))(Point(0.5))[0] == 2.0);
  CHECK(registry_lookup("runge", unit)(Point(0.0))[0] == 1.0);
  CHECK(std::abs(registry_lookup("runge", unit)(Point(0.2))[0] - 0.5) <= 1e-15);
  const FunctionBundle stacked = registry_lookup("cos", unit, 3);
  CHECK(stacked(Point(0.0)) == ValueVector{1.0, 2.0, 3.0});
  CHECK_THROWS_AS(registry_lookup("nope", unit), UsageError);
  CHECK_THROWS_AS(find_basis("nope"), UsageError);
  for (const auto& name : {"zero", "one", "x", "x2", "sin-pi", "cos", "runge", "gauss", "h0", "h1", "h2", "h3",
                           "h4", "h5", "exp-z", "geo-z"}) {
    CHECK_NOTHROW(find_function(name));
  }
}

TEST_CASE("sampled functions interpolate linearly") {
  const SampledFunction s({0.0, 0.5, 1.0}, {ValueVector{0.0}, ValueVector{1.0}, ValueVector{0.0}});
  CHECK(s(0.25)[0] == 0.5);
  CHECK(s(1.0)[0] == 0.0);
  CHECK_THROWS_AS(SampledFunction({0.0}, {ValueVector{1.0}}), InputError);
  CHECK_THROWS_AS(SampledFunction({0.0, 0.0}, {ValueVector{1.0}, ValueVector{1.0}}), InputError);
  const SampledFunction j = SampledFunction::from_json(json{{"points", {0.0, 2.0}}, {"values", {1.0, 3.0}}});
  CHECK(j(1.0)[0] == 2.0);
}

TEST_CASE("finite-difference derivatives converge at second order inside the interval") {
  const FunctionBundle s = testing_support::scalar_fn([](double x) { return std::sin(3 * x); });
  auto error = [&](double h, int order, double x) {
    const FunctionBundle d = with_finite_differences(s, 2, 0.0, 1.0, h);
    const double exact = order == 1 ? 3 * std::cos(3 * x) : -9 * std::sin(3 * x);
    return std::abs((*d.derivative(order))(Point(x))[0].real() - exact);
  };
  for (int order : {1, 2}) {
    const double coarse = error(1e-2, order, 0.4), fine = error(5e-3, order, 0.4);
    CHECK(fine < coarse);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
  }
  CHECK(error(1e-3, 2, 0.0) < 30 * 1e-3);
  CHECK(error(1e-3, 2, 0.0) > error(1e-3, 2, 0.5));
  CHECK_THROWS_AS(with_finite_differences(s, 2, 0.0, 1.0, 0.0), InputError);
}

TEST_CASE("expand writes a coefficient table") {
  const Outcome r = invoke({"expand", "--basis", "hat-dyadic", "--fn", "zero", "--max-n", "8"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"n", "re_0", "im_0"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][1] == "0");
    CHECK(rows[i][2] == "0");
  }
  const Outcome j = invoke({"expand", "--basis", "fourier", "--fn", "cos", "--max-n", "1", "--format", "json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["basis"] == "fourier");
  CHECK(doc["coefficients"].size() == 3);
}

TEST_CASE("converge reports per-rank errors") {
  const Outcome r = invoke({"converge", "--basis", "fourier", "--fn", "cos", "--ranks", "0,1,2"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(std::abs(std::stod(rows[1][1]) - 1.0) <= 1e-12);
  CHECK(std::stod(rows[2][1]) <= 1e-12);
  CHECK(std::stod(rows[3][1]) <= 1e-12);
  CHECK(invoke({"converge", "--basis", "fourier", "--fn", "cos"}).code == 2);
}

TEST_CASE("verify passes and is deterministic") {
  const Outcome a = invoke({"verify", "--basis", "haar", "--max-n", "16"});
  CHECK(a.code == 0);
  CHECK(json::parse(a.out)["pass"] == true);
  const Outcome b = invoke({"verify", "--basis", "haar", "--max-n", "16"});
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(invoke({"expand", "--basis", "nope", "--fn", "x"}).code == 2);
  CHECK(invoke({"expand", "--basis", "haar", "--fn", "nope"}).code == 2);
  CHECK(invoke({"frobnicate", "--basis", "haar"}).code == 2);
  CHECK(invoke({"expand", "--basis", "haar", "--bogus"}).code == 2);
  CHECK(invoke({"expand", "--basis", "haar", "--format", "xml"}).code == 2);
  CHECK(invoke({"expand", "--basis", "haar", "--params", "[1]"}).code == 2);
  const Outcome r = invoke({"expand", "--basis", "nope"});
  CHECK(json::parse(r.err)["error"] == "usage");
}

TEST_CASE("numeric failures exit with status 1") {
  const auto path = scratch("bad-nodes.json");
  {
    std::ofstream f(path);
    f << R"({"points": [0, 1], "values": [0, 1]})";
  }
  const Outcome ok = invoke({"expand", "--basis", "hat-dyadic", "--fn", path.string(), "--max-n", "4"});
  CHECK(ok.code == 0);
  const Outcome r = invoke({"expand", "--basis", "taylor", "--fn", "geo-z", "--params", R"({"radius": 2, "rho": 1})",
                            "--max-n", "4"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"] == "numeric");
}

TEST_CASE("config files and flag overrides") {
  const auto path = scratch("job.json");
  {
    std::ofstream f(path);
    f << json{{"command", "converge"}, {"basis", {{"name", "hat-dyadic"}}}, {"function", "sin-pi"},
              {"ranks", {2, 3}}, {"value_space", {{"field", "real"}, {"dimension", 2},
                                                  {"seminorms", {{{"kind", "sup"}}, {{"kind", "euclidean"}}}}}}}
             .dump();
  }
  const Outcome base = invoke({"--config", path.string()});
  CHECK(base.code == 0);
  const auto rows = parse_csv(base.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"k", "p0", "p1"});
  const Outcome over = invoke({"--config", path.string(), "--ranks", "2,3,5,9"});
  CHECK(parse_csv(over.out).size() == 5);
}

TEST_CASE("sampled data with the C^k basis uses finite differences") {
  const auto path = scratch("parabola.json");
  {
    json pts = json::array(), vals = json::array();
    for (int i = 0; i <= 400; ++i) {
      const double x = i / 400.0;
      pts.push_back(x);
      vals.push_back(x * x);
    }
    std::ofstream f(path);
    f << json{{"points", pts}, {"values", vals}}.dump();
  }
  const Outcome r = invoke({"expand", "--basis", "ck", "--fn", path.string(), "--max-n", "4", "--params", R"({"k": 1})"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(std::abs(std::stod(rows[2][1])) <= 1e-2);
  CHECK(std::abs(std::stod(rows[3][1]) - 2.0) <= 1e-2);
}

TEST_CASE("bases listing covers the registry") {
  const Outcome r = invoke({"bases"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["bases"].size() == basis_registry().size());
  CHECK(doc["functions"].size() == function_registry().size());
}

TEST_CASE("output files receive the report") {
  const auto path = scratch("table.csv");
  std::filesystem::remove(path);
  const Outcome r = invoke({"expand", "--basis", "haar", "--fn", "x", "--max-n", "4", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(parse_csv(text.str()).size() == 5);
}
