#include "schauder/registry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "schauder/errors.hpp"
#include "schauder/interval_bases.hpp"
#include "schauder/io.hpp"
#include "schauder/sequence_spaces.hpp"
#include "schauder/spectral_bases.hpp"

namespace schauder {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(int k) { return std::tgamma(k + 1.0); }

/// d^order/dx^order of h_n as a combination of h_0..h_{n+order}, by
/// h_m' = sqrt(m/2) h_{m-1} - sqrt((m+1)/2) h_{m+1}.
double hermite_fn_derivative(int n, int order, double x) {
  std::vector<double> c(static_cast<std::size_t>(n + order) + 2, 0.0);
  c[static_cast<std::size_t>(n)] = 1.0;
  for (int step = 0; step < order; ++step) {
    std::vector<double> next(c.size(), 0.0);
    for (std::size_t m = 0; m + 1 < c.size(); ++m) {
      if (c[m] == 0.0) continue;
      if (m > 0) next[m - 1] += c[m] * std::sqrt(0.5 * static_cast<double>(m));
      next[m + 1] -= c[m] * std::sqrt(0.5 * static_cast<double>(m + 1));
    }
    c = std::move(next);
  }
  const auto table = hermite_fn_table(n + order + 1, x);
  double sum = 0.0;
  for (std::size_t m = 0; m < c.size() && m < table.size(); ++m) sum += c[m] * table[m];
  return sum;
}

Scalar hermite_fn_complex(int n, Scalar z) {
  Scalar prev = std::exp(-0.5 * z * z) / std::sqrt(std::sqrt(kPi));
  if (n == 0) return prev;
  Scalar cur = std::sqrt(2.0) * z * prev;
  for (int k = 1; k < n; ++k) {
    const Scalar next = std::sqrt(2.0 / (k + 1)) * z * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Probabilists' Hermite polynomial He_k.
double hermite_he(int k, double x) {
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = x;
  for (int i = 1; i < k; ++i) {
    const double next = x * cur - i * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<RegisteredFunction> build_functions() {
  std::vector<RegisteredFunction> fs;
  fs.push_back({"zero", "f = 0", kInf, [](int, double) { return 0.0; }, [](Scalar) { return Scalar(0.0); }});
  fs.push_back({"one", "f = 1", kInf, [](int k, double) { return k == 0 ? 1.0 : 0.0; },
                [](Scalar) { return Scalar(1.0); }});
  fs.push_back({"x", "f(x) = x", kInf,
                [](int k, double x) { return k == 0 ? x : (k == 1 ? 1.0 : 0.0); }, [](Scalar z) { return z; }});
  fs.push_back({"x2", "f(x) = x^2", kInf,
                [](int k, double x) {
                  switch (k) {
                    case 0: return x * x;
                    case 1: return 2.0 * x;
                    case 2: return 2.0;
                    default: return 0.0;
                  }
                },
                [](Scalar z) { return z * z; }});
  fs.push_back({"sin-pi", "f(x) = sin(pi x)", kInf,
                [](int k, double x) { return std::pow(kPi, k) * std::sin(kPi * x + 0.5 * kPi * k); },
                [](Scalar z) { return std::sin(kPi * z); }});
  fs.push_back({"cos", "f(x) = cos(x)", kInf, [](int k, double x) { return std::cos(x + 0.5 * kPi * k); },
                [](Scalar z) { return std::cos(z); }});
  fs.push_back({"runge", "f(x) = 1 / (1 + 25 x^2)", 0.2,
                [](int k, double x) {
                  // 1/(1 + 25x^2) = Re 1/(1 + 5ix) on the real line.
                  const Scalar w(1.0, 5.0 * x);
                  const Scalar d = std::pow(Scalar(0.0, -5.0), k) * factorial(k) / std::pow(w, k + 1);
                  return d.real();
                },
                [](Scalar z) { return 1.0 / (1.0 + 25.0 * z * z); }});
  fs.push_back({"gauss", "f(x) = exp(-x^2 / 2)", kInf,
                [](int k, double x) { return (k % 2 ? -1.0 : 1.0) * hermite_he(k, x) * std::exp(-0.5 * x * x); },
                [](Scalar z) { return std::exp(-0.5 * z * z); }});
  for (int n = 0; n <= 5; ++n) {
    fs.push_back({"h" + std::to_string(n), "normalized Hermite function h_" + std::to_string(n), kInf,
                  [n](int k, double x) { return k == 0 ? hermite_fn(n, x) : hermite_fn_derivative(n, k, x); },
                  [n](Scalar z) { return hermite_fn_complex(n, z); }});
  }
  fs.push_back({"exp-z", "f(z) = exp(z)", kInf, [](int, double x) { return std::exp(x); },
                [](Scalar z) { return std::exp(z); }});
  fs.push_back({"geo-z", "f(z) = 1 / (1 - z)", 1.0,
                [](int k, double x) { return factorial(k) / std::pow(1.0 - x, k + 1); },
                [](Scalar z) { return 1.0 / (1.0 - z); }});
  return fs;
}

ValueVector scaled_components(Scalar v, std::size_t m) {
  ValueVector out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<double>(i + 1) * v;
  return out;
}

double param(const nlohmann::json& p, const char* key, double fallback) {
  return p.contains(key) ? p.at(key).get<double>() : fallback;
}

int iparam(const nlohmann::json& p, const char* key, int fallback) {
  return p.contains(key) ? p.at(key).get<int>() : fallback;
}

const std::vector<std::string> kIntervalCorpus{"one", "x", "x2", "sin-pi", "cos", "runge", "gauss", "exp-z"};

std::vector<BasisEntry> build_bases() {
  using nlohmann::json;
  std::vector<BasisEntry> bs;
  bs.push_back({"haar", "Haar system on [0, 1]; rank k is h_1..h_k",
                json{{"panels_per_half", 64}}, false, kIntervalCorpus,
                [](const json& p, int r, double) -> BasisPtr {
                  return std::make_shared<HaarBasis>(static_cast<std::size_t>(std::max(r, 1)),
                                                     iparam(p, "panels_per_half", 64));
                }});
  bs.push_back({"hat-dyadic", "Schauder hats over the dyadic sequence of [a, b]; rank k is phi_0..phi_k",
                json{{"a", 0.0}, {"b", 1.0}}, false, kIntervalCorpus,
                [](const json& p, int r, double) -> BasisPtr {
                  return std::make_shared<HatBasis>(DenseSequence::dyadic(
                      param(p, "a", 0.0), param(p, "b", 1.0), static_cast<std::size_t>(std::max(r + 1, 2))));
                }});
  bs.push_back({"hat", "Schauder hats over a given sequence prefix (default: golden-ratio points on [a, b])",
                json{{"sequence", nullptr}, {"a", 0.0}, {"b", 1.0}}, false, kIntervalCorpus,
                [](const json& p, int r, double) -> BasisPtr {
                  if (p.contains("sequence") && !p.at("sequence").is_null()) {
                    return std::make_shared<HatBasis>(io::dense_sequence_from_json(p.at("sequence")));
                  }
                  return std::make_shared<HatBasis>(DenseSequence::golden(
                      param(p, "a", 0.0), param(p, "b", 1.0), static_cast<std::size_t>(std::max(r + 1, 2))));
                }});
  bs.push_back({"ck", "integrated hats spanning C^k([a, b]) over the dyadic sequence",
                json{{"k", 2}, {"a", 0.0}, {"b", 1.0}}, false, kIntervalCorpus,
                [](const json& p, int r, double) -> BasisPtr {
                  const int k = iparam(p, "k", 2);
                  return std::make_shared<CkBasis>(
                      DenseSequence::dyadic(param(p, "a", 0.0), param(p, "b", 1.0),
                                            static_cast<std::size_t>(std::max(r + 1 - k, 2))),
                      k);
                }});
  bs.push_back({"hermite", "Hermite functions on R^d (d = 1, 2); rank k is |n| <= k",
                json{{"dim", 1}}, false, {"zero", "gauss", "h0", "h1", "h2", "h3", "h4", "h5"},
                [](const json& p, int r, double) -> BasisPtr {
                  return std::make_shared<HermiteBasis>(HermiteContext{iparam(p, "dim", 1), r, iparam(p, "nodes", 0)});
                }});
  bs.push_back({"fourier", "exponentials e^{i<n,x>} on [-pi, pi]^d (d = 1..3); rank k is |n| <= k",
                json{{"dim", 1}}, true, {"one", "cos", "gauss", "h0", "h1", "h2", "runge", "exp-z"},
                [](const json& p, int r, double) -> BasisPtr {
                  return std::make_shared<FourierBasis>(iparam(p, "dim", 1), r, iparam(p, "grid", 0));
                }});
  bs.push_back({"taylor", "monomials (z - z0)^n on the disc D_r(z0); r defaults to the function's radius",
                json{{"center", json::array({0.0, 0.0})}, {"radius", "auto"}, {"rho", "auto"}}, true,
                {"zero", "one", "x", "x2", "cos", "sin-pi", "exp-z", "gauss"},
                [](const json& p, int r, double fn_radius) -> BasisPtr {
                  DiscContext ctx;
                  if (p.contains("center")) ctx.center = {p.at("center").at(0).get<double>(), p.at("center").at(1).get<double>()};
                  ctx.radius = (p.contains("radius") && p.at("radius").is_number()) ? p.at("radius").get<double>()
                                                                                    : fn_radius;
                  if (p.contains("rho") && p.at("rho").is_number()) ctx.contour = p.at("rho").get<double>();
                  return std::make_shared<TaylorBasis>(ctx, r);
                }});
  bs.push_back({"sequence", "unit sequences phi_1..phi_K on the index set {1..K}", json::object(), false,
                kIntervalCorpus,
                [](const json&, int r, double) -> BasisPtr {
                  return std::make_shared<SequenceUnitBasis>(static_cast<std::size_t>(std::max(r, 1)));
                }});
  return bs;
}

}  // namespace

const std::vector<RegisteredFunction>& function_registry() {
  static const std::vector<RegisteredFunction> fs = build_functions();
  return fs;
}

const RegisteredFunction& find_function(const std::string& name) {
  for (const auto& f : function_registry()) {
    if (f.name == name) return f;
  }
  throw UsageError("unknown function '" + name + "'");
}

FunctionBundle registry_lookup(const std::string& name, const Domain& domain, std::size_t m,
                               int max_derivative) {
  const RegisteredFunction& f = find_function(name);
  if (m == 0) throw InputError("value dimension must be positive");
  if (domain.kind == Domain::Kind::Disc) {
    auto h = f.holomorphic;
    return FunctionBundle([h, m](const Point& x) { return scaled_components(h(x.as_complex()), m); });
  }
  const int d = (domain.kind == Domain::Kind::RealSpace || domain.kind == Domain::Kind::Torus) ? domain.dim : 1;
  auto deriv = f.derivative;
  auto tensor = [deriv, m, d](const MultiIndex& beta) -> VectorFn {
    return [deriv, m, d, beta](const Point& x) {
      double v = 1.0;
      for (int i = 0; i < d; ++i) v *= deriv(beta[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]);
      return scaled_components(v, m);
    };
  };
  FunctionBundle out(tensor(MultiIndex(static_cast<std::size_t>(d), 0)));
  const int top = d == 1 ? max_derivative : std::min(max_derivative, 4);
  for (const auto& beta : enumerate_n0d(d, top)) {
    if (grade(beta) > 0) out.partials[beta] = tensor(beta);
  }
  return out;
}

SampledFunction::SampledFunction(std::vector<double> points, std::vector<ValueVector> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.size() < 2) throw InputError("sampled function needs at least two points");
  if (points_.size() != values_.size()) throw InputError("sample points and values differ in length");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i])) throw InputError("sample points must be strictly ascending");
  }
  for (const auto& v : values_) {
    if (v.size() != values_.front().size() || v.empty()) throw InputError("sample values differ in dimension");
  }
}

SampledFunction SampledFunction::from_json(const nlohmann::json& j) {
  try {
    std::vector<ValueVector> values;
    for (const auto& v : j.at("values")) values.push_back(io::value_vector_from_json(v));
    return SampledFunction(j.at("points").get<std::vector<double>>(), std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed sampled function: ") + e.what());
  }
}

SampledFunction SampledFunction::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open sampled function '" + path + "'");
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("sampled function '" + path + "' is not valid JSON: " + e.what());
  }
}

ValueVector SampledFunction::operator()(double x) const {
  if (!(x >= points_.front() && x <= points_.back())) throw InputError("point outside the sampled range");
  auto it = std::upper_bound(points_.begin(), points_.end(), x);
  if (it == points_.end()) return values_.back();
  const auto i = static_cast<std::size_t>(it - points_.begin());
  const double t = (x - points_[i - 1]) / (points_[i] - points_[i - 1]);
  ValueVector v = values_[i - 1];
  v *= 1.0 - t;
  v.add_scaled(t, values_[i]);
  return v;
}

FunctionBundle SampledFunction::bundle() const {
  auto self = std::make_shared<const SampledFunction>(*this);
  return FunctionBundle([self](const Point& x) { return (*self)(x[0]); });
}

FunctionBundle with_finite_differences(FunctionBundle f, int max_order, double a, double b, double h) {
  if (max_order < 0) throw InputError("finite-difference order must be nonnegative");
  if (!(a < b)) throw InputError("finite differences need an interval a < b");
  if (!(h > 0.0) || h * max_order > b - a) throw InputError("finite-difference step does not fit the interval");
  const VectorFn value = f.value;
  for (int k = 1; k <= max_order; ++k) {
    std::vector<double> binom(static_cast<std::size_t>(k) + 1, 1.0);
    for (int i = 1; i < k; ++i) binom[static_cast<std::size_t>(i)] = binom[static_cast<std::size_t>(i) - 1] * (k - i + 1) / i;
    const double scale = std::pow(h, -k);
    f.partials[MultiIndex{k}] = [value, binom, k, a, b, h, scale](const Point& x) {
      double start = x[0] - 0.5 * k * h;
      start = std::clamp(start, a, b - k * h);
      ValueVector sum;
      for (int i = 0; i <= k; ++i) {
        const double sign = (k - i) % 2 == 0 ? 1.0 : -1.0;
        ValueVector v = value(Point(start + i * h));
        if (i == 0) sum = ValueVector::zero(v.size());
        sum.add_scaled(sign * binom[static_cast<std::size_t>(i)] * scale, v);
      }
      return sum;
    };
  }
  return f;
}

const std::vector<BasisEntry>& basis_registry() {
  static const std::vector<BasisEntry> bs = build_bases();
  return bs;
}

const BasisEntry& find_basis(const std::string& id) {
  for (const auto& b : basis_registry()) {
    if (b.id == id) return b;
  }
  throw UsageError("unknown basis '" + id + "'");
}

}  // namespace schauder
