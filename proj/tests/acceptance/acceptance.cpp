#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schauder/cli.hpp"
#include "schauder/errors.hpp"
#include "schauder/interval_bases.hpp"
#include "schauder/quadrature.hpp"
#include "schauder/registry.hpp"
#include "schauder/sequence_spaces.hpp"
#include "schauder/spectral_bases.hpp"
#include "schauder/verify.hpp"

using namespace schauder;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double diff(const ValueVector& a, const ValueVector& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

FunctionBundle scalar(std::function<Scalar(const Point&)> f) {
  return FunctionBundle([f = std::move(f)](const Point& x) { return ValueVector{f(x)}; });
}

/// Every registered basis built for ranks up to 32, plus the two-dimensional spectral families.
struct Family {
  std::string label;
  BasisPtr basis;
  const BasisEntry* entry;
};

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& e : basis_registry()) out.push_back({e.id, e.make(e.schema, 32, kInf), &e});
  const BasisEntry& hermite = find_basis("hermite");
  out.push_back({"hermite(d=2)", hermite.make({{"dim", 2}}, 12, kInf), &hermite});
  const BasisEntry& fourier = find_basis("fourier");
  out.push_back({"fourier(d=2)", fourier.make({{"dim", 2}}, 12, kInf), &fourier});
  return out;
}

const std::vector<Family>& families() {
  static const std::vector<Family> f = all_families();
  return f;
}

Verdict semigroup() {
  double worst = 0.0;
  std::string where;
  std::size_t functions = 0;
  for (const auto& fam : families()) {
    const ValueSpace space = verify_value_space(fam.entry->complex_valued);
    const auto grid = fam.basis->evaluation_grid(101);
    const int rank = std::min(32, fam.basis->max_rank());
    const auto vectors = corpus_vectors(*fam.basis, fam.entry->corpus);
    functions = std::max(functions, fam.entry->corpus.size());
    for (const auto& f : vectors) {
      const double d = projection_semigroup_max(*fam.basis, space, f, rank, grid);
      if (d > worst) {
        worst = d;
        where = fam.label;
      }
    }
  }
  return {worst <= 1e-10, std::to_string(families().size()) + " bases, " + std::to_string(functions) +
                              "-function corpora, k, j <= 32: max discrepancy " + sci(worst) +
                              (where.empty() ? "" : " (" + where + ")") + " <= 1e-10"};
}

Verdict biorthogonality() {
  bool pass = true;
  std::string detail;
  for (const auto& fam : families()) {
    const std::size_t count = std::min<std::size_t>(21, fam.basis->size());
    const double d = biorthogonality_defect(*fam.basis, count);
    pass = pass && d <= fam.basis->tolerance();
    detail += (detail.empty() ? "" : ", ") + fam.label + " " + sci(d) + "/" + sci(fam.basis->tolerance());
  }
  return {pass, "n, m <= 20, defect/tolerance: " + detail};
}

Verdict series_convergence() {
  const HatBasis hat(DenseSequence::dyadic(0.0, 1.0, 1026));
  const FunctionBundle sine = scalar([](const Point& x) { return std::sin(std::numbers::pi * x[0]); });
  std::vector<int> ranks;
  for (int m = 1; m <= 10; ++m) ranks.push_back((1 << m) + 1);
  const ValueSpace e = ValueSpace::real_sup(1);
  const auto rows = convergence_report(hat, e, sine, ranks, ErrorMode::grid_sup(2001));
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].errors[0] <= rows[i - 1].errors[0];
  const double final_error = rows.back().errors[0];

  const HaarBasis haar(64);
  const FunctionBundle x = scalar([](const Point& p) { return p[0]; });
  const auto l1 = convergence_report(haar, e, x, {4, 8, 16, 32, 64}, ErrorMode::lp(1.0));
  bool halving = true;
  std::string ratios;
  for (std::size_t i = 1; i < l1.size(); ++i) {
    const double r = l1[i - 1].errors[0] / l1[i].errors[0];
    halving = halving && std::abs(r - 2.0) <= 0.2;
    ratios += (ratios.empty() ? "" : ", ") + sci(r);
  }
  return {monotone && final_error <= 1e-4 && halving,
          "hat sin(pi x) error at rank 1025 = " + sci(final_error) + " <= 1e-4, " +
              (monotone ? "non-increasing" : "NOT monotone") + " over ranks 3..1025; Haar L1 ratios levels 2-6: " +
              ratios + " (2 +- 10%)"};
}

Verdict lifting() {
  double worst = 0.0;
  for (const auto& fam : families()) {
    const std::size_t count = std::min<std::size_t>(21, fam.basis->size());
    for (const auto& f : corpus_vectors(*fam.basis, fam.entry->corpus)) {
      for (std::size_t p = 0; p < count; ++p) worst = std::max(worst, vector_scalar_consistency(*fam.basis, f, p));
    }
  }
  return {worst <= 1e-12, "all bases, n <= 20, m = 3: max discrepancy " + sci(worst) + " <= 1e-12"};
}

Verdict taylor() {
  const FunctionBundle ez([](const Point& x) { return ValueVector{std::exp(x.as_complex())}; });
  const auto c = taylor_coefficients(ez, DiscContext{0.0, kInf, 1.0, 0}, 10);
  double exp_err = 0.0, factorial = 1.0;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) factorial *= n;
    exp_err = std::max(exp_err, std::abs(c[static_cast<std::size_t>(n)][0] - 1.0 / factorial));
  }
  const FunctionBundle geo([](const Point& x) { return ValueVector{1.0 / (1.0 - x.as_complex())}; });
  double geo_err = 0.0;
  for (const auto& v : taylor_coefficients(geo, DiscContext{0.0, 0.9, 0.5, 0}, 8)) geo_err = std::max(geo_err, std::abs(v[0] - 1.0));
  const auto a = taylor_coefficients(ez, DiscContext{0.0, kInf, 0.5, 0}, 10);
  const auto b = taylor_coefficients(ez, DiscContext{0.0, kInf, 1.5, 0}, 10);
  double rho_err = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) rho_err = std::max(rho_err, diff(a[n], b[n]));
  return {exp_err <= 1e-12 && geo_err <= 1e-10 && rho_err <= 1e-9,
          "e^z vs 1/n! " + sci(exp_err) + " <= 1e-12; 1/(1-z) vs 1 " + sci(geo_err) + " <= 1e-10; rho 0.5 vs 1.5 " +
              sci(rho_err) + " <= 1e-9"};
}

Verdict hermite() {
  const HermiteBasis basis({1, 32, 0});
  const FunctionBundle h3 = scalar([](const Point& x) { return hermite_fn(3, x[0]); });
  const auto c = basis.coefficients(h3, basis.size());
  double unit_err = 0.0;
  for (std::size_t p = 0; p < c.size(); ++p) unit_err = std::max(unit_err, std::abs(c[p][0] - (p == 3 ? 1.0 : 0.0)));

  std::mt19937_64 gen(verify_seed());
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const HermiteBasis span({1, 8, 0});
  double trip_err = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ValueVector> w(9);
    for (auto& v : w) v = ValueVector{Scalar(u(gen), u(gen)), u(gen), u(gen)};
    const FunctionBundle f([w](const Point& x) {
      ValueVector s(3);
      for (int n = 0; n <= 8; ++n) s.add_scaled(hermite_fn(n, x[0]), w[static_cast<std::size_t>(n)]);
      return s;
    });
    const auto coeffs = expansion_coefficients(span, f, 8);
    for (int i = 0; i < 100; ++i) {
      const Point x(-6.0 + 12.0 * i / 99.0);
      trip_err = std::max(trip_err, diff(evaluate_expansion(span, coeffs, coeffs.size(), x), f(x)));
    }
  }
  return {unit_err <= 1e-8 && trip_err <= 1e-10,
          "h_3 coefficients vs unit sequence (|n| <= 32) " + sci(unit_err) + " <= 1e-8; span{h_0..h_8} round trip " +
              sci(trip_err) + " <= 1e-10"};
}

Verdict fourier() {
  std::mt19937_64 gen(verify_seed() + 1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double trip_err = 0.0;
  for (int dim = 1; dim <= 3; ++dim) {
    const int degree = dim == 3 ? 4 : 8;
    const FourierBasis basis(dim, degree, 4 * degree + 1);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::pair<MultiIndex, ValueVector>> terms;
      for (const auto& n : enumerate_zd(dim, degree)) terms.emplace_back(n, ValueVector{Scalar(u(gen), u(gen)), u(gen)});
      const FunctionBundle f([terms](const Point& x) {
        ValueVector s(2);
        for (const auto& [n, c] : terms) {
          double phase = 0.0;
          for (std::size_t i = 0; i < n.size(); ++i) phase += n[i] * x[i];
          s.add_scaled(std::exp(Scalar(0.0, phase)), c);
        }
        return s;
      });
      const auto coeffs = expansion_coefficients(basis, f, degree);
      for (int i = 0; i < 100; ++i) {
        Point x(0.0);
        if (dim == 1) x = Point(-std::numbers::pi + 2 * std::numbers::pi * i / 99.0);
        if (dim == 2) x = Point{u(gen) * std::numbers::pi, u(gen) * std::numbers::pi};
        if (dim == 3) x = Point{u(gen) * std::numbers::pi, u(gen) * std::numbers::pi, u(gen) * std::numbers::pi};
        trip_err = std::max(trip_err, diff(evaluate_expansion(basis, coeffs, coeffs.size(), x), f(x)));
      }
    }
  }
  const FunctionBundle c = scalar([](const Point& x) { return std::cos(x[0]); });
  const double cos_err = std::max(std::abs(fourier_coefficient(c, MultiIndex{1}, 1)[0] - 0.5),
                                  std::abs(fourier_coefficient(c, MultiIndex{-1}, 1)[0] - 0.5));
  return {trip_err <= 1e-10 && cos_err <= 1e-12,
          "trigonometric polynomials (degree 8 for d = 1, 2; 4 for d = 3) round trip " + sci(trip_err) +
              " <= 1e-10; cos at +-1 " + sci(cos_err) + " <= 1e-12"};
}

FunctionBundle polynomial(const std::vector<double>& c, int derivatives) {
  auto eval = [](const std::vector<double>& p, double x) {
    double r = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
  };
  FunctionBundle f([c, eval](const Point& x) { return ValueVector{eval(c, x[0])}; });
  std::vector<double> d = c;
  for (int k = 1; k <= derivatives; ++k) {
    std::vector<double> next;
    for (std::size_t i = 1; i < d.size(); ++i) next.push_back(d[i] * static_cast<double>(i));
    if (next.empty()) next.push_back(0.0);
    d = next;
    f.partials[MultiIndex{k}] = [d, eval](const Point& x) { return ValueVector{eval(d, x[0])}; };
  }
  return f;
}

Verdict ck() {
  const CkBasis basis(DenseSequence::dyadic(0.0, 1.0, 33), 2);
  const auto mu = basis.coefficients(polynomial({0.0, 0.0, 1.0}, 2), basis.size());
  bool exact = true;
  for (std::size_t n = 0; n < mu.size(); ++n) exact = exact && mu[n][0] == ((n == 2 || n == 3) ? 2.0 : 0.0);
  double recon = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double t = i / 1000.0;
    recon = std::max(recon, std::abs(evaluate_expansion(basis, mu, 4, Point(t))[0] - t * t));
  }
  std::mt19937_64 gen(verify_seed() + 2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double tail = 0.0, fit = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const CkBasis b(DenseSequence::dyadic(-1.0, 2.0, 33), k);
    for (int degree = 0; degree <= k + 1; ++degree) {
      std::vector<double> c;
      for (int i = 0; i <= degree; ++i) c.push_back(u(gen));
      const FunctionBundle p = polynomial(c, k);
      const auto m = b.coefficients(p, b.size());
      for (std::size_t n = static_cast<std::size_t>(k) + 2; n < m.size(); ++n) tail = std::max(tail, std::abs(m[n][0]));
      for (int i = 0; i <= 300; ++i) {
        const Point t(-1.0 + i / 100.0);
        fit = std::max(fit, std::abs(evaluate_expansion(b, m, k + 2, t)[0] - p(t)[0]));
      }
    }
  }
  return {exact && recon <= 1e-12 && tail <= 1e-12 && fit <= 1e-12,
          std::string("x^2, k = 2: mu = (0,0,2,2,0,...) ") + (exact ? "exactly" : "NOT exactly") +
              ", rank-3 reconstruction " + sci(recon) + " <= 1e-12; degree <= k+1 (k = 1..4): coefficients past k+1 " +
              sci(tail) + ", reconstruction " + sci(fit) + " <= 1e-12"};
}

Verdict pettis() {
  std::mt19937_64 gen(verify_seed() + 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ValueSpace e(Field::Complex, 3,
                     {SeminormSpec::sup(), SeminormSpec::euclidean(), SeminormSpec::weighted_sup({1.0, 0.5, 0.25})});
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    QuadratureRule rule;
    const int count = 3 + static_cast<int>(u(gen) * 60);
    const double lo = -3.0 * u(gen), hi = 3.0 * u(gen) + 0.1;
    for (int i = 0; i < count; ++i) {
      rule.nodes.emplace_back(lo + (hi - lo) * u(gen));
      rule.weights.push_back(u(gen) + 1e-3);
    }
    const double a = 6 * u(gen) - 3, b = 6 * u(gen) - 3, s = 4 * u(gen);
    const VectorFn f = [a, b, s](const Point& x) {
      const double t = x[0];
      return ValueVector{Scalar(std::sin(a * t), std::cos(b * t)), s * t * t - a, std::exp(-s * t) * (t > b ? 1.0 : -1.0)};
    };
    const std::size_t first = static_cast<std::size_t>(u(gen) * count / 2);
    const std::size_t last = first + 1 + static_cast<std::size_t>(u(gen) * (count - first - 1));
    if (!pettis_bound_check(e, f, rule).ok) ++violations;
    if (!pettis_bound_check(e, f, rule, first, last).ok) ++violations;
  }
  return {violations == 0, "100 random positive-weight rule/function pairs (full range and a subrange): " +
                               std::to_string(violations) + " violations beyond 1e-12"};
}

Verdict tail_bound() {
  const ValueSpace e(Field::Real, 2, {SeminormSpec::sup(), SeminormSpec::euclidean()});
  const std::vector<std::string> corpus{"gauss", "h0", "h1", "h2", "h3", "h4", "h5"};
  const std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 4}, {1, 3}};
  int checks = 0, failures = 0;
  double worst_ratio = 0.0;
  for (int d = 1; d <= 2; ++d) {
    Domain dom;
    dom.kind = Domain::Kind::RealSpace;
    dom.dim = d;
    const SchwartzGrid grid{10.0, d == 1 ? std::size_t{2001} : std::size_t{201}};
    std::vector<MultiIndex> indices;
    for (int a = 0; a <= 4; ++a) {
      if (d == 1) {
        indices.push_back({a});
      } else {
        for (int b = 0; b <= 4; ++b) indices.push_back({a, b});
      }
    }
    for (const auto& name : corpus) {
      const FunctionBundle f = registry_lookup(name, dom, 2);
      for (const auto& n : indices) {
        for (const auto& [m, k] : pairs) {
          const TailBound t = hermite_tail_bound_check(f, n, k, m, e, grid);
          ++checks;
          if (!t.ok) ++failures;
          for (std::size_t a = 0; a < t.lhs.size(); ++a) {
            if (t.rhs[a] > 0.0) worst_ratio = std::max(worst_ratio, t.lhs[a] / t.rhs[a]);
          }
        }
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " checks (d = 1, 2; n_i <= 4; (m,k) in {(1,2),(2,4),(1,3)}): " +
                             std::to_string(failures) + " failures, max lhs/rhs " + sci(worst_ratio)};
}

bool same_bits(const TruncatedSequence& a, const TruncatedSequence& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.values[i] == b.values[i])) return false;
  }
  return true;
}

bool non_increasing(const std::vector<ProfileRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t a = 0; a < rows[i].errors.size(); ++a) {
      if (rows[i].errors[a] > rows[i - 1].errors[a]) return false;
    }
  }
  return true;
}

Verdict sequences() {
  std::mt19937_64 gen(verify_seed() + 4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const ValueSpace e(Field::Complex, 2, {SeminormSpec::sup(), SeminormSpec::euclidean()});
  auto random_values = [&](std::size_t count, double lo, double hi) {
    std::vector<ValueVector> v;
    for (std::size_t i = 0; i < count; ++i) {
      const double s = 0.5 * (hi - lo);
      v.push_back(ValueVector{Scalar(lo + s * (u(gen) + 1), lo + s * (u(gen) + 1)), lo + s * (u(gen) + 1)});
    }
    return v;
  };

  std::vector<int> ranks;
  for (int k = 0; k <= 70; ++k) ranks.push_back(k);

  bool exact = true;
  const TruncatedSequence c0 = TruncatedSequence::over_n(SequenceSpaceKind::C0, random_values(64, -1, 1));
  const TruncatedSequence en = TruncatedSequence::over_n(SequenceSpaceKind::EN, random_values(64, -1, 1));
  TruncatedSequence s;
  s.space = SequenceSpaceKind::S;
  s.index_set = IndexSetKind::GradedZd;
  s.indices = enumerate_zd(2, 6);
  for (const auto& n : s.indices) {
    const double w = std::exp(-std::sqrt(euclidean_norm_sq(n)));
    s.values.push_back(ValueVector{Scalar(w * u(gen), w * u(gen)), w});
  }
  std::vector<ValueVector> harmonic;
  for (int k = 1; k <= 64; ++k) harmonic.push_back(ValueVector{Scalar(1.0 + 1.0 / k, -1.0), 2.0 - 1.0 / (k * k)});
  const TruncatedSequence cn =
      TruncatedSequence::over_n(SequenceSpaceKind::CN, harmonic, ValueVector{Scalar(1.0, -1.0), 2.0});
  for (const TruncatedSequence* x : {&c0, &en, static_cast<const TruncatedSequence*>(&s), &cn}) exact = exact && same_bits(reassemble(unit_decomposition(*x), *x), *x);

  bool en_zero = true;
  for (std::size_t l = 1; l <= en.size(); ++l) {
    for (const auto& row : projection_error_profile(en, ranks, {1, l, nullptr}, e)) {
      if (static_cast<std::size_t>(row.rank) >= l) {
        for (double v : row.errors) en_zero = en_zero && v == 0.0;
      }
    }
  }

  const KotheMatrix power([](std::size_t k, std::size_t j) { return std::pow(static_cast<double>(k), static_cast<double>(j)); },
                          64, 3);
  std::vector<ValueVector> decaying;
  for (int k = 1; k <= 64; ++k) decaying.push_back(ValueVector{std::pow(k, -4.0), Scalar(0, std::exp(-0.1 * k))});
  const TruncatedSequence weighted = TruncatedSequence::over_n(SequenceSpaceKind::C0, decaying);
  bool monotone = kothe_validate(power).valid();
  for (int j = 1; j <= 3; ++j) monotone = monotone && non_increasing(projection_error_profile(weighted, ranks, {j, 1, &power}, e));
  for (int j = 0; j <= 4; ++j) monotone = monotone && non_increasing(projection_error_profile(s, ranks, {j, 1, nullptr}, e));
  const auto cn_rows = projection_error_profile(cn, ranks, {1, 1, nullptr}, e);
  monotone = monotone && non_increasing(cn_rows) && cn_rows.back().errors[0] == 0.0;

  return {exact && en_zero && monotone,
          std::string("reassembly ") + (exact ? "bit-exact" : "NOT bit-exact") + " (c0, E^N, s(Z^2), c(N)); E^N error for k >= l " +
              (en_zero ? "exactly 0" : "NONZERO") + "; profiles for c0(A), s, c(N) " +
              (monotone ? "non-increasing" : "NOT monotone")};
}

Verdict determinism(const std::string& executable) {
  auto in_process = [] {
    const char* argv[] = {"schauder", "verify", "--basis", "all", "--max-n", "32"};
    std::ostringstream out, err;
    const int code = cli::main(6, argv, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = in_process();
  if (executable.empty()) {
    const auto b = in_process();
    return {a == b && a.first == 0, "verify --basis all --max-n 32 twice in-process: " +
                                        std::string(a == b ? "identical" : "DIFFERENT") + " (" +
                                        std::to_string(a.second.size()) + " bytes, exit " + std::to_string(a.first) + ")"};
  }
  bool same = a.first == 0;
  std::string detail = "verify --basis all --max-n 32 in-process (" + std::to_string(a.second.size()) + " bytes, exit " +
                       std::to_string(a.first) + ")";
  {
    auto spawn = [&executable] {
      std::string text;
      FILE* pipe = popen(("'" + executable + "' verify --basis all --max-n 32").c_str(), "r");
      if (pipe == nullptr) return std::string("<spawn failed>");
      char buf[4096];
      std::size_t n = 0;
      while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, n);
      pclose(pipe);
      return text;
    };
    const std::string p = spawn(), q = spawn();
    const bool match = p == q && p == a.second;
    same = same && match;
    detail += " and in two separate processes: " + std::string(match ? "byte-identical" : "DIFFERENT");
  }
  return {same, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string executable = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"C1 projection semigroup", semigroup},
      {"C2 biorthogonality", biorthogonality},
      {"C3 series convergence", series_convergence},
      {"C4 vector-valued lifting", lifting},
      {"C5 Taylor expansion", taylor},
      {"C6 Hermite expansion", hermite},
      {"C7 Fourier expansion", fourier},
      {"C8 C^k basis", ck},
      {"C9 Pettis bound", pettis},
      {"C10 Hermite tail bound", tail_bound},
      {"C11 sequence spaces", sequences},
      {"C12 determinism", [&executable] { return determinism(executable); }},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [name, check] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << " [" << sci(secs) << " s]" << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed in "
            << sci(total) << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
