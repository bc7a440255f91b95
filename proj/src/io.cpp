#include "schauder/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "schauder/errors.hpp"

namespace schauder::io {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // print -0 as 0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json to_json(const ValueSpace& space) {
  Json seminorms = Json::array();
  for (const auto& s : space.seminorms()) {
    Json e{{"kind", to_string(s.kind)}};
    if (!s.weights.empty()) e["weights"] = s.weights;
    seminorms.push_back(e);
  }
  return {{"field", space.field() == Field::Real ? "real" : "complex"},
          {"dimension", space.dimension()},
          {"seminorms", seminorms}};
}

ValueSpace value_space_from_json(const Json& j) {
  try {
    const std::string field = j.value("field", "real");
    if (field != "real" && field != "complex") throw InputError("field must be 'real' or 'complex'");
    const auto m = j.at("dimension").get<std::size_t>();
    std::vector<SeminormSpec> specs;
    if (!j.contains("seminorms")) {
      specs.push_back(SeminormSpec::sup());
    } else {
      for (const auto& s : j.at("seminorms")) {
        SeminormSpec spec;
        spec.kind = seminorm_kind_from_string(s.at("kind").get<std::string>());
        if (s.contains("weights")) spec.weights = s.at("weights").get<std::vector<double>>();
        specs.push_back(std::move(spec));
      }
    }
    return ValueSpace(field == "real" ? Field::Real : Field::Complex, m, std::move(specs));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed value space: ") + e.what());
  }
}

DenseSequence dense_sequence_from_json(const Json& j) {
  try {
    if (j.is_array()) {
      auto pts = j.get<std::vector<double>>();
      if (pts.size() < 2) throw InputError("dense sequence needs at least t_0 and t_1");
      const double a = pts[0], b = pts[1];
      return DenseSequence(a, b, std::move(pts));
    }
    return DenseSequence(j.at("a").get<double>(), j.at("b").get<double>(),
                         j.at("points").get<std::vector<double>>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed dense sequence: ") + e.what());
  }
}

Json to_json(const DenseSequence& seq) {
  return {{"a", seq.a()}, {"b", seq.b()}, {"points", seq.points()}};
}

Json to_json(const PiecewisePolynomial& p) {
  return {{"breakpoints", p.breakpoints()}, {"pieces", p.pieces()}};
}

PiecewisePolynomial piecewise_polynomial_from_json(const Json& j) {
  try {
    return PiecewisePolynomial(j.at("breakpoints").get<std::vector<double>>(),
                               j.at("pieces").get<std::vector<std::vector<double>>>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed piecewise polynomial: ") + e.what());
  }
}

Json to_json(const ValueVector& v) {
  Json out = Json::array();
  for (const Scalar& z : v) {
    if (z.imag() == 0.0) {
      out.push_back(z.real());
    } else {
      out.push_back(Json::array({z.real(), z.imag()}));
    }
  }
  return out;
}

ValueVector value_vector_from_json(const Json& j) {
  try {
    if (j.is_number()) return ValueVector{Scalar(j.get<double>())};
    std::vector<Scalar> coords;
    for (const auto& c : j) {
      if (c.is_number()) {
        coords.emplace_back(c.get<double>());
      } else {
        coords.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
      }
    }
    return ValueVector(std::move(coords));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed value vector: ") + e.what());
  }
}

Json to_json(const TruncatedSequence& x) {
  Json values = Json::array();
  for (const auto& v : x.values) values.push_back(to_json(v));
  Json out{{"space", to_string(x.space)},
           {"index_set", to_string(x.index_set)},
           {"indices", x.indices},
           {"values", values}};
  if (x.limit) out["limit"] = to_json(*x.limit);
  return out;
}

TruncatedSequence truncated_sequence_from_json(const Json& j) {
  try {
    TruncatedSequence x;
    x.space = sequence_space_from_string(j.at("space").get<std::string>());
    const std::string set = j.value("index_set", to_string(IndexSetKind::Linear));
    if (set == to_string(IndexSetKind::Linear)) {
      x.index_set = IndexSetKind::Linear;
    } else if (set == to_string(IndexSetKind::GradedN0d)) {
      x.index_set = IndexSetKind::GradedN0d;
    } else if (set == to_string(IndexSetKind::GradedZd)) {
      x.index_set = IndexSetKind::GradedZd;
    } else {
      throw InputError("unknown index set '" + set + "'");
    }
    for (const auto& v : j.at("values")) x.values.push_back(value_vector_from_json(v));
    if (j.contains("indices")) {
      for (const auto& n : j.at("indices")) {
        x.indices.push_back(n.is_number() ? MultiIndex{n.get<int>()} : n.get<MultiIndex>());
      }
    } else {
      for (std::size_t k = 1; k <= x.values.size(); ++k) x.indices.push_back({static_cast<int>(k)});
    }
    if (j.contains("limit") && !j.at("limit").is_null()) x.limit = value_vector_from_json(j.at("limit"));
    x.validate();
    return x;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed truncated sequence: ") + e.what());
  }
}

std::string coefficient_table_csv(const BasisFamily& basis, const std::vector<ValueVector>& coefficients) {
  std::ostringstream os;
  const std::size_t d = coefficients.empty() ? 1 : basis.index(0).size();
  const std::size_t m = coefficients.empty() ? 0 : coefficients.front().size();
  if (d == 1) {
    os << "n";
  } else {
    for (std::size_t i = 0; i < d; ++i) os << (i ? "," : "") << "n" << i + 1;
  }
  for (std::size_t c = 0; c < m; ++c) os << ",re_" << c << ",im_" << c;
  os << '\n';
  for (std::size_t p = 0; p < coefficients.size(); ++p) {
    const MultiIndex n = basis.index(p);
    for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
    for (const Scalar& z : coefficients[p]) os << ',' << format_number(z.real()) << ',' << format_number(z.imag());
    os << '\n';
  }
  return os.str();
}

Json coefficient_table_json(const BasisFamily& basis, const std::vector<ValueVector>& coefficients) {
  Json rows = Json::array();
  for (std::size_t p = 0; p < coefficients.size(); ++p) {
    rows.push_back({{"index", basis.index(p)}, {"value", to_json(coefficients[p])}});
  }
  return {{"basis", basis.name()}, {"coefficients", rows}};
}

namespace {

template <typename Row>
std::string rows_csv(const std::vector<Row>& rows) {
  std::ostringstream os;
  os << "k";
  const std::size_t cols = rows.empty() ? 0 : rows.front().errors.size();
  for (std::size_t a = 0; a < cols; ++a) os << ",p" << a;
  os << '\n';
  for (const auto& r : rows) {
    os << r.rank;
    for (double e : r.errors) os << ',' << format_number(e);
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) { return rows_csv(rows); }

std::string profile_csv(const std::vector<ProfileRow>& rows) { return rows_csv(rows); }

Json convergence_json(const std::vector<ConvergenceRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"k", r.rank}, {"errors", r.errors}});
  return out;
}

}  // namespace schauder::io
