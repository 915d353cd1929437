#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <stretchforge/lie_algebra.hpp>
#include <stretchforge/stretch.hpp>
#include <stretchforge/truncated_series.hpp>

namespace stretchforge {

/// Canonical form: terms sorted lexicographically by exponent (the term map
/// ordering), rational components as decimal strings.
inline nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back({{"exp", e},
                     {"num", numerator(c).str()},
                     {"den", denominator(c).str()}});
  return {{"vars", s.num_vars()}, {"order", s.trunc_order()}, {"terms", terms}};
}

inline TruncatedSeries series_from_json(const nlohmann::json& j) {
  TruncatedSeries::TermMap terms;
  for (const auto& t : j.at("terms")) {
    TruncatedSeries::Exponents e = t.at("exp").get<std::vector<int>>();
    const Rational c = parse_rational(t.at("num").get<std::string>() + "/" +
                                      t.at("den").get<std::string>());
    terms.emplace(std::move(e), c);
  }
  return TruncatedSeries(j.at("vars").get<int>(), j.at("order").get<int>(),
                         std::move(terms));
}

inline nlohmann::json to_json(const StretchGerm& g) {
  auto j = to_json(g.series());
  j["valuation"] = g.valuation();
  j["leading_num"] = numerator(g.leading_coeff()).str();
  j["leading_den"] = denominator(g.leading_coeff()).str();
  return j;
}

inline nlohmann::json to_json(const CollarField& vf) {
  nlohmann::json components = nlohmann::json::array();
  for (int i = 0; i + 1 < vf.dimension(); ++i) {
    auto j = to_json(vf.tangential()[i]);
    j["role"] = "tangential";
    j["index"] = i + 1;
    components.push_back(std::move(j));
  }
  auto j = to_json(vf.normal());
  j["role"] = "normal";
  j["index"] = vf.dimension();
  components.push_back(std::move(j));
  return {{"n", vf.dimension()}, {"components", components}};
}

/// Algebra input file: {"name": ..., "matrix_dim": d,
/// "basis": [[row-major rationals as strings], ...]}.
inline MatrixLieAlgebra algebra_from_json(const nlohmann::json& j) {
  const int d = j.at("matrix_dim").get<int>();
  std::vector<MatQ> basis;
  for (const auto& rows : j.at("basis")) {
    if (static_cast<int>(rows.size()) != d * d)
      throw std::invalid_argument("basis entry length != matrix_dim^2");
    MatQ m(d, d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        m(i, k) = parse_rational(rows[i * d + k].get<std::string>());
    basis.push_back(std::move(m));
  }
  MatrixLieAlgebra g(j.value("name", std::string("custom")), std::move(basis));
  structure_constants(g);  // reject non-closed input
  return g;
}

}  // namespace stretchforge
