#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <stretchforge/json_io.hpp>
#include <stretchforge/lie_algebra.hpp>
#include <stretchforge/models.hpp>
#include <stretchforge/moduli.hpp>
#include <stretchforge/report.hpp>
#include <stretchforge/stretch.hpp>

namespace stretchforge {

struct SuiteOptions {
  int order = 8;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int samples = 50;
  int pairs = 20;
};

/// mt19937_64 with explicit output mapping, so reports are reproducible for
/// a fixed seed on any platform.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return (engine_() >> 11) * 0x1.0p-53; }

  double in_range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  int integer(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(
                                               hi - lo + 1));
  }

  Rational small_rational(int max_abs_num = 4, int max_den = 3) {
    const int num = integer(-max_abs_num, max_abs_num);
    const int den = integer(1, max_den);
    return Rational(num, den);
  }

  BoostRotation boost_rotation(int n) {
    VecQ b(n);
    for (int i = 0; i < n; ++i) b(i) = small_rational();
    MatQ a = MatQ::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        a(i, j) = small_rational();
        a(j, i) = -a(i, j);
      }
    return BoostRotation(std::move(b), std::move(a));
  }

 private:
  std::mt19937_64 engine_;
};

inline CollarField truncated(const CollarField& vf, int order) {
  std::vector<TruncatedSeries> tangential;
  for (const auto& t : vf.tangential()) tangential.push_back(truncated(t, order));
  return CollarField(std::move(tangential), truncated(vf.normal(), order));
}

/// Sample points with tangential coordinates in [-1/4, 1/4] and y in
/// [0.05, 0.5].
inline std::vector<std::vector<double>> collar_samples(DeterministicRng& rng,
                                                       int n, int count) {
  std::vector<std::vector<double>> points;
  for (int s = 0; s < count; ++s) {
    std::vector<double> z(n);
    for (int i = 0; i < n - 1; ++i) z[i] = rng.in_range(-0.25, 0.25);
    z[n - 1] = rng.in_range(0.05, 0.5);
    points.push_back(std::move(z));
  }
  return points;
}

/// Stretches every so(1,n) generator by y -> y^p in a boundary chart and
/// checks tangency, the valuation transform law, the bracket homomorphism
/// on random pairs, and the numeric chain-rule cross-validation.
inline CheckReport run_stretch_suite(int n, int p, const SuiteOptions& opts) {
  if (n < 2 || p < 1 || opts.order < 4)
    throw std::invalid_argument("need n >= 2, p >= 1, order >= 4");
  CheckReport report;
  report.command = "stretch";
  report.inputs = {{"n", n},        {"p", p},
                   {"order", opts.order}, {"samples", opts.samples},
                   {"tol", opts.tol},     {"seed", opts.seed},
                   {"pairs", opts.pairs}};

  const PreparedChart chart =
      prepare_chart(BoundaryChart::first_axis(n, opts.order));
  const auto basis = lorentz_basis(n);
  std::vector<CollarField> collar;
  for (const auto& x : basis)
    collar.push_back(to_collar_field(klein_vector_field(x, opts.order), chart));

  for (std::size_t i = 0; i < collar.size(); ++i) {
    const CollarField pulled = pullback_analytic(collar[i], p);
    report.add("tangency[" + std::to_string(i) + "]",
               pulled.boundary_tangent());
    report.add(
        "valuation-transform[" + std::to_string(i) + "]",
        valuation_profile(pulled) ==
            valuation_transform_law(valuation_profile(collar[i]), p));
  }

  DeterministicRng rng(opts.seed);
  bool brackets_ok = true;
  for (int k = 0; k < opts.pairs; ++k) {
    const CollarField vx = to_collar_field(
        klein_vector_field(rng.boost_rotation(n), opts.order), chart);
    const CollarField vy = to_collar_field(
        klein_vector_field(rng.boost_rotation(n), opts.order), chart);
    const CollarField lhs = pullback_analytic(field_bracket(vx, vy), p);
    const CollarField rhs =
        field_bracket(truncated(pullback_analytic(vx, p), opts.order),
                      truncated(pullback_analytic(vy, p), opts.order));
    const int compare_order = opts.order - 1;
    if (!(truncated(lhs, compare_order) == truncated(rhs, compare_order)))
      brackets_ok = false;
  }
  report.add("bracket-homomorphism", brackets_ok,
             {{"pairs", opts.pairs}, {"compare_order", opts.order - 1}});

  const StretchGerm germ = monomial_germ(p, opts.order);
  const auto samples = collar_samples(rng, n, opts.samples);
  double worst = 0;
  bool numeric_ok = true;
  for (const auto& vf : collar) {
    const CheckReport sub = numeric_pullback_check(vf, germ, samples, opts.tol);
    worst = std::max(worst,
                     sub.checks.front().details["max_deviation"].get<double>());
    numeric_ok = numeric_ok && sub.all_passed();
  }
  report.add("numeric-cross-validation", numeric_ok,
             {{"max_deviation", worst}, {"tol", opts.tol}});
  return report;
}

/// Computes the Klein-to-Poincare stretch germ and verifies the conformal
/// collar fields of the boost generators against the stretched projective
/// ones.
inline CheckReport run_klein_poincare_suite(int n, const SuiteOptions& opts) {
  if (n < 2 || opts.order < 6)
    throw std::invalid_argument("need n >= 2 and order >= 6");
  CheckReport report;
  report.command = "klein-poincare";
  report.inputs = {{"n", n}, {"order", opts.order}};

  const StretchGerm germ = klein_to_poincare_germ(opts.order);
  report.add("germ-valuation", germ.valuation() == 2,
             {{"valuation", germ.valuation()}, {"series", to_json(germ.series())}});
  report.add("germ-leading-coefficient",
             germ.leading_coeff() == Rational(1, 2),
             {{"leading", germ.leading_coeff().str()}});

  const PreparedChart chart =
      prepare_chart(BoundaryChart::first_axis(n, opts.order));
  for (int i = 0; i < n; ++i) {
    const auto sub = stretch_comparison_report(
        BoostRotation::boost_along(n, i), chart, germ);
    report.add("conformal-matches-stretch[boost " + std::to_string(i) + "]",
               sub.all_passed());
  }
  return report;
}

namespace detail {
inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}
}  // namespace detail

inline MatrixLieAlgebra resolve_algebra_spec(const std::string& spec) {
  if (spec.find(".json") != std::string::npos ||
      std::filesystem::exists(spec))
    return algebra_from_json(detail::load_json_file(spec));
  return builtin_algebra(spec);
}

inline Subalgebra resolve_subalgebra_spec(const MatrixLieAlgebra& g,
                                          const std::string& spec) {
  if (spec.find(".json") != std::string::npos ||
      std::filesystem::exists(spec)) {
    const auto j = detail::load_json_file(spec);
    const int d = g.matrix_dim();
    std::vector<MatQ> members;
    for (const auto& rows : j.at("basis")) {
      MatQ m(d, d);
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
          m(i, k) = parse_rational(rows[i * d + k].get<std::string>());
      members.push_back(std::move(m));
    }
    return subalgebra_from_matrices(g, members);
  }
  return builtin_subalgebra(g, spec);
}

/// Condition (A) proxy over one pair or a direct product of several pairs.
inline CheckReport run_condition_a_suite(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("no algebra pair given");
  CheckReport report;
  report.command = "condition-a";
  nlohmann::json input_pairs = nlohmann::json::array();
  for (const auto& [gs, hs] : pairs) input_pairs.push_back({gs, hs});
  report.inputs = {{"pairs", input_pairs}};

  MatrixLieAlgebra g = resolve_algebra_spec(pairs.front().first);
  Subalgebra h = resolve_subalgebra_spec(g, pairs.front().second);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const MatrixLieAlgebra gi = resolve_algebra_spec(pairs[i].first);
    const Subalgebra hi = resolve_subalgebra_spec(gi, pairs[i].second);
    auto [gp, hp] = direct_product(g, h, gi, hi);
    g = std::move(gp);
    h = std::move(hp);
  }

  const Subalgebra n = normalizer(g, h);
  const Subalgebra z = center(g);
  const bool proxy = condition_a_proxy(g, h, n, z);
  report.add("condition-A-proxy", proxy,
             {{"algebra", g.name()},
              {"algebra_dim", g.dim()},
              {"matrix_dim", g.matrix_dim()},
              {"subalgebra_dim", h.dim()},
              {"normalizer_dim", n.dim()},
              {"center_dim", z.dim()},
              {"proxy_holds", proxy}});
  return report;
}

inline CheckReport run_poset_check(int a, int b) {
  CheckReport report;
  report.command = "poset-check";
  report.inputs = {{"a", a}, {"b", b}};
  const bool tighter = is_tighter(StretchClass(a), StretchClass(b));
  report.add_status("is-tighter", CheckStatus::pass,
                    {{"tighter", tighter},
                     {"meaning", "class y^" + std::to_string(b) +
                                     (tighter ? " lies below " : " is unrelated or above ") +
                                     "class y^" + std::to_string(a)}});
  return report;
}

inline CheckReport run_poset_tightest(const std::vector<int>& values) {
  CheckReport report;
  report.command = "poset-tightest";
  report.inputs = {{"classes", values}};
  std::vector<StretchClass> sample;
  for (int v : values) sample.emplace_back(v);
  const auto best = tightest(sample);
  nlohmann::json details;
  if (best)
    details["tightest"] = best->p;
  else
    details["tightest"] = nullptr;
  report.add_status("tightest", CheckStatus::pass, details);
  return report;
}

inline CheckReport run_poset_certify(int p, int q, bool condition_a) {
  CheckReport report;
  report.command = "poset-certify";
  report.inputs = {{"p", p}, {"q", q}, {"condition_a", condition_a}};
  const Certificate cert =
      nonconjugacy_certificate(StretchClass(p), StretchClass(q), condition_a);
  const CheckStatus status = cert.kind == Certificate::Kind::Inconclusive
                                 ? CheckStatus::inconclusive
                                 : CheckStatus::pass;
  report.add_status("certificate", status, cert.to_json());
  return report;
}

inline CheckReport run_poset_enumerate(int k) {
  CheckReport report;
  report.command = "poset-enumerate";
  report.inputs = {{"k", k}};
  const auto classes = enumerate_classes(k);
  std::vector<int> ps;
  for (const auto& c : classes) ps.push_back(c.p);
  bool pairwise = true;
  for (const auto& a : classes)
    for (const auto& b : classes) {
      if (a.p == b.p) continue;
      if (nonconjugacy_certificate(a, b, true).kind !=
          Certificate::Kind::NonConjugate)
        pairwise = false;
    }
  report.add("pairwise-nonconjugate", pairwise, {{"classes", ps}});
  return report;
}

inline CheckReport run_poset_axioms(int upto) {
  CheckReport report = partial_order_axioms(enumerate_classes(upto));
  report.inputs = {{"upto", upto}};
  return report;
}

/// Eigenvalue multiplicities of the geodesic-symmetry differential:
/// (2, 2m-2) for the complex case, (1, n-1) for the real one.
inline CheckReport run_eigencheck_suite(const std::string& space, int m) {
  CheckReport report;
  report.command = "eigencheck";
  report.inputs = {{"space", space}, {"m", m}};
  std::pair<int, int> actual, expected;
  if (space == "complex") {
    actual = complex_symmetry_multiplicities(m);
    expected = {2, 2 * m - 2};
  } else if (space == "real") {
    actual = real_symmetry_multiplicities(m);
    expected = {1, m - 1};
  } else {
    throw std::invalid_argument("space must be 'complex' or 'real'");
  }
  report.add("symmetry-multiplicities", actual == expected,
             {{"plus", actual.first},
              {"minus", actual.second},
              {"expected_plus", expected.first},
              {"expected_minus", expected.second}});
  return report;
}

}  // namespace stretchforge
