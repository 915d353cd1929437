// Acceptance suite: one pass/fail line per criterion, non-zero exit when
// any criterion fails. Tolerances and runtime budgets are pinned in code.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <stretchforge/suites.hpp>

using namespace stretchforge;

namespace {

struct Outcome {
  bool ok = false;
  std::string note;
};

int failures = 0;

void run_criterion(int id, const std::string& label,
                   const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.note = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  if (!outcome.ok) ++failures;
  std::printf("%s  criterion %d: %s (%.0f ms)%s%s\n",
              outcome.ok ? "PASS" : "FAIL", id, label.c_str(), ms,
              outcome.note.empty() ? "" : " -- ", outcome.note.c_str());
  std::fflush(stdout);
}

Outcome budget(bool ok, double elapsed_ms, double budget_ms,
               const std::string& note = "") {
  Outcome o;
  o.ok = ok && elapsed_ms < budget_ms;
  o.note = note;
  if (ok && elapsed_ms >= budget_ms)
    o.note = "over runtime budget of " + std::to_string(budget_ms) + " ms";
  return o;
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

TruncatedSeries b_dot_u(const BoostRotation& x, int order) {
  const int n = x.n();
  TruncatedSeries s = TruncatedSeries::zero(n, order);
  for (int i = 0; i < n; ++i)
    s = s + x.boost(i) * TruncatedSeries::variable(n, order, i);
  return s;
}

TruncatedSeries one_minus_norm_sq(int n, int order) {
  TruncatedSeries s = TruncatedSeries::constant(n, order, Rational(1));
  for (int i = 0; i < n; ++i) {
    const auto ui = TruncatedSeries::variable(n, order, i);
    s = s - ui * ui;
  }
  return s;
}

}  // namespace

int main() {
  // 1. The conformal ball model is the stretch of the projective one by a
  //    germ of valuation exactly 2 with leading coefficient 1/2.
  run_criterion(1, "Klein-Poincare germ: valuation 2, leading coefficient 1/2",
                [] {
                  const auto t0 = std::chrono::steady_clock::now();
                  SuiteOptions opts;
                  opts.order = 8;
                  bool ok = true;
                  for (int n : {2, 3, 4}) {
                    const auto report = run_klein_poincare_suite(n, opts);
                    ok = ok && report.all_passed();
                  }
                  return budget(ok, ms_since(t0), 1000.0);
                });

  // 2. Stretched generators stay tangent and pullback commutes with the
  //    field bracket, exactly, on >= 20 random pairs per (n, p).
  run_criterion(
      2, "stretch regularity: tangency and bracket homomorphism", [] {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteOptions opts;
        opts.order = 8;
        opts.pairs = 20;
        opts.samples = 5;
        bool ok = true;
        for (int n : {2, 3})
          for (int p : {1, 2, 3, 5}) {
            opts.seed = 100 * n + p;
            const auto report = run_stretch_suite(n, p, opts);
            ok = ok && report.all_passed();
          }
        return budget(ok, ms_since(t0), 30000.0);
      });

  // 3. Symbolic pullback against the chain rule at 50 interior samples,
  //    tolerance 1e-9, collar order 10, for three representative germs.
  run_criterion(
      3, "numeric cross-validation of the pullback at tol 1e-9", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const double tol = 1e-9;
        const int order = 10;
        const int germ_order = 44;  // exact polynomial germs, carried deep
        const std::vector<StretchGerm> germs = {
            monomial_germ(2, germ_order), monomial_germ(3, germ_order),
            make_stretch_germ(TruncatedSeries::poly_y(
                {Rational(0), Rational(2), Rational(1)}, germ_order))};
        bool ok = true;
        double worst = 0;
        for (int n : {2, 3}) {
          DeterministicRng rng(7 * n);
          const auto samples = collar_samples(rng, n, 50);
          const auto chart =
              prepare_chart(BoundaryChart::first_axis(n, order));
          for (const auto& x : lorentz_basis(n)) {
            const auto vf =
                to_collar_field(klein_vector_field(x, order), chart);
            for (const auto& germ : germs) {
              const auto report =
                  numeric_pullback_check(vf, germ, samples, tol);
              worst = std::max(worst, report.checks.front()
                                          .details["max_deviation"]
                                          .get<double>());
              ok = ok && report.all_passed();
            }
          }
        }
        return budget(ok, ms_since(t0), 10000.0,
                      "max deviation " + std::to_string(worst));
      });

  // 4. Valuation profiles transform by v -> pv (tangential) and
  //    v -> pv - p + 1 (normal), exactly, on all built-in fields.
  run_criterion(4, "valuation transform law", [] {
    bool ok = true;
    for (int n : {2, 3, 4}) {
      const auto chart = prepare_chart(BoundaryChart::first_axis(n, 8));
      for (const auto& x : lorentz_basis(n)) {
        const auto vf = to_collar_field(klein_vector_field(x, 8), chart);
        for (int p = 1; p <= 5; ++p)
          ok = ok && (valuation_profile(pullback_analytic(vf, p)) ==
                      valuation_transform_law(valuation_profile(vf), p));
      }
    }
    Outcome o;
    o.ok = ok;
    return o;
  });

  // 5. The stabilizer condition proxy holds for the standard families and
  //    all pairwise direct products.
  run_criterion(5, "condition (A) proxy on families and direct products", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, std::string>> specs;
    for (int n = 2; n <= 5; ++n)
      specs.push_back({"so(1," + std::to_string(n) + ")",
                       "so(" + std::to_string(n) + ")"});
    for (int n = 2; n <= 3; ++n)
      specs.push_back(
          {"se(" + std::to_string(n) + ")", "so(" + std::to_string(n) + ")"});
    for (int n = 1; n <= 4; ++n)
      specs.push_back({"abelian(" + std::to_string(n) + ")", "0"});

    bool ok = true;
    std::vector<std::pair<MatrixLieAlgebra, Subalgebra>> base;
    for (const auto& pair : specs) {
      ok = ok && run_condition_a_suite({pair}).all_passed();
      const MatrixLieAlgebra g = resolve_algebra_spec(pair.first);
      Subalgebra h = resolve_subalgebra_spec(g, pair.second);
      base.emplace_back(g, std::move(h));
    }
    for (const auto& first : base)
      for (const auto& second : base) {
        const auto [g, h] =
            direct_product(first.first, first.second, second.first,
                           second.second);
        ok = ok && condition_a_proxy(g, h);
      }
    return budget(ok, ms_since(t0), 10000.0);
  });

  // 6. The analytic moduli poset is (N, divisibility): axioms on 1..200,
  //    the trivial class is tightest, and an independent divisor oracle.
  run_criterion(6, "divisibility poset structure on {1..200}", [] {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = partial_order_axioms(enumerate_classes(200)).all_passed();

    for (int k = 1; k <= 200 && ok; ++k) {
      const auto best = tightest(enumerate_classes(k));
      ok = best.has_value() && best->p == 1;
    }
    for (int a = 1; a <= 200 && ok; ++a)
      for (int b = 1; b <= 200; ++b) {
        bool divides = false;
        for (int e = 1; b * e <= a; ++e)
          if (b * e == a) divides = true;
        if (is_tighter(StretchClass(a), StretchClass(b)) != divides) {
          ok = false;
          break;
        }
      }
    return budget(ok, ms_since(t0), 1000.0);
  });

  // 7. Certificates: distinct classes are separated under condition (A),
  //    equal classes come with the trivial conjugacy witness.
  run_criterion(7, "nonconjugacy certificates for p, q <= 10", [] {
    bool ok = true;
    for (int p = 1; p <= 10; ++p)
      for (int q = 1; q <= 10; ++q) {
        const auto cert =
            nonconjugacy_certificate(StretchClass(p), StretchClass(q), true);
        ok = ok && (cert.kind == (p == q ? Certificate::Kind::Conjugate
                                         : Certificate::Kind::NonConjugate));
      }
    Outcome o;
    o.ok = ok;
    return o;
  });

  // 8. Geodesic-symmetry differentials have eigenvalues +1, -1 with
  //    multiplicities (k, mk - k): k = 2 complex, k = 1 real.
  run_criterion(8, "geodesic-symmetry eigenvalue multiplicities", [] {
    bool ok = true;
    for (int m : {2, 3, 4})
      ok = ok && complex_symmetry_multiplicities(m) ==
                     std::pair<int, int>(2, 2 * m - 2);
    for (int n : {2, 3, 4, 5})
      ok = ok &&
           real_symmetry_multiplicities(n) == std::pair<int, int>(1, n - 1);
    Outcome o;
    o.ok = ok;
    return o;
  });

  // 9. The radial tangency identities hold as exact polynomial identities
  //    for random rational Lie-algebra elements.
  run_criterion(9, "boundary tangency identities for the ball models", [] {
    bool ok = true;
    for (int n : {2, 3, 4}) {
      DeterministicRng rng(31 * n);
      for (int trial = 0; trial < 20; ++trial) {
        const auto x = rng.boost_rotation(n);
        const auto klein = klein_vector_field(x, 7);
        ok = ok && (radial_component(klein) ==
                    b_dot_u(x, 7) * one_minus_norm_sq(n, 7));
        const auto poincare = poincare_vector_field(x, 7);
        ok = ok && (radial_component(poincare) ==
                    Rational(1, 2) * b_dot_u(x, 7) * one_minus_norm_sq(n, 7));
      }
    }
    Outcome o;
    o.ok = ok;
    return o;
  });

  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
