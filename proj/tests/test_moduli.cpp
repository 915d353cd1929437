#include <catch2/catch_amalgamated.hpp>

#include <stretchforge/moduli.hpp>
#include <stretchforge/stretch.hpp>

using namespace stretchforge;

TEST_CASE("tightness is divisibility of the valuations") {
  CHECK(is_tighter(StretchClass(4), StretchClass(2)));
  CHECK_FALSE(is_tighter(StretchClass(2), StretchClass(3)));
  for (int p = 1; p <= 40; ++p) {
    CHECK(is_tighter(StretchClass(p), StretchClass(p)));
    CHECK(is_tighter(StretchClass(p), StretchClass(1)));
  }
  CHECK_THROWS_AS(StretchClass(0), std::invalid_argument);
}

TEST_CASE("tightness matches the germ-composition oracle") {
  // b | a exactly when the connecting map y^{a/b} is a valid analytic germ
  // with y^a = (y^{a/b}) composed into y^b.
  for (int a = 1; a <= 24; ++a)
    for (int b = 1; b <= 24; ++b) {
      bool has_connecting_germ = false;
      for (int e = 1; e <= a; ++e) {
        if (b * e != a) continue;
        const auto connecting = monomial_germ(e, a + 2);
        const auto composed = substitute_y(
            TruncatedSeries::monomial(1, a + 2, {b}, Rational(1)),
            connecting.series());
        CHECK(equal_at_common_order(
            composed, TruncatedSeries::monomial(1, a + 2, {a}, Rational(1))));
        CHECK(connecting.valuation() == e);
        has_connecting_germ = true;
      }
      CHECK(is_tighter(StretchClass(a), StretchClass(b)) ==
            has_connecting_germ);
    }
}

TEST_CASE("partial order axioms hold on an exhaustive sample") {
  const auto report = partial_order_axioms(enumerate_classes(50));
  CHECK(report.all_passed());
  REQUIRE(report.checks.size() == 3);

  // Antisymmetry witness: 6 and 6 relate both ways only because they are equal.
  CHECK(is_tighter(StretchClass(6), StretchClass(6)));
  // Transitivity witness: 12 > 6 > 3 forces 12 > 3.
  CHECK(is_tighter(StretchClass(12), StretchClass(6)));
  CHECK(is_tighter(StretchClass(6), StretchClass(3)));
  CHECK(is_tighter(StretchClass(12), StretchClass(3)));
}

TEST_CASE("tightest elements") {
  const std::vector<StretchClass> with_one = {
      StretchClass(1), StretchClass(2), StretchClass(3), StretchClass(6)};
  auto best = tightest(with_one);
  REQUIRE(best.has_value());
  CHECK(best->p == 1);

  CHECK_FALSE(tightest({StretchClass(2), StretchClass(3)}).has_value());

  best = tightest({StretchClass(4)});
  REQUIRE(best.has_value());
  CHECK(best->p == 4);

  // A minimum need not be the trivial class.
  best = tightest({StretchClass(2), StretchClass(4), StretchClass(8)});
  REQUIRE(best.has_value());
  CHECK(best->p == 2);
}

TEST_CASE("certificates") {
  const auto separated =
      nonconjugacy_certificate(StretchClass(2), StretchClass(3), true);
  CHECK(separated.kind == Certificate::Kind::NonConjugate);
  CHECK(separated.justification.size() == 3);

  const auto same =
      nonconjugacy_certificate(StretchClass(5), StretchClass(5), true);
  CHECK(same.kind == Certificate::Kind::Conjugate);

  const auto open =
      nonconjugacy_certificate(StretchClass(2), StretchClass(3), false);
  CHECK(open.kind == Certificate::Kind::Inconclusive);

  const auto j = separated.to_json();
  CHECK(j["kind"] == "NonConjugate");
  CHECK(j["p"] == 2);
  CHECK(j["q"] == 3);
  CHECK(j["condition_A"] == true);
  CHECK(j["justification"].is_array());

  for (int p = 1; p <= 10; ++p)
    for (int q = 1; q <= 10; ++q)
      for (bool cond : {true, false})
        CHECK(nonconjugacy_certificate(StretchClass(p), StretchClass(q), cond)
                  .kind ==
              nonconjugacy_certificate(StretchClass(q), StretchClass(p), cond)
                  .kind);
}

TEST_CASE("class enumeration") {
  const auto classes = enumerate_classes(3);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].p == 1);
  CHECK(classes[2].p == 3);
  CHECK(enumerate_classes(1).size() == 1);
  CHECK_THROWS_AS(enumerate_classes(0), std::invalid_argument);

  for (const auto& a : enumerate_classes(10))
    for (const auto& b : enumerate_classes(10)) {
      if (a.p == b.p) continue;
      CHECK(nonconjugacy_certificate(a, b, true).kind ==
            Certificate::Kind::NonConjugate);
    }
}
