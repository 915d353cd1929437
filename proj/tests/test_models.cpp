#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <stretchforge/models.hpp>
#include <stretchforge/suites.hpp>

using namespace stretchforge;

namespace {

TruncatedSeries b_dot_u_series(const BoostRotation& x, int order) {
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

TEST_CASE("skew validation of so(1,n) elements") {
  MatQ bad = MatQ::Zero(2, 2);
  bad(0, 1) = 1;
  CHECK_THROWS_AS(BoostRotation(VecQ::Zero(2), bad), std::invalid_argument);
  CHECK_THROWS_AS(BoostRotation(VecQ::Zero(3), MatQ::Zero(2, 2)), VarMismatch);
}

TEST_CASE("so(1,n) bracket decomposes like the matrix commutator") {
  DeterministicRng rng(3);
  for (int n : {2, 3, 4})
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = rng.boost_rotation(n);
      const auto y = rng.boost_rotation(n);
      CHECK(to_matrix(bracket(x, y)) ==
            MatQ(to_matrix(x) * to_matrix(y) - to_matrix(y) * to_matrix(x)));
    }
}

TEST_CASE("Klein fields: rotations are linear, boosts are the known quadric") {
  const auto rot = BoostRotation::rotation_in(3, 0, 1);
  const auto vrot = klein_vector_field(rot, 6);
  CHECK(vrot.components()[0] == TruncatedSeries::variable(3, 6, 1));
  CHECK(vrot.components()[1] == -TruncatedSeries::variable(3, 6, 0));
  CHECK(vrot.components()[2].is_zero());

  const auto boost = BoostRotation::boost_along(2, 0);
  const auto v = klein_vector_field(boost, 6);
  const auto u1 = TruncatedSeries::variable(2, 6, 0);
  const auto u2 = TruncatedSeries::variable(2, 6, 1);
  CHECK(v.components()[0] ==
        TruncatedSeries::constant(2, 6, Rational(1)) - u1 * u1);
  CHECK(v.components()[1] == -(u1 * u2));
}

TEST_CASE("radial identity for Klein and Poincare fields") {
  DeterministicRng rng(5);
  for (int n : {2, 3, 4})
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = rng.boost_rotation(n);

      const auto klein = klein_vector_field(x, 7);
      CHECK(radial_component(klein) ==
            b_dot_u_series(x, 7) * one_minus_norm_sq(n, 7));
      CHECK(tangent_to_unit_sphere(klein));

      const auto poincare = poincare_vector_field(x, 7);
      CHECK(radial_component(poincare) ==
            Rational(1, 2) * b_dot_u_series(x, 7) * one_minus_norm_sq(n, 7));
      CHECK(tangent_to_unit_sphere(poincare));
    }
}

TEST_CASE("a constant field is not tangent to the sphere") {
  const int n = 2;
  std::vector<TruncatedSeries> comps = {
      TruncatedSeries::constant(n, 6, Rational(1)),
      TruncatedSeries::zero(n, 6)};
  const PolyVectorField constant_field(std::move(comps));
  CHECK_FALSE(tangent_to_unit_sphere(constant_field));
  CHECK_THROWS_AS(
      to_collar_field(constant_field, BoundaryChart::first_axis(n, 6)),
      NotSphereTangent);
}

TEST_CASE("field bracket: alternating, rotation composition, anti-morphism") {
  DeterministicRng rng(7);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = rng.boost_rotation(n);
      const auto y = rng.boost_rotation(n);
      const auto vx = klein_vector_field(x, 7);
      const auto vy = klein_vector_field(y, 7);

      const auto self = field_bracket(vx, vx);
      for (const auto& c : self.components()) CHECK(c.is_zero());

      // fundamental fields of the left action: [V_X, V_Y] = -V_[X,Y]
      const auto lhs = field_bracket(vx, vy);
      const auto rhs = klein_vector_field(bracket(x, y), 7);
      for (int k = 0; k < n; ++k)
        CHECK(equal_at_common_order(lhs.components()[k],
                                    -rhs.components()[k]));

      const auto wx = poincare_vector_field(x, 7);
      const auto wy = poincare_vector_field(y, 7);
      const auto plhs = field_bracket(wx, wy);
      const auto prhs = poincare_vector_field(bracket(x, y), 7);
      for (int k = 0; k < n; ++k)
        CHECK(equal_at_common_order(plhs.components()[k],
                                    -prhs.components()[k]));
    }
  }

  // Two pure rotation fields compose through the reversed matrix bracket.
  const auto a1 = BoostRotation::rotation_in(3, 0, 1);
  const auto a2 = BoostRotation::rotation_in(3, 1, 2);
  const auto br = field_bracket(klein_vector_field(a1, 6),
                                klein_vector_field(a2, 6));
  const MatQ reversed = a2.rotation * a1.rotation - a1.rotation * a2.rotation;
  for (int k = 0; k < 3; ++k) {
    TruncatedSeries expected = TruncatedSeries::zero(3, 5);
    for (int j = 0; j < 3; ++j)
      if (reversed(k, j) != 0)
        expected = expected +
                   reversed(k, j) * TruncatedSeries::variable(3, 5, j);
    CHECK(equal_at_common_order(br.components()[k], expected));
  }
}

TEST_CASE("chart frames are exactly orthogonal with first column p0") {
  VecQ p(3);
  p << Rational(3, 5), Rational(4, 5), Rational(0);
  const BoundaryChart chart(p, 6);
  CHECK(MatQ(chart.frame.transpose() * chart.frame) ==
        MatQ(MatQ::Identity(3, 3)));
  CHECK(VecQ(chart.frame.col(0)) == p);

  VecQ not_unit(2);
  not_unit << Rational(1, 2), Rational(1, 2);
  CHECK_THROWS_AS(BoundaryChart(not_unit, 6), std::invalid_argument);
}

TEST_CASE("collar conversion: rotations fixing the chart point, boosts, zero") {
  // A rotation acting on the plane orthogonal to p0 = e1 has no normal part.
  const auto chart3 = BoundaryChart::first_axis(3, 7);
  const auto rot = klein_vector_field(BoostRotation::rotation_in(3, 1, 2), 7);
  CHECK(to_collar_field(rot, chart3).normal().is_zero());

  // Boost along p0 = e1 in dimension 2: normal is -sqrt(1-x^2)(2y - y^2).
  const auto chart2 = BoundaryChart::first_axis(2, 8);
  const auto boost = klein_vector_field(BoostRotation::boost_along(2, 0), 8);
  const auto collar = to_collar_field(boost, chart2);
  const auto sigma = sqrt_series(
      TruncatedSeries::constant(2, 8, Rational(1)) -
      TruncatedSeries::variable(2, 8, 0) * TruncatedSeries::variable(2, 8, 0));
  const auto y = TruncatedSeries::variable(2, 8, 1);
  const auto expected_normal =
      -(sigma * (Rational(2) * y - y * y));
  CHECK(collar.normal() == expected_normal);
  CHECK(valuation_profile(collar).normal == 1);
  CHECK(valuation_profile(collar).tangential[0] == 0);

  const PolyVectorField zero_field(
      {TruncatedSeries::zero(3, 7), TruncatedSeries::zero(3, 7),
       TruncatedSeries::zero(3, 7)});
  const auto zero_collar = to_collar_field(zero_field, chart3);
  CHECK(zero_collar.normal().is_zero());
  for (const auto& t : zero_collar.tangential()) CHECK(t.is_zero());
}

TEST_CASE("collar conversion works in a non-axis rational chart") {
  VecQ p(2);
  p << Rational(3, 5), Rational(4, 5);
  const BoundaryChart chart(p, 7);
  DeterministicRng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto vf =
        to_collar_field(klein_vector_field(rng.boost_rotation(2), 7), chart);
    CHECK(vf.boundary_tangent());
  }
}

TEST_CASE("collar conversion commutes with the field bracket") {
  DeterministicRng rng(17);
  for (int n : {2, 3}) {
    const auto chart8 = prepare_chart(BoundaryChart::first_axis(n, 8));
    const auto chart7 = prepare_chart(BoundaryChart::first_axis(n, 7));
    for (int trial = 0; trial < 5; ++trial) {
      const auto vx = klein_vector_field(rng.boost_rotation(n), 8);
      const auto vy = klein_vector_field(rng.boost_rotation(n), 8);
      const auto converted_bracket =
          to_collar_field(field_bracket(vx, vy), chart7);
      const auto bracketed_conversion = field_bracket(
          to_collar_field(vx, chart8), to_collar_field(vy, chart8));
      CHECK(equal_at_common_order(converted_bracket, bracketed_conversion));
    }
  }
}

TEST_CASE("the stretch relation holds in non-axis charts too") {
  const auto germ = klein_to_poincare_germ(8);
  VecQ p2(2);
  p2 << Rational(3, 5), Rational(4, 5);
  const auto prepared2 = prepare_chart(BoundaryChart(p2, 8));
  for (int i = 0; i < 2; ++i)
    CHECK(stretch_comparison_report(BoostRotation::boost_along(2, i),
                                    prepared2, germ)
              .all_passed());

  VecQ p3(3);
  p3 << Rational(2, 3), Rational(2, 3), Rational(1, 3);
  const auto prepared3 = prepare_chart(BoundaryChart(p3, 8));
  CHECK(stretch_comparison_report(BoostRotation::rotation_in(3, 0, 2),
                                  prepared3, germ)
            .all_passed());
}

TEST_CASE("Klein to Poincare germ: valuation 2, leading 1/2, exact law") {
  const auto germ = klein_to_poincare_germ(8);
  CHECK(germ.valuation() == 2);
  CHECK(germ.leading_coeff() == Rational(1, 2));

  // Frozen leading coefficients of y_P^2/(2 - 2y_P + y_P^2).
  CHECK(germ.series().coeff({2}) == Rational(1, 2));
  CHECK(germ.series().coeff({3}) == Rational(1, 2));
  CHECK(germ.series().coeff({4}) == Rational(1, 4));
  CHECK(germ.series().coeff({5}) == 0);
  CHECK(germ.series().coeff({6}) == Rational(-1, 8));
  CHECK(germ.series().coeff({7}) == Rational(-1, 8));

  // Symbolic oracle: series * (2 - 2t + t^2) == t^2 up to the order.
  const auto denom = TruncatedSeries::poly_y(
      {Rational(2), Rational(-2), Rational(1)}, 8);
  CHECK(germ.series() * denom ==
        TruncatedSeries::monomial(1, 8, {2}, Rational(1)));

  CHECK(equivalent(germ, monomial_germ(2, 8)));
  CHECK_THROWS_AS(klein_to_poincare_germ(2), std::invalid_argument);
}

TEST_CASE("interior radial maps invert each other to truncation order") {
  const auto p2k = radial_poincare_to_klein(9);
  const auto k2p = radial_klein_to_poincare(9);
  const auto t = TruncatedSeries::variable(1, 9, 0);
  CHECK(equal_at_common_order(substitute_y(p2k, k2p), t));
  CHECK(equal_at_common_order(substitute_y(k2p, p2k), t));
}

TEST_CASE("Poincare fields: pure rotation and the boost at the origin") {
  const auto rot = BoostRotation::rotation_in(2, 0, 1);
  const auto wrot = poincare_vector_field(rot, 6);
  CHECK(wrot.components()[0] == TruncatedSeries::variable(2, 6, 1));
  CHECK(wrot.components()[1] == -TruncatedSeries::variable(2, 6, 0));

  const auto boost = poincare_vector_field(BoostRotation::boost_along(2, 0), 6);
  CHECK(boost.components()[0].constant_term() == Rational(1, 2));
  CHECK(boost.components()[1].constant_term() == 0);
}

TEST_CASE("conformal model is the valuation-2 stretch of the projective one") {
  DeterministicRng rng(13);
  for (int n : {2, 3}) {
    const auto chart = BoundaryChart::first_axis(n, 8);
    for (int i = 0; i < n; ++i) {
      const auto report = conformal_is_stretch_of_projective(
          BoostRotation::boost_along(n, i), chart);
      CHECK(report.all_passed());
    }
    const auto random_report =
        conformal_is_stretch_of_projective(rng.boost_rotation(n), chart);
    CHECK(random_report.all_passed());

    // Rotations fixing p0 convert identically in both models.
    if (n == 3) {
      const auto rot_report = conformal_is_stretch_of_projective(
          BoostRotation::rotation_in(3, 1, 2), chart);
      CHECK(rot_report.all_passed());
    }
  }

  // Lowest admissible order.
  CHECK(conformal_is_stretch_of_projective(
            BoostRotation::boost_along(3, 1), BoundaryChart::first_axis(3, 6))
            .all_passed());

  // The trivial germ cannot relate the two models.
  const auto chart = prepare_chart(BoundaryChart::first_axis(2, 8));
  const auto bad = stretch_comparison_report(
      BoostRotation::boost_along(2, 0), chart, monomial_germ(1, 8));
  CHECK(bad.any_failed());

  CHECK_THROWS_AS(
      conformal_is_stretch_of_projective(BoostRotation::boost_along(2, 0),
                                         BoundaryChart::first_axis(2, 4)),
      std::invalid_argument);
}

TEST_CASE("geodesic symmetry multiplicities") {
  CHECK(complex_symmetry_multiplicities(2) == std::pair<int, int>(2, 2));
  CHECK(complex_symmetry_multiplicities(3) == std::pair<int, int>(2, 4));
  CHECK(complex_symmetry_multiplicities(4) == std::pair<int, int>(2, 6));

  CHECK(real_symmetry_multiplicities(2) == std::pair<int, int>(1, 1));
  CHECK(real_symmetry_multiplicities(3) == std::pair<int, int>(1, 2));
  CHECK(real_symmetry_multiplicities(5) == std::pair<int, int>(1, 4));

  CHECK_THROWS_AS(complex_symmetry_multiplicities(1), std::invalid_argument);
}

TEST_CASE("projective differential at the origin") {
  // Affine maps [1 : u] -> [1 : B u + c] differentiate to B at 0.
  MatQ t = MatQ::Zero(3, 3);
  t(0, 0) = 2;  // scale invariance of projective coordinates
  t(1, 1) = 4;
  t(1, 2) = 2;
  t(2, 1) = -6;
  t(2, 2) = 8;
  t(1, 0) = 2;
  const MatQ d = projective_differential_at_origin(t);
  CHECK(d(0, 0) == 2);
  CHECK(d(0, 1) == 1);
  CHECK(d(1, 0) == -3);
  CHECK(d(1, 1) == 4);
}
