#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include <stretchforge/report.hpp>
#include <stretchforge/truncated_series.hpp>

namespace stretchforge {

/// Germ at 0 of an analytic stretching function: univariate series in y with
/// f(0) = 0 and positive leading coefficient. The quotient f/f' — the series
/// that drives the normal part of smooth pullbacks — is computed and
/// validated at construction: it always has the form (y/p)(1 + O(y)).
class StretchGerm {
 public:
  static StretchGerm from_series(const TruncatedSeries& series) {
    if (series.num_vars() != 1)
      throw VarMismatch("stretch germ series must be univariate");
    if (series.is_zero()) throw NotAGerm("zero series");
    if (series.constant_term() != 0) throw NotAGerm("f(0) != 0");
    const auto val = y_valuation(series);
    const int p = *val;
    const Rational lead = series.coeff({p});
    if (lead <= 0) throw NotAGerm("leading coefficient must be positive");

    // f = y^p u with u a unit; f/f' = y u / (p u + y u').
    TruncatedSeries unit = series;
    for (int k = 0; k < p; ++k) unit = divide_by_y(unit);
    const TruncatedSeries denom =
        Rational(p) * unit + mul_by_y(derivative(unit, 0));
    const TruncatedSeries quotient =
        mul_by_y(unit * invert_unit(denom));
    if (y_valuation(quotient) != std::optional<int>(1) ||
        quotient.coeff({1}) != Rational(1, p))
      throw InternalInconsistency("f/f' is not (y/p)(1 + O(y))");

    return StretchGerm(series, p, lead, quotient);
  }

  const TruncatedSeries& series() const { return series_; }
  int valuation() const { return valuation_; }
  const Rational& leading_coeff() const { return leading_coeff_; }

  /// f/f' as a series; valuation 1 with leading coefficient 1/valuation().
  const TruncatedSeries& quotient_by_derivative() const { return quotient_; }

  bool is_trivial() const { return valuation_ == 1; }

 private:
  StretchGerm(TruncatedSeries series, int valuation, Rational leading_coeff,
              TruncatedSeries quotient)
      : series_(std::move(series)),
        valuation_(valuation),
        leading_coeff_(std::move(leading_coeff)),
        quotient_(std::move(quotient)) {}

  TruncatedSeries series_;
  int valuation_;
  Rational leading_coeff_;
  TruncatedSeries quotient_;
};

inline StretchGerm make_stretch_germ(const TruncatedSeries& series) {
  return StretchGerm::from_series(series);
}

/// The canonical germ y -> c y^p.
inline StretchGerm monomial_germ(int p, int trunc_order,
                                 const Rational& c = Rational(1)) {
  return make_stretch_germ(
      TruncatedSeries::monomial(1, trunc_order, {p}, c));
}

/// Analytic germs are conjugate to their leading power, so equivalence is
/// valuation equality.
inline bool equivalent(const StretchGerm& f, const StretchGerm& g) {
  return f.valuation() == g.valuation();
}

/// Vector field near the boundary in collar coordinates (x_1..x_{n-1}, y):
/// n-1 tangential coefficient series and one normal coefficient series, all
/// in n variables at a common truncation order.
class CollarField {
 public:
  CollarField(std::vector<TruncatedSeries> tangential, TruncatedSeries normal)
      : tangential_(std::move(tangential)), normal_(std::move(normal)) {
    n_ = static_cast<int>(tangential_.size()) + 1;
    for (const auto& t : tangential_)
      if (t.num_vars() != n_)
        throw VarMismatch("tangential component num_vars != n");
    if (normal_.num_vars() != n_)
      throw VarMismatch("normal component num_vars != n");
    const int order = trunc_order();
    for (const auto& t : tangential_)
      if (t.trunc_order() != order)
        throw VarMismatch("components must share a truncation order");
  }

  static CollarField zero(int n, int trunc_order) {
    return CollarField(
        std::vector<TruncatedSeries>(n - 1,
                                     TruncatedSeries::zero(n, trunc_order)),
        TruncatedSeries::zero(n, trunc_order));
  }

  int dimension() const { return n_; }
  int trunc_order() const { return normal_.trunc_order(); }
  const std::vector<TruncatedSeries>& tangential() const { return tangential_; }
  const TruncatedSeries& normal() const { return normal_; }

  /// All n components, tangential first, normal last.
  std::vector<TruncatedSeries> components() const {
    auto all = tangential_;
    all.push_back(normal_);
    return all;
  }

  /// Tangency to {y = 0}: every normal term has y-exponent >= 1.
  bool boundary_tangent() const {
    const auto val = y_valuation(normal_);
    return !val || *val >= 1;
  }

  bool operator==(const CollarField& rhs) const {
    return tangential_ == rhs.tangential_ && normal_ == rhs.normal_;
  }

 private:
  int n_;
  std::vector<TruncatedSeries> tangential_;
  TruncatedSeries normal_;
};

inline bool equal_at_common_order(const CollarField& a, const CollarField& b) {
  if (a.dimension() != b.dimension()) return false;
  for (int i = 0; i + 1 < a.dimension(); ++i)
    if (!equal_at_common_order(a.tangential()[i], b.tangential()[i]))
      return false;
  return equal_at_common_order(a.normal(), b.normal());
}

namespace detail {
inline void require_tangent(const CollarField& vf) {
  if (!vf.boundary_tangent())
    throw NotTangent("normal component has a term with y-exponent 0");
}

template <typename YMap>
TruncatedSeries map_exponents(const TruncatedSeries& s, int order,
                              YMap y_map, const Rational& factor) {
  TruncatedSeries::TermMap mapped;
  const int y = s.num_vars() - 1;
  for (const auto& [e, c] : s.terms()) {
    auto me = e;
    me[y] = y_map(e[y]);
    mapped.emplace(std::move(me), factor * c);
  }
  return TruncatedSeries(s.num_vars(), order, std::move(mapped));
}

inline TruncatedSeries lift_to_last_var(const TruncatedSeries& g, int n) {
  TruncatedSeries::TermMap lifted;
  for (const auto& [e, c] : g.terms()) {
    TruncatedSeries::Exponents le(n, 0);
    le[n - 1] = e[0];
    lifted.emplace(std::move(le), c);
  }
  return TruncatedSeries(n, g.trunc_order(), std::move(lifted));
}
}  // namespace detail

/// Pullback of a boundary-tangent field under the stretch y -> y^p:
/// tangential x^a y^b -> x^a y^{pb}, normal x^a y^b -> (1/p) x^a y^{pb+1-p}.
/// Every stored term maps to a stored term (output order p(D-1)+1); the
/// result is complete below the input order.
inline CollarField pullback_analytic(const CollarField& vf, int p) {
  if (p < 1) throw std::invalid_argument("stretch exponent must be >= 1");
  detail::require_tangent(vf);
  const int order = p * (vf.trunc_order() - 1) + 1;
  std::vector<TruncatedSeries> tangential;
  tangential.reserve(vf.tangential().size());
  for (const auto& t : vf.tangential())
    tangential.push_back(detail::map_exponents(
        t, order, [p](int b) { return p * b; }, Rational(1)));
  TruncatedSeries normal = detail::map_exponents(
      vf.normal(), order, [p](int b) { return p * b + 1 - p; },
      Rational(1, p));
  return CollarField(std::move(tangential), std::move(normal));
}

/// Pullback under a general stretch germ f: tangential components become
/// a(x, f(y)); the normal component becomes b1(x, f(y)) (f/f')(y) with
/// b = b1 y the tangency factorization. Acts exactly on stored data (the
/// compositions and the product retain every term); the only truncated
/// ingredient is f/f', carried at the germ's order. For f = y^p this equals
/// pullback_analytic(vf, p) term for term.
inline CollarField pullback_smooth(const CollarField& vf,
                                   const StretchGerm& f) {
  detail::require_tangent(vf);
  std::vector<TruncatedSeries> tangential;
  tangential.reserve(vf.tangential().size());
  for (const auto& t : vf.tangential())
    tangential.push_back(substitute_y(t, f.series()));

  const int n = vf.dimension();
  const TruncatedSeries quotient_lifted =
      detail::lift_to_last_var(f.quotient_by_derivative(), n);
  TruncatedSeries normal = vf.normal().is_zero()
                               ? vf.normal()
                               : mul_full(substitute_y(divide_by_y(vf.normal()),
                                                       f.series()),
                                          quotient_lifted);

  // Components may reach different storage bounds; raise to the maximum.
  int order = normal.trunc_order();
  for (const auto& t : tangential) order = std::max(order, t.trunc_order());
  for (auto& t : tangential) t = with_trunc_order(t, order);
  normal = with_trunc_order(normal, order);
  return CollarField(std::move(tangential), std::move(normal));
}

/// Order-capped smooth pullback: same transform computed at storage order
/// <= order_cap. Complete below min(order_cap, germ order - valuation + 1);
/// much cheaper than the retaining variant when only low-degree
/// coefficients are compared.
inline CollarField pullback_smooth(const CollarField& vf, const StretchGerm& f,
                                   int order_cap) {
  detail::require_tangent(vf);
  std::vector<TruncatedSeries> tangential;
  tangential.reserve(vf.tangential().size());
  for (const auto& t : vf.tangential())
    tangential.push_back(substitute_y_at(t, f.series(), order_cap));

  const TruncatedSeries quotient_lifted =
      detail::lift_to_last_var(f.quotient_by_derivative(), vf.dimension());
  TruncatedSeries normal =
      vf.normal().is_zero()
          ? truncated(vf.normal(), order_cap)
          : substitute_y_at(divide_by_y(vf.normal()), f.series(), order_cap) *
                quotient_lifted;

  const int order = std::min(order_cap, normal.trunc_order());
  for (auto& t : tangential) t = truncated(t, order);
  normal = truncated(normal, order);
  return CollarField(std::move(tangential), std::move(normal));
}

/// y-valuation of each component; nullopt encodes infinity (zero series).
struct ValuationProfile {
  std::vector<std::optional<int>> tangential;
  std::optional<int> normal;

  bool operator==(const ValuationProfile&) const = default;
};

inline ValuationProfile valuation_profile(const CollarField& vf) {
  ValuationProfile profile;
  for (const auto& t : vf.tangential())
    profile.tangential.push_back(y_valuation(t));
  profile.normal = y_valuation(vf.normal());
  return profile;
}

/// How valuations move under the stretch y -> y^p: tangential v -> p v,
/// normal v -> p v - p + 1; infinity is fixed.
inline ValuationProfile valuation_transform_law(const ValuationProfile& in,
                                                int p) {
  ValuationProfile out;
  for (const auto& v : in.tangential)
    out.tangential.push_back(v ? std::optional<int>(p * *v) : std::nullopt);
  out.normal =
      in.normal ? std::optional<int>(p * *in.normal - p + 1) : std::nullopt;
  return out;
}

/// Cross-validates the symbolic pullback against the chain rule
/// (DPhi_f)^{-1} V(Phi_f(z)) evaluated in floating point at interior sample
/// points. Sample accuracy is bounded by the truncation tails at the sample
/// radius; callers pick samples inside the reliable radius for their
/// tolerance.
inline CheckReport numeric_pullback_check(
    const CollarField& vf, const StretchGerm& f,
    const std::vector<std::vector<double>>& samples, double tol) {
  const int n = vf.dimension();
  for (const auto& z : samples) {
    if (static_cast<int>(z.size()) != n)
      throw VarMismatch("sample point length != n");
    if (!(z.back() > 0.0 && z.back() < 1.0))
      throw SampleOutOfRange("sample y-coordinate must lie in (0,1)");
  }

  const CollarField pulled = pullback_smooth(vf, f);
  const TruncatedSeries f_derivative = derivative(f.series(), 0);

  double max_deviation = 0.0;
  for (const auto& z : samples) {
    const double y = z.back();
    const double fy = eval(f.series(), std::vector<double>{y});
    const double fpy = eval(f_derivative, std::vector<double>{y});
    std::vector<double> image = z;
    image.back() = fy;

    for (int i = 0; i < n - 1; ++i) {
      const double symbolic = eval(pulled.tangential()[i], z);
      const double direct = eval(vf.tangential()[i], image);
      max_deviation = std::max(max_deviation, std::abs(symbolic - direct));
    }
    const double symbolic = eval(pulled.normal(), z);
    const double direct = eval(vf.normal(), image) / fpy;
    max_deviation = std::max(max_deviation, std::abs(symbolic - direct));
  }

  CheckReport report;
  report.command = "numeric-pullback-check";
  report.inputs = {{"samples", samples.size()},
                   {"tol", tol},
                   {"germ_valuation", f.valuation()},
                   {"field_order", vf.trunc_order()}};
  report.add("chain-rule-agreement", max_deviation <= tol,
             {{"max_deviation", max_deviation}, {"tol", tol}});
  return report;
}

}  // namespace stretchforge
