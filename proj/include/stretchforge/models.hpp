#pragma once

#include <string>
#include <utility>
#include <vector>

#include <stretchforge/linalg.hpp>
#include <stretchforge/report.hpp>
#include <stretchforge/stretch.hpp>
#include <stretchforge/truncated_series.hpp>

namespace stretchforge {

/// Element [[0, b^T], [b, A]] of so(1,n): boost vector b and skew rotation
/// block A, with exact rational entries.
struct BoostRotation {
  VecQ boost;
  MatQ rotation;

  BoostRotation(VecQ b, MatQ a) : boost(std::move(b)), rotation(std::move(a)) {
    if (rotation.rows() != rotation.cols() ||
        rotation.rows() != boost.size())
      throw VarMismatch("boost/rotation dimensions disagree");
    if (rotation.transpose() != -rotation)
      throw std::invalid_argument("rotation block must be skew-symmetric");
  }

  int n() const { return static_cast<int>(boost.size()); }

  static BoostRotation boost_along(int n, int axis) {
    VecQ b = VecQ::Zero(n);
    b(axis) = 1;
    return BoostRotation(std::move(b), MatQ::Zero(n, n));
  }

  static BoostRotation rotation_in(int n, int i, int j) {
    MatQ a = MatQ::Zero(n, n);
    a(i, j) = 1;
    a(j, i) = -1;
    return BoostRotation(VecQ::Zero(n), std::move(a));
  }
};

/// Matrix commutator, decomposed back into boost/rotation parts.
inline BoostRotation bracket(const BoostRotation& x, const BoostRotation& y) {
  VecQ b = x.rotation * y.boost - y.rotation * x.boost;
  MatQ a = x.boost * y.boost.transpose() - y.boost * x.boost.transpose() +
           x.rotation * y.rotation - y.rotation * x.rotation;
  return BoostRotation(std::move(b), std::move(a));
}

inline MatQ to_matrix(const BoostRotation& x) {
  const int n = x.n();
  MatQ m = MatQ::Zero(n + 1, n + 1);
  m.block(0, 1, 1, n) = x.boost.transpose();
  m.block(1, 0, n, 1) = x.boost;
  m.block(1, 1, n, n) = x.rotation;
  return m;
}

/// Basis of so(1,n): the n boosts, then the rotations R_ij (i < j).
inline std::vector<BoostRotation> lorentz_basis(int n) {
  std::vector<BoostRotation> basis;
  for (int i = 0; i < n; ++i) basis.push_back(BoostRotation::boost_along(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      basis.push_back(BoostRotation::rotation_in(n, i, j));
  return basis;
}

/// Polynomial vector field on the ball in coordinates u_1..u_n; components
/// share the variable count and truncation order.
class PolyVectorField {
 public:
  explicit PolyVectorField(std::vector<TruncatedSeries> components)
      : components_(std::move(components)) {
    n_ = static_cast<int>(components_.size());
    for (const auto& c : components_) {
      if (c.num_vars() != n_)
        throw VarMismatch("component num_vars != field dimension");
      if (c.trunc_order() != components_.front().trunc_order())
        throw VarMismatch("components must share a truncation order");
    }
  }

  int dimension() const { return n_; }
  int trunc_order() const { return components_.front().trunc_order(); }
  const std::vector<TruncatedSeries>& components() const { return components_; }

  bool operator==(const PolyVectorField& rhs) const {
    return components_ == rhs.components_;
  }

 private:
  int n_;
  std::vector<TruncatedSeries> components_;
};

namespace detail {
/// [V, W]_k = sum_j V_j d_j W_k - W_j d_j V_k on raw component vectors.
inline std::vector<TruncatedSeries> bracket_components(
    const std::vector<TruncatedSeries>& v,
    const std::vector<TruncatedSeries>& w) {
  const int n = static_cast<int>(v.size());
  std::vector<TruncatedSeries> result;
  result.reserve(n);
  for (int k = 0; k < n; ++k) {
    TruncatedSeries sum =
        TruncatedSeries::zero(v[k].num_vars(), v[k].trunc_order() - 1);
    for (int j = 0; j < n; ++j)
      sum = sum + v[j] * derivative(w[k], j) - w[j] * derivative(v[k], j);
    result.push_back(std::move(sum));
  }
  return result;
}
}  // namespace detail

inline PolyVectorField field_bracket(const PolyVectorField& v,
                                     const PolyVectorField& w) {
  if (v.dimension() != w.dimension())
    throw VarMismatch("bracket of fields of different dimension");
  return PolyVectorField(
      detail::bracket_components(v.components(), w.components()));
}

/// Bracket of collar fields, computed in the (x, y) coordinates.
inline CollarField field_bracket(const CollarField& v, const CollarField& w) {
  if (v.dimension() != w.dimension())
    throw VarMismatch("bracket of fields of different dimension");
  auto comps = detail::bracket_components(v.components(), w.components());
  TruncatedSeries normal = std::move(comps.back());
  comps.pop_back();
  return CollarField(std::move(comps), std::move(normal));
}

/// Fundamental field of the projective action on the Klein ball:
/// V(u) = b + A u - (b.u) u.
inline PolyVectorField klein_vector_field(const BoostRotation& x, int order) {
  const int n = x.n();
  if (order < 4)
    throw std::invalid_argument("ball fields need trunc_order >= 4");
  TruncatedSeries b_dot_u = TruncatedSeries::zero(n, order);
  std::vector<TruncatedSeries> u;
  for (int i = 0; i < n; ++i) {
    u.push_back(TruncatedSeries::variable(n, order, i));
    b_dot_u = b_dot_u + x.boost(i) * u.back();
  }
  std::vector<TruncatedSeries> components;
  for (int k = 0; k < n; ++k) {
    TruncatedSeries c = TruncatedSeries::constant(n, order, x.boost(k));
    for (int j = 0; j < n; ++j)
      if (x.rotation(k, j) != 0) c = c + x.rotation(k, j) * u[j];
    components.push_back(c - b_dot_u * u[k]);
  }
  return PolyVectorField(std::move(components));
}

/// Fundamental field on the Poincare ball. The closed form
/// W(v) = (1+|v|^2)/2 b - (b.v) v + A v is verified against the pushforward
/// of the Klein field through the ball map u = 2v/(1+|v|^2) before returning.
PolyVectorField poincare_vector_field(const BoostRotation& x, int order);

inline TruncatedSeries radial_component(const PolyVectorField& v) {
  const int n = v.dimension();
  TruncatedSeries r = TruncatedSeries::zero(n, v.trunc_order());
  for (int i = 0; i < n; ++i)
    r = r + TruncatedSeries::variable(n, v.trunc_order(), i) * v.components()[i];
  return r;
}

/// Canonical residue modulo the sphere ideal (|u|^2 - 1): rewrites
/// u_n^2 -> 1 - u_1^2 - ... - u_{n-1}^2 until every u_n exponent is < 2.
/// Zero residue on an exact polynomial means divisibility by |u|^2 - 1.
inline TruncatedSeries reduce_mod_unit_sphere(const TruncatedSeries& s) {
  const int n = s.num_vars();
  const int last = n - 1;
  const int order = s.trunc_order();
  TruncatedSeries complement =
      TruncatedSeries::constant(n, order, Rational(1));
  for (int i = 0; i < last; ++i)
    complement =
        complement - TruncatedSeries::variable(n, order, i) *
                         TruncatedSeries::variable(n, order, i);

  std::vector<TruncatedSeries> complement_powers = {
      TruncatedSeries::constant(n, order, Rational(1))};
  TruncatedSeries residue = TruncatedSeries::zero(n, order);
  for (const auto& [e, c] : s.terms()) {
    const int q = e[last] / 2;
    auto reduced = e;
    reduced[last] = e[last] % 2;
    while (static_cast<int>(complement_powers.size()) <= q)
      complement_powers.push_back(complement_powers.back() * complement);
    residue = residue + TruncatedSeries::monomial(n, order, reduced, c) *
                            complement_powers[q];
  }
  return residue;
}

inline bool tangent_to_unit_sphere(const PolyVectorField& v) {
  return reduce_mod_unit_sphere(radial_component(v)).is_zero();
}

/// Boundary chart at a rational unit point p0: the sphere is parametrized by
/// sigma(x) = frame (sqrt(1-|x|^2), x) and the ball by u = (1-y) sigma(x),
/// so y = 1 - |u| is the defining function of the boundary. The frame is a
/// rational orthogonal matrix with first column p0 (a Householder
/// reflection), so everything stays exact.
struct BoundaryChart {
  VecQ p0;
  MatQ frame;
  int order;

  BoundaryChart(VecQ point, int trunc_order)
      : p0(std::move(point)), order(trunc_order) {
    if (p0.dot(p0) != Rational(1))
      throw std::invalid_argument("chart point must be a rational unit vector");
    if (order < 4) throw std::invalid_argument("chart needs order >= 4");
    const int n = static_cast<int>(p0.size());
    VecQ v = -p0;
    v(0) += 1;  // v = e1 - p0
    if (v.dot(v) == 0) {
      frame = MatQ::Identity(n, n);
    } else {
      frame = MatQ::Identity(n, n) -
              (Rational(2) / v.dot(v)) * (v * v.transpose());
    }
  }

  static BoundaryChart first_axis(int n, int order) {
    VecQ p = VecQ::Zero(n);
    p(0) = 1;
    return BoundaryChart(std::move(p), order);
  }
};

/// Immutable per-chart cache of the parametrization series, shared across
/// conversions of many fields in the same chart.
struct PreparedChart {
  int n = 0;
  int order = 0;
  MatQ frame;
  std::vector<TruncatedSeries> sphere;  // (s0, x1, ..., x_{n-1}) in (x, y)
  std::vector<TruncatedSeries> coords;  // u_k = (1-y) (frame . sphere)_k
  std::vector<std::vector<TruncatedSeries>> coord_products;  // upper triangle
  TruncatedSeries inv_one_minus_y{1, 1};
};

inline PreparedChart prepare_chart(const BoundaryChart& chart) {
  PreparedChart ctx;
  ctx.n = static_cast<int>(chart.p0.size());
  ctx.order = chart.order;
  ctx.frame = chart.frame;
  const int n = ctx.n;
  const int order = ctx.order;

  TruncatedSeries one_minus_sq =
      TruncatedSeries::constant(n, order, Rational(1));
  for (int i = 0; i + 1 < n; ++i) {
    const auto xi = TruncatedSeries::variable(n, order, i);
    one_minus_sq = one_minus_sq - xi * xi;
  }
  ctx.sphere.push_back(sqrt_series(one_minus_sq));
  for (int i = 0; i + 1 < n; ++i)
    ctx.sphere.push_back(TruncatedSeries::variable(n, order, i));

  const TruncatedSeries one_minus_y =
      TruncatedSeries::constant(n, order, Rational(1)) -
      TruncatedSeries::variable(n, order, n - 1);
  ctx.inv_one_minus_y = invert_unit(one_minus_y);

  for (int k = 0; k < n; ++k) {
    TruncatedSeries sigma_k = TruncatedSeries::zero(n, order);
    for (int j = 0; j < n; ++j)
      if (ctx.frame(k, j) != 0) sigma_k = sigma_k + ctx.frame(k, j) * ctx.sphere[j];
    ctx.coords.push_back(one_minus_y * sigma_k);
  }

  ctx.coord_products.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      ctx.coord_products[i].push_back(ctx.coords[i] * ctx.coords[j]);
  return ctx;
}

namespace detail {
/// Composite s(u(x, y)) using the cached coordinate products for the
/// quadratic case, falling back to generic composition above degree 2.
inline TruncatedSeries compose_on_chart(const TruncatedSeries& s,
                                        const PreparedChart& ctx) {
  if (s.max_degree() > 2) return compose(s, ctx.coords);
  const int n = ctx.n;
  TruncatedSeries out = TruncatedSeries::zero(n, ctx.order);
  for (const auto& [e, c] : s.terms()) {
    int first = -1, second = -1;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < e[i]; ++k) {
        if (first < 0)
          first = i;
        else
          second = i;
      }
    }
    if (first < 0) {
      out = out + TruncatedSeries::constant(n, ctx.order, c);
    } else if (second < 0) {
      out = out + c * ctx.coords[first];
    } else {
      out = out + c * ctx.coord_products[first][second - first];
    }
  }
  return out;
}
}  // namespace detail

/// Expresses a sphere-tangent polynomial field in the collar coordinates of
/// the chart. The radial tangency identity is checked symbolically first.
inline CollarField to_collar_field(const PolyVectorField& v,
                                   const PreparedChart& ctx) {
  const int n = ctx.n;
  if (v.dimension() != n) throw VarMismatch("field/chart dimension mismatch");
  if (!tangent_to_unit_sphere(v))
    throw NotSphereTangent("field is not tangent to the unit sphere");

  // Velocity in the rotated frame: qdot = frame^T V(u(x, y)).
  std::vector<TruncatedSeries> v_at;
  v_at.reserve(n);
  for (int k = 0; k < n; ++k)
    v_at.push_back(detail::compose_on_chart(v.components()[k], ctx));
  std::vector<TruncatedSeries> qdot;
  qdot.reserve(n);
  for (int j = 0; j < n; ++j) {
    TruncatedSeries sum = TruncatedSeries::zero(n, ctx.order);
    for (int k = 0; k < n; ++k)
      if (ctx.frame(k, j) != 0) sum = sum + ctx.frame(k, j) * v_at[k];
    qdot.push_back(std::move(sum));
  }

  // |q| = 1 - y gives ydot = -(sphere . qdot); solving u = (1-y) sigma(x)
  // for the x velocities divides by (1-y).
  TruncatedSeries ydot = TruncatedSeries::zero(n, ctx.order);
  for (int j = 0; j < n; ++j) ydot = ydot - ctx.sphere[j] * qdot[j];

  std::vector<TruncatedSeries> xdot;
  for (int i = 0; i + 1 < n; ++i) {
    const auto xi = TruncatedSeries::variable(n, ctx.order, i);
    xdot.push_back((qdot[i + 1] + ydot * xi) * ctx.inv_one_minus_y);
  }

  CollarField result(std::move(xdot), std::move(ydot));
  if (!result.boundary_tangent())
    throw InternalInconsistency(
        "collar conversion of a sphere-tangent field must be tangent");
  return result;
}

inline CollarField to_collar_field(const PolyVectorField& v,
                                   const BoundaryChart& chart) {
  return to_collar_field(v, prepare_chart(chart));
}

/// Klein collar coordinate y_K = 1 - |u| as a series in the Poincare collar
/// coordinate y_P = 1 - |v| under the ball map u = 2v/(1+|v|^2):
/// y_K = y_P^2 / (2 - 2 y_P + y_P^2). Valuation 2, leading coefficient 1/2.
inline StretchGerm klein_to_poincare_germ(int order) {
  if (order < 3)
    throw std::invalid_argument("klein_to_poincare_germ needs order >= 3");
  const TruncatedSeries denom =
      TruncatedSeries::poly_y({Rational(2), Rational(-2), Rational(1)}, order);
  const TruncatedSeries series =
      TruncatedSeries::monomial(1, order, {2}, Rational(1)) *
      invert_unit(denom);
  const StretchGerm germ = make_stretch_germ(series);
  if (germ.valuation() != 2)
    throw InternalInconsistency("Klein-Poincare germ must have valuation 2");
  return germ;
}

/// Interior radial maps around the center, for the inverse-composition test:
/// r_K = 2 r_P / (1 + r_P^2) and r_P = r_K / (1 + sqrt(1 - r_K^2)).
inline TruncatedSeries radial_poincare_to_klein(int order) {
  const auto t = TruncatedSeries::variable(1, order, 0);
  const TruncatedSeries denom =
      TruncatedSeries::poly_y({Rational(1), Rational(0), Rational(1)}, order);
  return Rational(2) * t * invert_unit(denom);
}

inline TruncatedSeries radial_klein_to_poincare(int order) {
  const auto t = TruncatedSeries::variable(1, order, 0);
  const TruncatedSeries one_minus_t2 =
      TruncatedSeries::poly_y({Rational(1), Rational(0), Rational(-1)}, order);
  const TruncatedSeries denom =
      TruncatedSeries::constant(1, order, Rational(1)) +
      sqrt_series(one_minus_t2);
  return t * invert_unit(denom);
}

namespace detail {
/// Solves A w = rhs over the local series ring by elimination; pivots must
/// be unit series. Operands are assumed to share num_vars and order.
inline std::vector<TruncatedSeries> solve_linear_series(
    std::vector<std::vector<TruncatedSeries>> a,
    std::vector<TruncatedSeries> rhs) {
  const int n = static_cast<int>(rhs.size());
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k].constant_term() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw NotInvertible("series matrix has no unit pivot");
    std::swap(a[k], a[pivot]);
    std::swap(rhs[k], rhs[pivot]);
    const TruncatedSeries inv = invert_unit(a[k][k]);
    for (int c = k; c < n; ++c) a[k][c] = a[k][c] * inv;
    rhs[k] = rhs[k] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == k || a[r][k].is_zero()) continue;
      const TruncatedSeries factor = a[r][k];
      for (int c = k; c < n; ++c) a[r][c] = a[r][c] - factor * a[k][c];
      rhs[r] = rhs[r] - factor * rhs[k];
    }
  }
  return rhs;
}
}  // namespace detail

inline PolyVectorField poincare_vector_field(const BoostRotation& x,
                                             int order) {
  const int n = x.n();
  if (order < 4)
    throw std::invalid_argument("ball fields need trunc_order >= 4");

  // Closed form W(v) = (1+|v|^2)/2 b - (b.v) v + A v.
  TruncatedSeries norm_sq = TruncatedSeries::zero(n, order);
  TruncatedSeries b_dot_v = TruncatedSeries::zero(n, order);
  std::vector<TruncatedSeries> v;
  for (int i = 0; i < n; ++i) {
    v.push_back(TruncatedSeries::variable(n, order, i));
    norm_sq = norm_sq + v.back() * v.back();
    b_dot_v = b_dot_v + x.boost(i) * v.back();
  }
  const TruncatedSeries half_conformal =
      Rational(1, 2) * (TruncatedSeries::constant(n, order, Rational(1)) +
                        norm_sq);
  std::vector<TruncatedSeries> closed;
  for (int k = 0; k < n; ++k) {
    TruncatedSeries c = x.boost(k) * half_conformal - b_dot_v * v[k];
    for (int j = 0; j < n; ++j)
      if (x.rotation(k, j) != 0) c = c + x.rotation(k, j) * v[j];
    closed.push_back(std::move(c));
  }
  const PolyVectorField closed_form(std::move(closed));

  // Pushforward route: solve DPhi(v) w = V_Klein(Phi(v)) with
  // Phi(v) = 2v/(1+|v|^2), and require agreement.
  const TruncatedSeries g = invert_unit(
      TruncatedSeries::constant(n, order, Rational(1)) + norm_sq);
  std::vector<TruncatedSeries> phi;
  for (int k = 0; k < n; ++k) phi.push_back(Rational(2) * v[k] * g);

  const PolyVectorField klein = klein_vector_field(x, order);
  std::vector<TruncatedSeries> rhs;
  for (int k = 0; k < n; ++k)
    rhs.push_back(truncated(compose(klein.components()[k], phi), order - 1));

  std::vector<std::vector<TruncatedSeries>> jacobian(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) jacobian[k].push_back(derivative(phi[k], j));

  const auto pushed = detail::solve_linear_series(jacobian, rhs);
  for (int k = 0; k < n; ++k)
    if (!equal_at_common_order(pushed[k], closed_form.components()[k]))
      throw InternalInconsistency(
          "pushforward and closed-form conformal fields disagree");
  return closed_form;
}

/// Verifies, coefficient by coefficient, that the stretch of the projective
/// collar field by the germ equals the conformal collar field in the matched
/// chart. One check item per component.
inline CheckReport stretch_comparison_report(const BoostRotation& x,
                                             const PreparedChart& chart,
                                             const StretchGerm& germ) {
  CheckReport report;
  report.command = "conformal-is-stretch-of-projective";
  report.inputs = {{"n", x.n()},
                   {"order", chart.order},
                   {"germ_valuation", germ.valuation()}};

  const CollarField klein_collar =
      to_collar_field(klein_vector_field(x, chart.order), chart);
  const CollarField poincare_collar =
      to_collar_field(poincare_vector_field(x, chart.order), chart);
  const CollarField stretched =
      pullback_smooth(klein_collar, germ, chart.order);

  for (int i = 0; i + 1 < x.n(); ++i)
    report.add("tangential[" + std::to_string(i + 1) + "]",
               equal_at_common_order(stretched.tangential()[i],
                                     poincare_collar.tangential()[i]));
  report.add("normal", equal_at_common_order(stretched.normal(),
                                             poincare_collar.normal()));
  return report;
}

inline CheckReport conformal_is_stretch_of_projective(
    const BoostRotation& x, const BoundaryChart& chart) {
  if (chart.order < 6)
    throw std::invalid_argument("stretch comparison needs order >= 6");
  return stretch_comparison_report(x, prepare_chart(chart),
                                   klein_to_poincare_germ(chart.order));
}

// ---------------------------------------------------------------------------
// Geodesic-symmetry differentials and their eigenvalue multiplicities.

namespace detail {
struct RationalComplex {
  Rational re{0}, im{0};
};

inline RationalComplex operator*(const RationalComplex& a,
                                 const RationalComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline RationalComplex operator-(const RationalComplex& a,
                                 const RationalComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
inline RationalComplex operator/(const RationalComplex& a,
                                 const RationalComplex& b) {
  const Rational d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

/// Multiplicities of the eigenvalues +1 and -1 of an exact involution.
inline std::pair<int, int> involution_multiplicities(const MatQ& m) {
  const int d = static_cast<int>(m.rows());
  const MatQ id = MatQ::Identity(d, d);
  if ((m - id) * (m + id) != MatQ::Zero(d, d))
    throw InternalInconsistency("matrix is not an involution");
  const int mult_plus = d - rank_of(MatQ(m - id));
  const int mult_minus = d - rank_of(MatQ(m + id));
  if (mult_plus + mult_minus != d)
    throw InternalInconsistency("involution multiplicities must fill the space");
  return {mult_plus, mult_minus};
}
}  // namespace detail

/// Differential at the ball origin of the projective map of a real
/// (n+1)x(n+1) matrix acting on [1 : u].
inline MatQ projective_differential_at_origin(const MatQ& t) {
  const int n = static_cast<int>(t.rows()) - 1;
  if (t(0, 0) == 0)
    throw std::invalid_argument("projective map must fix the affine chart");
  MatQ d(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      d(k, j) = (t(k + 1, j + 1) * t(0, 0) - t(k + 1, 0) * t(0, j + 1)) /
                (t(0, 0) * t(0, 0));
  return d;
}

/// Geodesic symmetry of complex hyperbolic m-space around its first complex
/// line, as the projective action of diag(1, 1, -1, ..., -1) on the unit
/// ball of C^m. Returns the eigenvalue multiplicities of (+1, -1) of its
/// differential at the origin, viewed as a real 2m x 2m matrix.
inline std::pair<int, int> complex_symmetry_multiplicities(int m) {
  if (m < 2) throw std::invalid_argument("complex dimension must be >= 2");
  using detail::RationalComplex;
  const int dim = m + 1;
  std::vector<std::vector<RationalComplex>> t(
      dim, std::vector<RationalComplex>(dim));
  for (int i = 0; i < dim; ++i)
    t[i][i].re = (i <= 1) ? Rational(1) : Rational(-1);

  // Complex differential at 0 of z -> (T z)_affine, then realified.
  MatQ real(2 * m, 2 * m);
  real.setZero();
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) {
      const RationalComplex d =
          (t[k + 1][j + 1] * t[0][0] - t[k + 1][0] * t[0][j + 1]) /
          (t[0][0] * t[0][0]);
      real(2 * k, 2 * j) = d.re;
      real(2 * k, 2 * j + 1) = -d.im;
      real(2 * k + 1, 2 * j) = d.im;
      real(2 * k + 1, 2 * j + 1) = d.re;
    }
  return detail::involution_multiplicities(real);
}

/// Real analogue: symmetry of real hyperbolic n-space around a geodesic,
/// diag(1, 1, -1, ..., -1) acting projectively on the Klein ball.
inline std::pair<int, int> real_symmetry_multiplicities(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  MatQ t = -MatQ::Identity(n + 1, n + 1);
  t(0, 0) = 1;
  t(1, 1) = 1;
  return detail::involution_multiplicities(
      projective_differential_at_origin(t));
}

}  // namespace stretchforge
