#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <stretchforge/errors.hpp>
#include <stretchforge/rational.hpp>

namespace stretchforge {

/// Multivariate power series over the rationals, truncated at a total degree.
///
/// Terms live in a sparse exponent map; no zero coefficient and no term of
/// total degree >= trunc_order is ever stored. trunc_order is a storage
/// bound carried as data: each operation documents how it propagates.
/// The last variable plays the role of the boundary-defining coordinate y.
/// Values are immutable after construction; all operations are pure.
class TruncatedSeries {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  TruncatedSeries(int num_vars, int trunc_order)
      : num_vars_(num_vars), trunc_order_(std::max(trunc_order, 1)) {
    if (num_vars < 1) throw VarMismatch("num_vars must be positive");
  }

  /// Normalizing constructor: drops zero coefficients and terms at or above
  /// the truncation order.
  TruncatedSeries(int num_vars, int trunc_order, TermMap terms)
      : TruncatedSeries(num_vars, trunc_order) {
    for (auto& [exps, coeff] : terms) {
      if (static_cast<int>(exps.size()) != num_vars_)
        throw VarMismatch("exponent tuple length != num_vars");
      if (coeff == 0 || degree_of(exps) >= trunc_order_) continue;
      for (int e : exps)
        if (e < 0) throw std::invalid_argument("negative exponent");
      terms_.emplace(exps, std::move(coeff));
    }
  }

  static TruncatedSeries zero(int num_vars, int trunc_order) {
    return TruncatedSeries(num_vars, trunc_order);
  }

  static TruncatedSeries constant(int num_vars, int trunc_order,
                                  const Rational& c) {
    TermMap m;
    m.emplace(Exponents(num_vars, 0), c);
    return TruncatedSeries(num_vars, trunc_order, std::move(m));
  }

  static TruncatedSeries variable(int num_vars, int trunc_order,
                                  int var_index) {
    if (var_index < 0 || var_index >= num_vars)
      throw VarMismatch("variable index out of range");
    Exponents e(num_vars, 0);
    e[var_index] = 1;
    TermMap m;
    m.emplace(std::move(e), Rational(1));
    return TruncatedSeries(num_vars, trunc_order, std::move(m));
  }

  static TruncatedSeries monomial(int num_vars, int trunc_order, Exponents e,
                                  const Rational& c) {
    TermMap m;
    m.emplace(std::move(e), c);
    return TruncatedSeries(num_vars, trunc_order, std::move(m));
  }

  /// Univariate polynomial sum_k coeffs[k] * y^k.
  static TruncatedSeries poly_y(const std::vector<Rational>& coeffs,
                                int trunc_order) {
    TermMap m;
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
      m.emplace(Exponents{k}, coeffs[k]);
    return TruncatedSeries(1, trunc_order, std::move(m));
  }

  int num_vars() const { return num_vars_; }
  int trunc_order() const { return trunc_order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coeff(Exponents(num_vars_, 0)); }

  /// Largest stored total degree; -1 for the zero series.
  int max_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }

  static int degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
  }

  bool operator==(const TruncatedSeries& rhs) const {
    return num_vars_ == rhs.num_vars_ && trunc_order_ == rhs.trunc_order_ &&
           terms_ == rhs.terms_;
  }

 private:
  int num_vars_;
  int trunc_order_;
  TermMap terms_;
};

namespace detail {
inline void require_same_vars(const TruncatedSeries& a,
                              const TruncatedSeries& b) {
  if (a.num_vars() != b.num_vars())
    throw VarMismatch("operands have different num_vars");
}

inline void accumulate(TruncatedSeries::TermMap& m,
                       TruncatedSeries::Exponents e, const Rational& c) {
  auto [it, inserted] = m.try_emplace(std::move(e), c);
  if (!inserted) it->second += c;
}

inline TruncatedSeries convolve(const TruncatedSeries& a,
                                const TruncatedSeries& b, int order) {
  TruncatedSeries::TermMap m;
  TruncatedSeries::Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = TruncatedSeries::degree_of(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + TruncatedSeries::degree_of(eb) >= order) continue;
      for (int i = 0; i < a.num_vars(); ++i) e[i] = ea[i] + eb[i];
      accumulate(m, e, ca * cb);
    }
  }
  return TruncatedSeries(a.num_vars(), order, std::move(m));
}
}  // namespace detail

/// Coefficient-wise sum; result order is the minimum of the operands'.
inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  detail::require_same_vars(a, b);
  TruncatedSeries::TermMap m = a.terms();
  for (const auto& [e, c] : b.terms()) detail::accumulate(m, e, c);
  return TruncatedSeries(a.num_vars(),
                         std::min(a.trunc_order(), b.trunc_order()),
                         std::move(m));
}

inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
  TruncatedSeries::TermMap m;
  if (c != 0)
    for (const auto& [e, v] : s.terms()) m.emplace(e, c * v);
  return TruncatedSeries(s.num_vars(), s.trunc_order(), std::move(m));
}

inline TruncatedSeries operator-(const TruncatedSeries& s) {
  return Rational(-1) * s;
}

inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return a + (-b);
}

/// Convolution product; terms of total degree >= min order are discarded.
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  detail::require_same_vars(a, b);
  return detail::convolve(a, b, std::min(a.trunc_order(), b.trunc_order()));
}

/// Product of the stored polynomials with nothing discarded: the result
/// order is raised to hold every term. Used where a transform must act
/// exactly on stored data (see the pullbacks).
inline TruncatedSeries mul_full(const TruncatedSeries& a,
                                const TruncatedSeries& b) {
  detail::require_same_vars(a, b);
  const int degree_bound =
      (a.is_zero() || b.is_zero()) ? 0 : a.max_degree() + b.max_degree();
  const int order = std::max(std::min(a.trunc_order(), b.trunc_order()),
                             degree_bound + 1);
  return detail::convolve(a, b, order);
}

/// Drops terms of total degree >= new_order (never raises the bound).
inline TruncatedSeries truncated(const TruncatedSeries& s, int new_order) {
  return TruncatedSeries(s.num_vars(),
                         std::min(s.trunc_order(), new_order), s.terms());
}

/// Re-tags the storage bound without touching terms when raising.
inline TruncatedSeries with_trunc_order(const TruncatedSeries& s, int order) {
  return TruncatedSeries(s.num_vars(), order, s.terms());
}

inline bool equal_at_common_order(const TruncatedSeries& a,
                                  const TruncatedSeries& b) {
  const int order = std::min(a.trunc_order(), b.trunc_order());
  return truncated(a, order).terms() == truncated(b, order).terms();
}

/// Minimum exponent of the last variable over all terms; nullopt (infinity)
/// for the zero series.
inline std::optional<int> y_valuation(const TruncatedSeries& s) {
  std::optional<int> v;
  const int y = s.num_vars() - 1;
  for (const auto& [e, c] : s.terms())
    if (!v || e[y] < *v) v = e[y];
  return v;
}

/// Shifts every y-exponent up by one; the storage bound grows by one so no
/// term is lost.
inline TruncatedSeries mul_by_y(const TruncatedSeries& s) {
  TruncatedSeries::TermMap m;
  const int y = s.num_vars() - 1;
  for (const auto& [e, c] : s.terms()) {
    auto shifted = e;
    ++shifted[y];
    m.emplace(std::move(shifted), c);
  }
  return TruncatedSeries(s.num_vars(), s.trunc_order() + 1, std::move(m));
}

/// Hadamard factorization for stored data: shifts y-exponents down by one.
/// Result order drops by one.
inline TruncatedSeries divide_by_y(const TruncatedSeries& s) {
  TruncatedSeries::TermMap m;
  const int y = s.num_vars() - 1;
  for (const auto& [e, c] : s.terms()) {
    if (e[y] < 1) throw NotDivisible("term with y-exponent 0");
    auto shifted = e;
    --shifted[y];
    m.emplace(std::move(shifted), c);
  }
  return TruncatedSeries(s.num_vars(), std::max(s.trunc_order() - 1, 1),
                         std::move(m));
}

/// Formal partial derivative; result order drops by one.
inline TruncatedSeries derivative(const TruncatedSeries& s, int var_index) {
  if (var_index < 0 || var_index >= s.num_vars())
    throw VarMismatch("variable index out of range");
  TruncatedSeries::TermMap m;
  for (const auto& [e, c] : s.terms()) {
    if (e[var_index] == 0) continue;
    auto lowered = e;
    --lowered[var_index];
    m.emplace(std::move(lowered), Rational(e[var_index]) * c);
  }
  return TruncatedSeries(s.num_vars(), std::max(s.trunc_order() - 1, 1),
                         std::move(m));
}

/// Terms of exact total degree d, as a series at the same order.
inline TruncatedSeries homogeneous_part(const TruncatedSeries& s, int d) {
  TruncatedSeries::TermMap m;
  for (const auto& [e, c] : s.terms())
    if (TruncatedSeries::degree_of(e) == d) m.emplace(e, c);
  return TruncatedSeries(s.num_vars(), s.trunc_order(), std::move(m));
}

/// Multiplicative inverse of a unit series (non-zero constant term),
/// computed degree by degree; result carries the same order.
inline TruncatedSeries invert_unit(const TruncatedSeries& s) {
  const Rational c0 = s.constant_term();
  if (c0 == 0) throw NotInvertible("constant term is zero");
  const int order = s.trunc_order();
  TruncatedSeries inv = TruncatedSeries::constant(s.num_vars(), order, 1 / c0);
  const TruncatedSeries one =
      TruncatedSeries::constant(s.num_vars(), order, Rational(1));
  for (int d = 1; d < order; ++d) {
    const TruncatedSeries part = homogeneous_part(one - s * inv, d);
    if (part.is_zero()) continue;
    inv = inv + (1 / c0) * part;
  }
  return inv;
}

/// Square root with positive constant term, computed degree by degree.
/// Requires the constant term to be a positive rational square.
inline TruncatedSeries sqrt_series(const TruncatedSeries& s) {
  const auto root0 = exact_rational_sqrt(s.constant_term());
  if (!root0)
    throw NoSquareRoot("constant term is not a positive rational square");
  const int order = s.trunc_order();
  TruncatedSeries root = TruncatedSeries::constant(s.num_vars(), order, *root0);
  const Rational half_inv = 1 / (2 * *root0);
  for (int d = 1; d < order; ++d) {
    const TruncatedSeries part = homogeneous_part(s - root * root, d);
    if (part.is_zero()) continue;
    root = root + half_inv * part;
  }
  return root;
}

/// Replaces the last variable by the univariate series g (valuation >= 1),
/// computing at the given storage order. Coefficients of total degree
/// < min(order(s), order(g), order) agree with the formal composite.
inline TruncatedSeries substitute_y_at(const TruncatedSeries& s,
                                       const TruncatedSeries& g, int order) {
  if (g.num_vars() != 1)
    throw VarMismatch("substituted series must be univariate");
  if (g.constant_term() != 0)
    throw InvalidSubstitution("substituted series has a constant term");

  const int n = s.num_vars();
  const int y = n - 1;

  // Lift g to n variables acting on the last slot.
  TruncatedSeries::TermMap lifted;
  for (const auto& [e, c] : g.terms()) {
    TruncatedSeries::Exponents le(n, 0);
    le[y] = e[0];
    lifted.emplace(std::move(le), c);
  }
  const TruncatedSeries g_lifted(n, order, std::move(lifted));

  // Group s by y-exponent and run Horner in g.
  int max_b = 0;
  for (const auto& [e, c] : s.terms()) max_b = std::max(max_b, e[y]);
  std::vector<TruncatedSeries::TermMap> by_y(max_b + 1);
  for (const auto& [e, c] : s.terms()) {
    auto flat = e;
    flat[y] = 0;
    by_y[e[y]].emplace(std::move(flat), c);
  }
  TruncatedSeries result(n, order, std::move(by_y[max_b]));
  for (int b = max_b - 1; b >= 0; --b)
    result = result * g_lifted + TruncatedSeries(n, order, std::move(by_y[b]));
  return result;
}

/// Replaces the last variable by the univariate series g (valuation >= 1).
/// The result is the exact polynomial composition of the stored truncations:
/// its order is raised to hold every composed term, and coefficients of
/// total degree < min(order(s), order(g)) agree with the formal composite.
inline TruncatedSeries substitute_y(const TruncatedSeries& s,
                                    const TruncatedSeries& g) {
  const int y = s.num_vars() - 1;
  const int g_degree = std::max(g.max_degree(), 0);
  int composed_bound = 0;
  for (const auto& [e, c] : s.terms()) {
    const int xa = TruncatedSeries::degree_of(e) - e[y];
    composed_bound = std::max(composed_bound, xa + e[y] * g_degree);
  }
  const int order = std::max(std::min(s.trunc_order(), g.trunc_order()),
                             composed_bound + 1);
  return substitute_y_at(s, g, order);
}

/// Evaluates s as a polynomial, replacing variable i by args[i]. Treats the
/// stored terms as exact; the result carries the args' common order.
inline TruncatedSeries compose(const TruncatedSeries& s,
                               const std::vector<TruncatedSeries>& args) {
  if (static_cast<int>(args.size()) != s.num_vars())
    throw VarMismatch("argument count != num_vars");
  int order = args.front().trunc_order();
  const int arg_vars = args.front().num_vars();
  for (const auto& a : args) {
    detail::require_same_vars(args.front(), a);
    order = std::min(order, a.trunc_order());
  }

  // Memoized powers of each argument.
  std::vector<std::vector<TruncatedSeries>> powers(args.size());
  for (std::size_t i = 0; i < args.size(); ++i)
    powers[i].push_back(
        TruncatedSeries::constant(arg_vars, order, Rational(1)));

  TruncatedSeries result = TruncatedSeries::zero(arg_vars, order);
  for (const auto& [e, c] : s.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(arg_vars, order, c);
    for (std::size_t i = 0; i < args.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i])
        powers[i].push_back(truncated(powers[i].back() * args[i], order));
      term = term * powers[i][e[i]];
    }
    result = result + term;
  }
  return result;
}

inline Rational eval(const TruncatedSeries& s,
                     const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != s.num_vars())
    throw VarMismatch("point length != num_vars");
  Rational total(0);
  for (const auto& [e, c] : s.terms()) {
    Rational term = c;
    for (int i = 0; i < s.num_vars(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

inline double eval(const TruncatedSeries& s, const std::vector<double>& point) {
  if (static_cast<int>(point.size()) != s.num_vars())
    throw VarMismatch("point length != num_vars");
  double total = 0;
  for (const auto& [e, c] : s.terms()) {
    double term = to_double(c);
    for (int i = 0; i < s.num_vars(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

inline std::vector<std::string> collar_var_names(int n) {
  std::vector<std::string> names;
  if (n == 1) return {"y"};
  for (int i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("y");
  return names;
}

inline std::string to_string(const TruncatedSeries& s,
                             const std::vector<std::string>& names) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    std::string mono;
    for (int i = 0; i < s.num_vars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = c.str();
    if (!out.empty()) {
      if (coeff.front() == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

inline std::string to_string(const TruncatedSeries& s) {
  return to_string(s, collar_var_names(s.num_vars()));
}

}  // namespace stretchforge
