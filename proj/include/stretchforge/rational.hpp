#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace stretchforge {

/// Exact arbitrary-precision rational, the coefficient field for everything
/// symbolic. Floating point only ever appears in the numeric cross-checks.
/// Expression templates are off so values behave like plain scalars in
/// containers and Eigen expressions.
using Rational = boost::multiprecision::number<
    boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<
    boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "a", "-a" or "a/b" with decimal integer components.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    // The two-argument constructor canonicalizes.
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

inline std::optional<Integer> exact_integer_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  const Integer root = sqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

/// Exact square root of a positive rational whose numerator and denominator
/// are perfect squares; nullopt otherwise (including zero and negatives).
inline std::optional<Rational> exact_rational_sqrt(const Rational& r) {
  if (r <= 0) return std::nullopt;
  const auto num = exact_integer_sqrt(numerator(r));
  const auto den = exact_integer_sqrt(denominator(r));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace stretchforge
