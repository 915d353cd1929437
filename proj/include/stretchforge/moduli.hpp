#pragma once

#include <optional>
#include <string>
#include <vector>

#include <stretchforge/report.hpp>

namespace stretchforge {

/// Conjugacy class of the stretch by y -> y^p; analytic germs reduce to
/// these canonical powers.
struct StretchClass {
  int p;

  explicit StretchClass(int value) : p(value) {
    if (p < 1) throw std::invalid_argument("stretch class needs p >= 1");
  }

  bool operator==(const StretchClass&) const = default;
};

/// a > b in the semi-conjugacy order iff b is tighter, i.e. the connecting
/// power map y^{a/b} is analytic: b.p divides a.p.
inline bool is_tighter(const StretchClass& a, const StretchClass& b) {
  return a.p % b.p == 0;
}

/// The unique element below every member of the sample, when the sample
/// contains one.
inline std::optional<StretchClass> tightest(
    const std::vector<StretchClass>& sample) {
  for (const auto& candidate : sample) {
    bool below_all = true;
    for (const auto& other : sample)
      if (!is_tighter(other, candidate)) {
        below_all = false;
        break;
      }
    if (below_all) return candidate;
  }
  return std::nullopt;
}

/// Reflexivity, antisymmetry and transitivity of the tightness relation,
/// checked exhaustively over the sample.
inline CheckReport partial_order_axioms(
    const std::vector<StretchClass>& sample) {
  CheckReport report;
  report.command = "poset-axioms";
  report.inputs = {{"sample_size", sample.size()}};

  bool reflexive = true;
  for (const auto& a : sample) reflexive = reflexive && is_tighter(a, a);
  report.add("reflexivity", reflexive);

  bool antisymmetric = true;
  for (const auto& a : sample)
    for (const auto& b : sample)
      if (is_tighter(a, b) && is_tighter(b, a) && !(a == b))
        antisymmetric = false;
  report.add("antisymmetry", antisymmetric);

  bool transitive = true;
  for (const auto& a : sample)
    for (const auto& b : sample) {
      if (!is_tighter(a, b)) continue;
      for (const auto& c : sample)
        if (is_tighter(b, c) && !is_tighter(a, c)) transitive = false;
    }
  report.add("transitivity", transitive);
  return report;
}

/// Verdict on conjugacy of two stretch classes, with the reasoning chain
/// recorded as data. Without the algebraic stabilizer condition the
/// machinery cannot separate classes, so the verdict is inconclusive.
struct Certificate {
  enum class Kind { NonConjugate, Conjugate, Inconclusive };

  Kind kind;
  int p;
  int q;
  bool condition_a;
  std::vector<std::string> justification;

  nlohmann::json to_json() const {
    const char* name = kind == Kind::NonConjugate ? "NonConjugate"
                       : kind == Kind::Conjugate  ? "Conjugate"
                                                  : "Inconclusive";
    return {{"kind", name},
            {"p", p},
            {"q", q},
            {"condition_A", condition_a},
            {"justification", justification}};
  }
};

inline Certificate nonconjugacy_certificate(const StretchClass& a,
                                            const StretchClass& b,
                                            bool condition_a) {
  Certificate cert;
  cert.p = a.p;
  cert.q = b.p;
  cert.condition_a = condition_a;
  if (a.p == b.p) {
    cert.kind = Certificate::Kind::Conjugate;
    cert.justification = {
        "identical valuations: the trivial germ y conjugates the stretches"};
    return cert;
  }
  if (!condition_a) {
    cert.kind = Certificate::Kind::Inconclusive;
    cert.justification = {
        "without the algebraic stabilizer condition, equivariant "
        "homeomorphisms other than the canonical one are not controlled"};
    return cert;
  }
  cert.kind = Certificate::Kind::NonConjugate;
  cert.justification = {
      "the stabilizer of an interior point has normalizer spanned by itself "
      "and the center (condition A)",
      "hence every equivariant homeomorphism between the two stretches is "
      "differentiable exactly when the canonical comparison map is",
      "the canonical comparison map reads (x, y) -> (x, y^{" +
          std::to_string(a.p) + "/" + std::to_string(b.p) +
          "}) near the boundary, which is not a diffeomorphism germ because "
          "the valuations " +
          std::to_string(a.p) + " and " + std::to_string(b.p) + " differ"};
  return cert;
}

/// The first k classes y, y^2, ..., y^k; pairwise non-conjugate under the
/// stabilizer condition.
inline std::vector<StretchClass> enumerate_classes(int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  std::vector<StretchClass> classes;
  classes.reserve(k);
  for (int p = 1; p <= k; ++p) classes.emplace_back(p);
  return classes;
}

}  // namespace stretchforge
