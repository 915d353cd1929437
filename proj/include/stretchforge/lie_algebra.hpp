#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <stretchforge/errors.hpp>
#include <stretchforge/linalg.hpp>

namespace stretchforge {

/// Commutator a b - b a, skipping zero entries; the algebra bases here are
/// very sparse.
inline MatQ matrix_bracket(const MatQ& a, const MatQ& b) {
  const Eigen::Index d = a.rows();
  MatQ r = MatQ::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index k = 0; k < d; ++k) {
      if (a(i, k) != 0) {
        const Rational& aik = a(i, k);
        for (Eigen::Index j = 0; j < d; ++j)
          if (b(k, j) != 0) r(i, j) += aik * b(k, j);
      }
      if (b(i, k) != 0) {
        const Rational& bik = b(i, k);
        for (Eigen::Index j = 0; j < d; ++j)
          if (a(k, j) != 0) r(i, j) -= bik * a(k, j);
      }
    }
  return r;
}

/// Finite-dimensional Lie algebra of rational matrices given by a linearly
/// independent basis. An exact coordinate solver over the basis is prepared
/// eagerly so the instance stays immutable and cheap to query.
class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra(std::string name, std::vector<MatQ> basis)
      : name_(std::move(name)), basis_(std::move(basis)) {
    if (basis_.empty()) throw std::invalid_argument("empty basis");
    matrix_dim_ = static_cast<int>(basis_.front().rows());
    for (const auto& b : basis_)
      if (b.rows() != matrix_dim_ || b.cols() != matrix_dim_)
        throw VarMismatch("basis matrices must share a square shape");

    const int m = dim();
    MatQ stacked(m, matrix_dim_ * matrix_dim_);
    for (int i = 0; i < m; ++i) stacked.row(i) = flatten(basis_[i]).transpose();

    MatQ echelon = stacked;
    if (reduced_row_echelon(echelon) != m)
      throw std::invalid_argument("basis is linearly dependent");
    pivot_cols_.clear();
    for (int r = 0; r < m; ++r) {
      Eigen::Index c = 0;
      while (echelon(r, c) == Rational(0)) ++c;
      pivot_cols_.push_back(c);
    }

    // Invert the pivot-column square of the stacked basis: coordinates are
    // then one small multiply plus an exact membership verification.
    MatQ square(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) square(i, j) = stacked(i, pivot_cols_[j]);
    MatQ aug(m, 2 * m);
    aug << square.transpose(), MatQ::Identity(m, m);
    if (reduced_row_echelon(aug) != m)
      throw InternalInconsistency("pivot square must be invertible");
    solve_ = aug.rightCols(m);

    triplets_.resize(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (int r = 0; r < matrix_dim_; ++r)
        for (int c = 0; c < matrix_dim_; ++c)
          if (basis_[i](r, c) != 0)
            triplets_[i].emplace_back(r, c, basis_[i](r, c));
  }

  const std::string& name() const { return name_; }
  int matrix_dim() const { return matrix_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<MatQ>& basis() const { return basis_; }

  MatQ element(const VecQ& coords) const {
    if (coords.size() != dim()) throw VarMismatch("coordinate length != dim");
    MatQ m = MatQ::Zero(matrix_dim_, matrix_dim_);
    for (int i = 0; i < dim(); ++i) {
      if (coords(i) == 0) continue;
      for (const auto& [r, c, value] : triplets_[i])
        m(r, c) += coords(i) * value;
    }
    return m;
  }

  /// Exact coordinates of m over the basis, or nullopt when m is outside
  /// the span.
  std::optional<VecQ> coordinates(const MatQ& m) const {
    if (m.rows() != matrix_dim_ || m.cols() != matrix_dim_)
      throw VarMismatch("matrix dimension mismatch");
    VecQ x = VecQ::Zero(dim());
    for (int j = 0; j < dim(); ++j) {
      const Rational& picked = m(pivot_cols_[j] / matrix_dim_,
                                 pivot_cols_[j] % matrix_dim_);
      if (picked == 0) continue;
      for (int i = 0; i < dim(); ++i)
        if (solve_(i, j) != 0) x(i) += solve_(i, j) * picked;
    }
    if (element(x) != m) return std::nullopt;
    return x;
  }

  bool same_basis(const MatrixLieAlgebra& rhs) const {
    return matrix_dim_ == rhs.matrix_dim_ && basis_ == rhs.basis_;
  }

 private:
  std::string name_;
  std::vector<MatQ> basis_;
  int matrix_dim_ = 0;
  std::vector<Eigen::Index> pivot_cols_;
  MatQ solve_;
  std::vector<std::vector<std::tuple<int, int, Rational>>> triplets_;
};

/// c[i][j] holds the coordinates of [X_i, X_j] over the basis.
struct StructureConstants {
  std::vector<std::vector<VecQ>> c;
};

/// Exact structure constants; throws NotClosed when some bracket leaves the
/// span of the basis.
inline StructureConstants structure_constants(const MatrixLieAlgebra& g) {
  const int m = g.dim();
  StructureConstants sc;
  sc.c.assign(m, std::vector<VecQ>(m, VecQ::Zero(m)));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto coords =
          g.coordinates(matrix_bracket(g.basis()[i], g.basis()[j]));
      if (!coords)
        throw NotClosed("bracket [X_" + std::to_string(i) + ", X_" +
                        std::to_string(j) + "] leaves the span");
      sc.c[i][j] = *coords;
      sc.c[j][i] = -*coords;
    }
  return sc;
}

/// Jacobi identity on the structure constants, checked exactly.
inline bool jacobi_identity_holds(const StructureConstants& sc) {
  const int m = static_cast<int>(sc.c.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        VecQ total = VecQ::Zero(m);
        for (int l = 0; l < m; ++l) {
          if (sc.c[i][j](l) != 0) total += sc.c[i][j](l) * sc.c[l][k];
          if (sc.c[j][k](l) != 0) total += sc.c[j][k](l) * sc.c[l][i];
          if (sc.c[k][i](l) != 0) total += sc.c[k][i](l) * sc.c[l][j];
        }
        if (total != VecQ::Zero(m)) return false;
      }
  return true;
}

/// Subalgebra as a canonical row space of coefficient vectors over the
/// parent basis; bracket closure inside the parent is validated.
class Subalgebra {
 public:
  Subalgebra(MatrixLieAlgebra parent, MatQ span_rows)
      : parent_(std::move(parent)) {
    if (span_rows.rows() == 0) {
      span_ = MatQ(0, parent_.dim());
      return;
    }
    if (span_rows.cols() != parent_.dim())
      throw VarMismatch("span rows must have parent dim columns");
    span_ = row_space_basis(span_rows);
    for (int i = 0; i < span_.rows(); ++i)
      for (int j = i + 1; j < span_.rows(); ++j) {
        const MatQ bracket_ij =
            matrix_bracket(parent_.element(span_.row(i).transpose()),
                           parent_.element(span_.row(j).transpose()));
        const auto coords = parent_.coordinates(bracket_ij);
        if (!coords || !in_row_space(span_, *coords))
          throw NotClosed("subalgebra span is not bracket-closed");
      }
  }

  const MatrixLieAlgebra& parent() const { return parent_; }
  const MatQ& span() const { return span_; }
  int dim() const { return static_cast<int>(span_.rows()); }

 private:
  MatrixLieAlgebra parent_;
  MatQ span_;
};

inline Subalgebra subalgebra_from_matrices(const MatrixLieAlgebra& g,
                                           const std::vector<MatQ>& members) {
  MatQ rows(members.size(), g.dim());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto coords = g.coordinates(members[i]);
    if (!coords)
      throw std::invalid_argument("subalgebra member outside the algebra");
    rows.row(static_cast<Eigen::Index>(i)) = coords->transpose();
  }
  return Subalgebra(g, rows);
}

inline Subalgebra zero_subalgebra(const MatrixLieAlgebra& g) {
  return Subalgebra(g, MatQ(0, g.dim()));
}

namespace detail {
inline void require_same_parent(const MatrixLieAlgebra& g,
                                const Subalgebra& h) {
  if (!h.parent().same_basis(g))
    throw VarMismatch("subalgebra was built over a different algebra");
}

/// ad matrix of X_i restricted in coordinates: column k = coords([X_k, H]).
inline MatQ ad_coordinate_matrix(const MatrixLieAlgebra& g, const MatQ& h) {
  MatQ m(g.dim(), g.dim());
  for (int k = 0; k < g.dim(); ++k) {
    const auto coords = g.coordinates(matrix_bracket(g.basis()[k], h));
    if (!coords) throw NotClosed("bracket leaves the algebra");
    m.col(k) = *coords;
  }
  return m;
}
}  // namespace detail

/// Normalizer n_g(h) = {X : [X, h] in h}, the exact solution space of the
/// linear conditions; automatically bracket-closed.
inline Subalgebra normalizer(const MatrixLieAlgebra& g, const Subalgebra& h) {
  detail::require_same_parent(g, h);
  if (h.dim() == 0) return Subalgebra(g, MatQ::Identity(g.dim(), g.dim()));

  // v lies in the row space of span iff w.v = 0 for the nullspace basis w.
  const MatQ annihilator = nullspace(MatQ(h.span()));
  MatQ constraints(h.dim() * annihilator.cols(), g.dim());
  Eigen::Index row = 0;
  for (int j = 0; j < h.dim(); ++j) {
    const MatQ ad = detail::ad_coordinate_matrix(
        g, h.parent().element(h.span().row(j).transpose()));
    for (Eigen::Index w = 0; w < annihilator.cols(); ++w)
      constraints.row(row++) = annihilator.col(w).transpose() * ad;
  }
  return Subalgebra(g, nullspace(constraints).transpose());
}

/// Center z(g): exact solution space of [X, X_i] = 0 for every basis
/// element.
inline Subalgebra center(const MatrixLieAlgebra& g) {
  const int m = g.dim();
  MatQ constraints(m * m, m);
  for (int i = 0; i < m; ++i)
    constraints.middleRows(i * m, m) =
        detail::ad_coordinate_matrix(g, g.basis()[i]);
  return Subalgebra(g, nullspace(constraints).transpose());
}

/// Lie-algebra-level proxy for the stabilizer condition: the normalizer of
/// h equals h + z(g) as subspaces. Exact span comparison. The overload with
/// precomputed normalizer and center avoids recomputation when a caller
/// also reports their dimensions.
inline bool condition_a_proxy(const MatrixLieAlgebra& g, const Subalgebra& h,
                              const Subalgebra& n, const Subalgebra& z) {
  detail::require_same_parent(g, h);
  MatQ sum(h.dim() + z.dim(), g.dim());
  sum << h.span(), z.span();
  return same_row_space(MatQ(n.span()), sum);
}

inline bool condition_a_proxy(const MatrixLieAlgebra& g, const Subalgebra& h) {
  return condition_a_proxy(g, h, normalizer(g, h), center(g));
}

/// Block-diagonal direct sum with the product subalgebra h1 + h2.
inline std::pair<MatrixLieAlgebra, Subalgebra> direct_product(
    const MatrixLieAlgebra& g1, const Subalgebra& h1,
    const MatrixLieAlgebra& g2, const Subalgebra& h2) {
  detail::require_same_parent(g1, h1);
  detail::require_same_parent(g2, h2);
  const int d1 = g1.matrix_dim(), d2 = g2.matrix_dim();
  std::vector<MatQ> basis;
  for (const auto& x : g1.basis()) {
    MatQ m = MatQ::Zero(d1 + d2, d1 + d2);
    m.topLeftCorner(d1, d1) = x;
    basis.push_back(std::move(m));
  }
  for (const auto& y : g2.basis()) {
    MatQ m = MatQ::Zero(d1 + d2, d1 + d2);
    m.bottomRightCorner(d2, d2) = y;
    basis.push_back(std::move(m));
  }
  MatrixLieAlgebra product(g1.name() + " x " + g2.name(), std::move(basis));

  MatQ span = MatQ::Zero(h1.dim() + h2.dim(), g1.dim() + g2.dim());
  span.topLeftCorner(h1.dim(), g1.dim()) = h1.span();
  span.bottomRightCorner(h2.dim(), g2.dim()) = h2.span();
  Subalgebra h(product, span);
  return {std::move(product), std::move(h)};
}

// ---------------------------------------------------------------------------
// Built-in algebras.

namespace detail {
inline MatQ unit_matrix(int d, int i, int j) {
  MatQ m = MatQ::Zero(d, d);
  m(i, j) = 1;
  return m;
}

/// Realification of a complex matrix P + iQ as 2x2 blocks [[a,-b],[b,a]].
inline MatQ realify(const MatQ& re, const MatQ& im) {
  const int d = static_cast<int>(re.rows());
  MatQ m(2 * d, 2 * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      m(2 * i, 2 * j) = re(i, j);
      m(2 * i, 2 * j + 1) = -im(i, j);
      m(2 * i + 1, 2 * j) = im(i, j);
      m(2 * i + 1, 2 * j + 1) = re(i, j);
    }
  return m;
}
}  // namespace detail

/// so(n): skew-symmetric n x n matrices, basis E_ij - E_ji for i < j.
inline std::vector<MatQ> so_basis(int n) {
  std::vector<MatQ> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      basis.push_back(detail::unit_matrix(n, i, j) -
                      detail::unit_matrix(n, j, i));
  return basis;
}

/// so(1,n) for the form diag(-1, 1, ..., 1): boosts E_{0i}+E_{i0} then the
/// spatial rotations.
inline std::vector<MatQ> lorentz_matrix_basis(int n) {
  std::vector<MatQ> basis;
  for (int i = 1; i <= n; ++i)
    basis.push_back(detail::unit_matrix(n + 1, 0, i) +
                    detail::unit_matrix(n + 1, i, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      basis.push_back(detail::unit_matrix(n + 1, i, j) -
                      detail::unit_matrix(n + 1, j, i));
  return basis;
}

/// se(n) in the affine (n+1)x(n+1) model: rotations plus translations
/// E_{i,n}.
inline std::vector<MatQ> euclidean_matrix_basis(int n) {
  std::vector<MatQ> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      basis.push_back(detail::unit_matrix(n + 1, i, j) -
                      detail::unit_matrix(n + 1, j, i));
  for (int i = 0; i < n; ++i)
    basis.push_back(detail::unit_matrix(n + 1, i, n));
  return basis;
}

/// Abelian R^n realized as the translation block of the affine model.
inline std::vector<MatQ> abelian_matrix_basis(int n) {
  std::vector<MatQ> basis;
  for (int i = 0; i < n; ++i)
    basis.push_back(detail::unit_matrix(n + 1, i, n));
  return basis;
}

/// su(1,m) for the form diag(-1, 1, ..., 1), realified as real
/// 2(m+1) x 2(m+1) matrices. Real dimension (m+1)^2 - 1.
inline std::vector<MatQ> su1m_matrix_basis(int m) {
  const int d = m + 1;
  const MatQ zero = MatQ::Zero(d, d);
  std::vector<MatQ> basis;
  // Boosts: beta = e_j and beta = i e_j (with gamma = conj(beta)).
  for (int j = 1; j <= m; ++j) {
    basis.push_back(detail::realify(
        detail::unit_matrix(d, 0, j) + detail::unit_matrix(d, j, 0), zero));
    basis.push_back(detail::realify(
        zero, detail::unit_matrix(d, 0, j) - detail::unit_matrix(d, j, 0)));
  }
  // Anti-Hermitian rotation block.
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      basis.push_back(detail::realify(
          detail::unit_matrix(d, i, j) - detail::unit_matrix(d, j, i), zero));
      basis.push_back(detail::realify(
          zero, detail::unit_matrix(d, i, j) + detail::unit_matrix(d, j, i)));
    }
  // Trace-free imaginary diagonals i(E_jj - E_00).
  for (int j = 1; j <= m; ++j)
    basis.push_back(detail::realify(
        zero, detail::unit_matrix(d, j, j) - detail::unit_matrix(d, 0, 0)));
  return basis;
}

/// Builds a named algebra: "so(1,n)", "so(n)", "se(n)", "abelian(n)",
/// "su(1,m)". Structure constants (closure) are validated here.
inline MatrixLieAlgebra builtin_algebra(const std::string& spec) {
  const auto open = spec.find('(');
  const auto close = spec.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("unknown algebra spec: " + spec);
  const std::string base = spec.substr(0, open);
  const std::string args = spec.substr(open + 1, close - open - 1);

  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < args.size()) {
    const auto comma = args.find(',', pos);
    const std::string token =
        args.substr(pos, comma == std::string::npos ? args.npos : comma - pos);
    values.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }

  std::vector<MatQ> basis;
  if (base == "so" && values.size() == 2 && values[0] == 1 && values[1] >= 2) {
    basis = lorentz_matrix_basis(values[1]);
  } else if (base == "so" && values.size() == 1 && values[0] >= 2) {
    basis = so_basis(values[0]);
  } else if (base == "se" && values.size() == 1 && values[0] >= 2) {
    basis = euclidean_matrix_basis(values[0]);
  } else if (base == "abelian" && values.size() == 1 && values[0] >= 1) {
    basis = abelian_matrix_basis(values[0]);
  } else if (base == "su" && values.size() == 2 && values[0] == 1 &&
             values[1] >= 1) {
    basis = su1m_matrix_basis(values[1]);
  } else {
    throw std::invalid_argument("unknown algebra spec: " + spec);
  }
  MatrixLieAlgebra g(spec, std::move(basis));
  structure_constants(g);  // throws NotClosed on a bad construction
  return g;
}

/// Resolves a subalgebra spec against a built-in parent: "0" for the zero
/// subalgebra, or "so(n)" inside "so(1,n)" and "se(n)".
inline Subalgebra builtin_subalgebra(const MatrixLieAlgebra& g,
                                     const std::string& spec) {
  if (spec == "0" || spec == "zero" || spec == "trivial")
    return zero_subalgebra(g);

  const std::string parent = g.name();
  const auto rot = [&](int offset, int count, int d) {
    std::vector<MatQ> members;
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j)
        members.push_back(
            detail::unit_matrix(d, offset + i, offset + j) -
            detail::unit_matrix(d, offset + j, offset + i));
    return members;
  };

  if (spec.rfind("so(", 0) == 0) {
    const int k = std::stoi(spec.substr(3, spec.size() - 4));
    if (parent == "so(1," + std::to_string(k) + ")")
      return subalgebra_from_matrices(g, rot(1, k, k + 1));
    if (parent == "se(" + std::to_string(k) + ")")
      return subalgebra_from_matrices(g, rot(0, k, k + 1));
  }
  throw std::invalid_argument("unsupported subalgebra spec '" + spec +
                              "' for parent '" + parent + "'");
}

}  // namespace stretchforge
