#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/algebra.hpp"

namespace superlie {

struct FormEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  Scalar value;
};

/// Gram matrix of a bilinear form on a graded basis: gram(i, j) = B(e_i, e_j).
class BilinearForm {
public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw InputError("Gram matrix must be square");
  }

  /// Builds the Gram matrix from listed entries. A listed (i, j) whose mirror
  /// (j, i) is not listed also fills the mirror with the supersymmetric sign.
  static BilinearForm from_entries(const GradedBasis& basis, const std::vector<FormEntry>& entries) {
    const std::size_t d = basis.dim();
    Matrix g(d, d);
    std::vector<std::vector<bool>> given(d, std::vector<bool>(d, false));
    for (const auto& e : entries) {
      if (e.left >= d || e.right >= d) throw InputError("form entry refers to a basis index out of range");
      if (given[e.left][e.right] && g(e.left, e.right) != e.value)
        throw InputError("conflicting form entries for (" + basis.label(e.left) + ", " + basis.label(e.right) + ")");
      g(e.left, e.right) = e.value;
      given[e.left][e.right] = true;
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (given[i][j] && !given[j][i]) g(j, i) = koszul(basis.parity(i), basis.parity(j)) * g(i, j);
    return BilinearForm(std::move(g));
  }

  static BilinearForm zero(std::size_t d) { return BilinearForm(Matrix(d, d)); }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }

  Scalar value(std::span<const Scalar> x, std::span<const Scalar> y) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (y[j] != 0 && gram_(i, j) != 0) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
  }

  /// Nonzero entries with i <= j.
  std::vector<FormEntry> entries() const {
    std::vector<FormEntry> out;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i; j < dim(); ++j)
        if (gram_(i, j) != 0) out.push_back({i, j, gram_(i, j)});
    return out;
  }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
  Matrix gram_;
};

class QuadraticLieSuperalgebra {
public:
  QuadraticLieSuperalgebra() = default;
  QuadraticLieSuperalgebra(LieSuperalgebra algebra, BilinearForm form)
      : algebra_(std::move(algebra)), form_(std::move(form)) {
    if (form_.dim() != algebra_.dim()) throw InputError("form and algebra dimensions differ");
  }

  const LieSuperalgebra& algebra() const { return algebra_; }
  const BilinearForm& form() const { return form_; }
  const GradedBasis& basis() const { return algebra_.basis(); }
  const std::string& name() const { return algebra_.name(); }
  std::size_t dim() const { return algebra_.dim(); }

  /// B([e_i, e_j], e_k)
  Scalar invariant_value(std::size_t i, std::size_t j, std::size_t k) const {
    Scalar s = 0;
    for (const auto& [t, c] : algebra_.structure(i, j)) s += c * form_(t, k);
    return s;
  }

  bool same_structure(const QuadraticLieSuperalgebra& other) const {
    return algebra_.same_table(other.algebra_) && form_ == other.form_;
  }

private:
  LieSuperalgebra algebra_;
  BilinearForm form_;
};

/// A Lie superalgebra that may or may not carry an invariant form.
struct AlgebraWithForm {
  LieSuperalgebra algebra;
  std::optional<BilinearForm> form;

  QuadraticLieSuperalgebra quadratic() const {
    if (!form) throw InputError(algebra.name() + " carries no invariant form");
    return QuadraticLieSuperalgebra(algebra, *form);
  }
};

inline ValidationReport validate_quadratic(const QuadraticLieSuperalgebra& q) {
  ValidationReport report;
  const auto& g = q.algebra();
  const auto& b = q.form();
  const std::size_t d = q.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      if (b(i, j) != koszul(g.parity(i), g.parity(j)) * b(j, i))
        report.add("supersymmetry", {i, j}, "B(x,y) != (-1)^{xy} B(y,x)");
      if (g.parity(i) != g.parity(j) && (b(i, j) != 0 || b(j, i) != 0))
        report.add("evenness", {i, j}, "B pairs an even and an odd element");
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        // B([X,Y],Z) = B(X,[Y,Z])
        Scalar rhs = 0;
        for (const auto& [t, c] : g.structure(j, k)) rhs += c * b(i, t);
        if (q.invariant_value(i, j, k) != rhs)
          report.add("invariance", {i, j, k},
                     "B([X,Y],Z) = " + to_string(q.invariant_value(i, j, k)) + " but B(X,[Y,Z]) = " + to_string(rhs));
      }
  const std::size_t r = rank(b.gram());
  if (r < d) report.add("non-degeneracy", {}, "Gram matrix has rank defect " + std::to_string(d - r));
  return report;
}

inline ValidationReport validate_full(const QuadraticLieSuperalgebra& q) {
  ValidationReport r = validate_lie_superalgebra(q.algebra());
  r.append(validate_quadratic(q));
  return r;
}

/// Darboux basis of the odd part and dual frame of the even part.
///
/// odd_change_of_basis: 2n x 2n, columns X^1..X^n, Y^1..Y^n expressed in the
/// odd basis elements, with B(X^i, Y^j) = delta_ij and the other pairings zero.
/// even_dual_frame: m x m, column i is Y0^i in the even basis elements, with
/// B(Y0^i, e_j) = delta_ij.
struct DarbouxFrame {
  Matrix odd_change_of_basis;
  Matrix even_dual_frame;

  std::size_t half_odd_dim() const { return odd_change_of_basis.cols() / 2; }

  /// K(s, t) = sum_k X^k_s Y^k_t - Y^k_s X^k_t over odd coordinates s, t.
  Matrix odd_pairing() const {
    const std::size_t n = half_odd_dim();
    const Matrix& p = odd_change_of_basis;
    Matrix k(p.rows(), p.rows());
    for (std::size_t s = 0; s < p.rows(); ++s)
      for (std::size_t t = 0; t < p.rows(); ++t)
        for (std::size_t a = 0; a < n; ++a) k(s, t) += p(s, a) * p(t, n + a) - p(s, n + a) * p(t, a);
    return k;
  }
};

inline Matrix standard_symplectic(std::size_t n) {
  Matrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

/// Even/odd diagonal blocks of the Gram matrix.
inline std::pair<Matrix, Matrix> gram_blocks(const QuadraticLieSuperalgebra& q) {
  const std::size_t m = q.basis().even_dim(), o = q.basis().odd_dim();
  Matrix even(m, m), odd(o, o);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) even(i, j) = q.form()(i, j);
  for (std::size_t i = 0; i < o; ++i)
    for (std::size_t j = 0; j < o; ++j) odd(i, j) = q.form()(m + i, m + j);
  return {even, odd};
}

/// Symplectic reduction of a skew Gram matrix: repeatedly pairs the
/// lowest-index (i, j) with B(v_i, v_j) != 0 and projects the remaining vectors
/// off span{v_i, v_j}. Columns of the result: X^1..X^n, Y^1..Y^n.
inline Matrix symplectic_basis(const Matrix& skew_gram) {
  const std::size_t d = skew_gram.rows();
  if (d % 2 != 0) throw PreconditionError("odd part of a quadratic form must have even dimension");
  auto pair = [&](const Vector& u, const Vector& v) {
    Scalar s = 0;
    for (std::size_t a = 0; a < d; ++a) {
      if (u[a] == 0) continue;
      for (std::size_t b = 0; b < d; ++b)
        if (v[b] != 0) s += u[a] * skew_gram(a, b) * v[b];
    }
    return s;
  };
  std::vector<Vector> pool;
  for (std::size_t i = 0; i < d; ++i) pool.push_back(unit_vector(d, i));
  std::vector<Vector> xs, ys;
  while (!pool.empty()) {
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t i = 0; i < pool.size() && !found; ++i)
      for (std::size_t j = i + 1; j < pool.size() && !found; ++j)
        if (pair(pool[i], pool[j]) != 0) found = {i, j};
    if (!found) throw PreconditionError("restriction of B to the odd part is degenerate");
    auto [i, j] = *found;
    Vector x = pool[i];
    Vector y = scaled(pool[j], 1 / pair(pool[i], pool[j]));
    std::vector<Vector> rest;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (k == i || k == j) continue;
      Vector v = pool[k];
      // v - B(v,y) x + B(v,x) y is orthogonal to both x and y.
      const Scalar by = pair(v, y), bx = pair(v, x);
      axpy(v, -by, x);
      axpy(v, bx, y);
      if (!is_zero(v)) rest.push_back(std::move(v));
    }
    pool = std::move(rest);
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }
  const std::size_t n = xs.size();
  Matrix p(d, 2 * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < d; ++r) {
      p(r, a) = xs[a][r];
      p(r, n + a) = ys[a][r];
    }
  return p;
}

inline DarbouxFrame darboux_frame(const QuadraticLieSuperalgebra& q) {
  auto [even, odd] = gram_blocks(q);
  DarbouxFrame frame;
  frame.odd_change_of_basis = symplectic_basis(odd);
  if (even.rows() == 0) {
    frame.even_dual_frame = Matrix(0, 0);
  } else {
    auto inv = inverse(even);
    if (!inv) throw PreconditionError("restriction of B to the even part is degenerate");
    frame.even_dual_frame = inv->transpose();
  }
  return frame;
}

/// {x : B(x, v) = 0 for all v in ideal}. Requires a graded ideal; for a
/// non-degenerate ideal also checks [I, I^perp] = 0 and I ∩ I^perp = 0.
inline Subspace orthogonal_complement(const QuadraticLieSuperalgebra& q, const Subspace& ideal) {
  const auto& g = q.algebra();
  if (ideal.ambient() != q.dim()) throw InputError("subspace lives in the wrong ambient space");
  if (!is_graded(g, ideal)) throw InputError("subspace is not graded");
  if (!is_ideal(g, ideal)) throw InputError("subspace is not an ideal");
  const auto rows = ideal.basis();
  Matrix m(rows.size(), q.dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    // B(x, v) = sum_i x_i (G v)_i
    Vector gv = q.form().gram().apply(rows[r]);
    for (std::size_t i = 0; i < q.dim(); ++i) m(r, i) = gv[i];
  }
  Subspace perp(q.dim(), nullspace(m));

  Matrix restricted(rows.size(), rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) restricted(a, b) = q.form().value(rows[a], rows[b]);
  if (rank(restricted) == rows.size()) {
    if (!bracket_span(g, ideal, perp).is_zero())
      throw std::logic_error("non-degenerate ideal does not commute with its orthogonal");
    if (!ideal.intersect(perp).is_zero())
      throw std::logic_error("non-degenerate ideal meets its orthogonal");
  }
  return perp;
}

/// Looks for a homogeneous central line C z with B(z, z) != 0, which splits off
/// as an orthogonal direct summand. Odd z always has B(z, z) = 0, so only the
/// even center is searched. Finding none does not prove indecomposability.
inline std::optional<Subspace> find_nondegenerate_central_line(const QuadraticLieSuperalgebra& q) {
  const auto c = center(q.algebra()).basis();
  std::vector<Vector> even;
  for (const auto& v : c) {
    bool pure_even = true;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0 && q.algebra().parity(i) == Parity::Odd) pure_even = false;
    if (pure_even) even.push_back(v);
  }
  for (const auto& v : even)
    if (q.form().value(v, v) != 0) return Subspace(q.dim(), {v});
  for (std::size_t a = 0; a < even.size(); ++a)
    for (std::size_t b = a + 1; b < even.size(); ++b)
      if (q.form().value(even[a], even[b]) != 0) {
        Vector z = even[a];
        axpy(z, 1, even[b]);
        return Subspace(q.dim(), {z});
      }
  return std::nullopt;
}

}  // namespace superlie
