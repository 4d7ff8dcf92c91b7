#pragma once

// Superderivations and double extensions of quadratic Lie superalgebras.
//
// Matrices act on coordinate columns: D e_j = sum_i D(i, j) e_i.

#include <string>
#include <utility>
#include <vector>

#include "superlie/quadratic.hpp"

namespace superlie {

struct Superderivation {
  Matrix matrix;
  Parity degree = Parity::Even;
};

inline ValidationReport is_superderivation(const LieSuperalgebra& g, const Matrix& d, Parity alpha) {
  ValidationReport report;
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw InputError("derivation matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) != 0 && g.parity(i) != g.parity(j) + alpha)
        report.add("degree", {j}, "D maps " + g.basis().label(j) + " outside the expected parity");
  // D[a,b] = [Da,b] + (-1)^{alpha a}[a,Db]
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Vector lhs = d.apply(g.bracket_basis(a, b));
      const Vector da = d.col(a), db = d.col(b);
      Vector rhs = g.bracket(da, unit_vector(n, b));
      axpy(rhs, koszul(alpha, g.parity(a)), g.bracket(unit_vector(n, a), db));
      if (lhs != rhs) report.add("superderivation", {a, b}, "D[X,Y] != [DX,Y] + (-1)^{αx}[X,DY]");
    }
  return report;
}

/// B(DX, Y) = -(-1)^{alpha x} B(X, DY) on all basis pairs.
inline ValidationReport is_skew_supersymmetric(const QuadraticLieSuperalgebra& q, const Matrix& d, Parity alpha) {
  ValidationReport report;
  const std::size_t n = q.dim();
  if (d.rows() != n || d.cols() != n) throw InputError("derivation matrix has the wrong size");
  const Matrix& g = q.form().gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar left = 0, right = 0;
      for (std::size_t s = 0; s < n; ++s) {
        left += d(s, i) * g(s, j);
        right += g(i, s) * d(s, j);
      }
      if (left != -koszul(alpha, q.algebra().parity(i)) * right)
        report.add("skew-supersymmetry", {i, j}, "B(DX,Y) != -(-1)^{αx} B(X,DY)");
    }
  return report;
}

/// Basis of the space of skew-supersymmetric superderivations of degree α,
/// from the nullspace of the joint linear constraints.
inline std::vector<Superderivation> skew_superderivation_space(const QuadraticLieSuperalgebra& q, Parity alpha) {
  const auto& g = q.algebra();
  const std::size_t n = q.dim();
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  std::vector<std::vector<long>> var_of(n, std::vector<long>(n, -1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (g.parity(i) == g.parity(j) + alpha) {
        var_of[i][j] = static_cast<long>(vars.size());
        vars.emplace_back(i, j);
      }
  std::vector<Vector> rows;
  auto at = [&](Vector& row, std::size_t i, std::size_t j, const Scalar& c) {
    if (var_of[i][j] >= 0) row[static_cast<std::size_t>(var_of[i][j])] += c;
  };
  // sum_t c_ab^t M(k,t) - sum_s M(s,a) c_sb^k - (-1)^{αa} sum_s M(s,b) c_as^k = 0
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = zero_vector(vars.size());
        for (const auto& [t, c] : g.structure(a, b)) at(row, k, t, c);
        for (std::size_t s = 0; s < n; ++s) {
          for (const auto& [t, c] : g.structure(s, b))
            if (t == k) at(row, s, a, -c);
          for (const auto& [t, c] : g.structure(a, s))
            if (t == k) at(row, s, b, -koszul(alpha, g.parity(a)) * c);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  const Matrix& gram = q.form().gram();
  // sum_s M(s,i) G(s,j) + (-1)^{αi} sum_s G(i,s) M(s,j) = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector row = zero_vector(vars.size());
      for (std::size_t s = 0; s < n; ++s) {
        if (gram(s, j) != 0) at(row, s, i, gram(s, j));
        if (gram(i, s) != 0) at(row, s, j, koszul(alpha, g.parity(i)) * gram(i, s));
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  std::vector<Superderivation> out;
  for (const auto& sol : nullspace(Matrix::from_rows(rows, vars.size()))) {
    Matrix m(n, n);
    for (std::size_t v = 0; v < vars.size(); ++v) m(vars[v].first, vars[v].second) = sol[v];
    out.push_back({std::move(m), alpha});
  }
  return out;
}

/// Super commutator [A, B] = AB - (-1)^{ab} BA.
inline Matrix supercommutator(const Superderivation& a, const Superderivation& b) {
  return a.matrix * b.matrix - Scalar(koszul(a.degree, b.degree)) * (b.matrix * a.matrix);
}

/// Data of a double extension of (g, B) by h. psi[a] is the image of the a-th
/// basis element of h; gamma is an invariant form on h (possibly zero).
/// dual_labels names the basis of h*; defaults to "<label>*".
class ExtensionDatum {
public:
  ExtensionDatum(QuadraticLieSuperalgebra base, LieSuperalgebra h, BilinearForm gamma, std::vector<Superderivation> psi,
                 std::vector<std::string> dual_labels = {})
      : base_(std::move(base)), h_(std::move(h)), gamma_(std::move(gamma)), psi_(std::move(psi)),
        dual_labels_(std::move(dual_labels)) {
    if (dual_labels_.empty())
      for (std::size_t a = 0; a < h_.dim(); ++a) dual_labels_.push_back(h_.basis().label(a) + "*");
    validate();
  }

  const QuadraticLieSuperalgebra& base() const { return base_; }
  const LieSuperalgebra& h() const { return h_; }
  const BilinearForm& gamma() const { return gamma_; }
  const std::vector<Superderivation>& psi() const { return psi_; }
  const std::vector<std::string>& dual_labels() const { return dual_labels_; }

private:
  void fail(const std::string& axiom, const std::string& detail) const {
    throw InputError("extension datum violates " + axiom + ": " + detail);
  }

  void validate() const {
    const std::size_t m = h_.dim(), n = base_.dim();
    if (psi_.size() != m) fail("shape", "psi needs one superderivation per basis element of h");
    if (dual_labels_.size() != m) fail("shape", "one dual label per basis element of h is required");
    if (gamma_.dim() != m) fail("shape", "gamma must be a form on h");
    if (!validate_lie_superalgebra(h_).ok()) fail("h is a Lie superalgebra", validate_lie_superalgebra(h_).describe(h_.basis()));
    if (!validate_full(base_).ok()) fail("base is quadratic", validate_full(base_).describe(base_.basis()));
    for (std::size_t a = 0; a < m; ++a) {
      const auto& d = psi_[a];
      const std::string who = "psi(" + h_.basis().label(a) + ")";
      if (d.matrix.rows() != n || d.matrix.cols() != n) fail("shape", who + " has the wrong size");
      if (d.degree != h_.parity(a)) fail("degree", who + " must have the parity of " + h_.basis().label(a));
      if (auto r = is_superderivation(base_.algebra(), d.matrix, d.degree); !r.ok())
        fail("superderivation", who + ": " + r.describe(base_.basis()));
      if (auto r = is_skew_supersymmetric(base_, d.matrix, d.degree); !r.ok())
        fail("skew-supersymmetry", who + ": " + r.describe(base_.basis()));
    }
    // psi([a,b]) = [psi(a), psi(b)]
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b) {
        Matrix lhs(n, n);
        for (const auto& [t, c] : h_.structure(a, b)) lhs = lhs + c * psi_[t].matrix;
        if (lhs != supercommutator(psi_[a], psi_[b]))
          fail("morphism", "psi([" + h_.basis().label(a) + ", " + h_.basis().label(b) + "]) != [psi, psi]");
      }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (gamma_(a, b) != koszul(h_.parity(a), h_.parity(b)) * gamma_(b, a))
          fail("gamma supersymmetry", "at (" + h_.basis().label(a) + ", " + h_.basis().label(b) + ")");
        if (h_.parity(a) != h_.parity(b) && gamma_(a, b) != 0)
          fail("gamma evenness", "at (" + h_.basis().label(a) + ", " + h_.basis().label(b) + ")");
        for (std::size_t c = 0; c < m; ++c) {
          Scalar l = 0, r = 0;
          for (const auto& [t, v] : h_.structure(a, b)) l += v * gamma_(t, c);
          for (const auto& [t, v] : h_.structure(b, c)) r += v * gamma_(a, t);
          if (l != r) fail("gamma invariance", "on a triple of h");
        }
      }
  }

  QuadraticLieSuperalgebra base_;
  LieSuperalgebra h_;
  BilinearForm gamma_;
  std::vector<Superderivation> psi_;
  std::vector<std::string> dual_labels_;
};

/// Index maps of the extended basis. Within each parity block the order is
/// (h, g, h*); even blocks precede odd ones.
struct ExtensionLayout {
  std::vector<std::size_t> h, g, dual;
  GradedBasis basis;
};

inline ExtensionLayout extension_layout(const GradedBasis& hb, const GradedBasis& gb,
                                        const std::vector<std::string>& dual_labels) {
  ExtensionLayout l;
  l.h.resize(hb.dim());
  l.g.resize(gb.dim());
  l.dual.resize(hb.dim());
  std::vector<BasisElement> elems;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (std::size_t a = 0; a < hb.dim(); ++a)
      if (hb.parity(a) == p) {
        l.h[a] = elems.size();
        elems.push_back({hb.label(a), p});
      }
    for (std::size_t i = 0; i < gb.dim(); ++i)
      if (gb.parity(i) == p) {
        l.g[i] = elems.size();
        elems.push_back({gb.label(i), p});
      }
    for (std::size_t a = 0; a < hb.dim(); ++a)
      if (hb.parity(a) == p) {
        l.dual[a] = elems.size();
        elems.push_back({dual_labels[a], p});
      }
  }
  l.basis = GradedBasis(std::move(elems));
  return l;
}

/// ḡ = h ⊕ g ⊕ h* with
///   [h_a, h_b]  = [h_a, h_b]_h
///   [h_a, X]    = psi(h_a) X
///   [X, Y]      = [X, Y]_g + sum_a phi(X, Y)(h_a) h_a^*,
///                 phi(X, Y)(Z) = (-1)^{(x+y)z} B(psi(Z) X, Y)
///   [h_a, h_b^*] = pi(h_a) h_b^* = -(-1)^{|a||b|} sum_c c_ac^b h_c^*
///   [g, h*] = [h*, h*] = 0
/// and B̄ = B on g, gamma on h, B̄(h_a^*, h_b) = δ_ab,
/// B̄(h_b, h_a^*) = (-1)^{|a||b|} δ_ab.
inline QuadraticLieSuperalgebra double_extension(const ExtensionDatum& d, std::string name = {}) {
  const auto& g = d.base().algebra();
  const auto& h = d.h();
  const auto& bg = d.base().form();
  const ExtensionLayout l = extension_layout(h.basis(), g.basis(), d.dual_labels());
  const std::size_t m = h.dim(), n = g.dim();

  std::vector<BracketEntry> entries;
  auto map_g = [&](const SparseVector& v) {
    SparseVector out;
    for (const auto& [k, c] : v) out[l.g[k]] = c;
    return out;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      SparseVector v;
      for (const auto& [t, c] : h.structure(a, b)) v[l.h[t]] = c;
      if (!v.empty()) entries.push_back({l.h[a], l.h[b], v});
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      SparseVector v;
      for (std::size_t k = 0; k < n; ++k)
        if (d.psi()[a].matrix(k, i) != 0) v[l.g[k]] = d.psi()[a].matrix(k, i);
      if (!v.empty()) entries.push_back({l.h[a], l.g[i], v});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      SparseVector v = map_g(g.structure(i, j));
      const int xy = bit(g.parity(i)) + bit(g.parity(j));
      for (std::size_t a = 0; a < m; ++a) {
        // B(psi(h_a) e_i, e_j)
        Scalar phi = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (d.psi()[a].matrix(k, i) != 0) phi += d.psi()[a].matrix(k, i) * bg(k, j);
        phi *= sign_of(static_cast<long long>(xy) * bit(h.parity(a)));
        if (phi != 0) v[l.dual[a]] += phi;
      }
      v = prune(v);
      if (!v.empty()) entries.push_back({l.g[i], l.g[j], v});
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      SparseVector v;
      for (std::size_t c = 0; c < m; ++c)
        for (const auto& [t, coeff] : h.structure(a, c))
          if (t == b) v[l.dual[c]] += -koszul(h.parity(a), h.parity(b)) * coeff;
      v = prune(v);
      if (!v.empty()) entries.push_back({l.h[a], l.dual[b], v});
    }

  if (name.empty()) name = d.base().name() + "-ext";
  LieSuperalgebra alg(std::move(name), l.basis, entries);

  Matrix gram(l.basis.dim(), l.basis.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(l.g[i], l.g[j]) = bg(i, j);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) gram(l.h[a], l.h[b]) = d.gamma()(a, b);
    gram(l.dual[a], l.h[a]) = 1;
    gram(l.h[a], l.dual[a]) = koszul(h.parity(a), h.parity(a));
  }
  return QuadraticLieSuperalgebra(std::move(alg), BilinearForm(std::move(gram)));
}

/// ḡ = Ce ⊕ g ⊕ Cf with [X,Y] = [X,Y]_g + B(DX,Y) f, [e,X] = DX, [f,·] = 0,
/// B̄(e,f) = 1. Basis order: e, even part of g, f, odd part of g.
inline QuadraticLieSuperalgebra one_dim_double_extension(const QuadraticLieSuperalgebra& q, const Matrix& d,
                                                         const std::string& e_label = "e",
                                                         const std::string& f_label = "f", std::string name = {}) {
  const auto& g = q.algebra();
  const std::size_t n = g.dim(), m = g.basis().even_dim();
  if (auto r = is_superderivation(g, d, Parity::Even); !r.ok())
    throw InputError("D is not an even superderivation: " + r.describe(g.basis()));
  if (auto r = is_skew_supersymmetric(q, d, Parity::Even); !r.ok())
    throw InputError("D is not skew-supersymmetric: " + r.describe(g.basis()));

  auto pos = [&](std::size_t i) { return i < m ? i + 1 : i + 2; };
  const std::size_t e = 0, f = m + 1;
  std::vector<BasisElement> elems{{e_label, Parity::Even}};
  for (std::size_t i = 0; i < m; ++i) elems.push_back(g.basis().elements()[i]);
  elems.push_back({f_label, Parity::Even});
  for (std::size_t i = m; i < n; ++i) elems.push_back(g.basis().elements()[i]);
  GradedBasis basis(std::move(elems));

  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector v;
    for (std::size_t k = 0; k < n; ++k)
      if (d(k, i) != 0) v[pos(k)] = d(k, i);
    if (!v.empty()) entries.push_back({e, pos(i), v});
    for (std::size_t j = i; j < n; ++j) {
      SparseVector w;
      for (const auto& [k, c] : g.structure(i, j)) w[pos(k)] = c;
      Scalar b = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (d(k, i) != 0) b += d(k, i) * q.form()(k, j);
      if (b != 0) w[f] = b;
      if (!w.empty()) entries.push_back({pos(i), pos(j), w});
    }
  }
  if (name.empty()) name = q.name() + "-ext";
  LieSuperalgebra alg(std::move(name), basis, entries);
  Matrix gram(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(pos(i), pos(j)) = q.form()(i, j);
  gram(e, f) = gram(f, e) = 1;
  return QuadraticLieSuperalgebra(std::move(alg), BilinearForm(std::move(gram)));
}

/// The same algebra written in another order of its own basis labels.
inline QuadraticLieSuperalgebra reorder(const QuadraticLieSuperalgebra& q, const std::vector<std::string>& labels) {
  const auto& old = q.basis();
  if (labels.size() != old.dim()) throw InputError("reorder needs every label exactly once");
  std::vector<std::size_t> from(labels.size());  // new index -> old index
  std::vector<BasisElement> elems;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    from[i] = old.index_of(labels[i]);
    elems.push_back({labels[i], old.parity(from[i])});
  }
  GradedBasis basis(std::move(elems));
  std::vector<std::size_t> to(labels.size());
  for (std::size_t i = 0; i < from.size(); ++i) to[from[i]] = i;
  std::vector<BracketEntry> entries;
  for (const auto& e : q.algebra().entries()) {
    SparseVector v;
    for (const auto& [k, c] : e.value) v[to[k]] = c;
    entries.push_back({to[e.left], to[e.right], v});
  }
  Matrix gram(labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) gram(i, j) = q.form()(from[i], from[j]);
  return QuadraticLieSuperalgebra(LieSuperalgebra(q.name(), std::move(basis), entries), BilinearForm(std::move(gram)));
}

/// Equal bracket tables and forms after matching basis labels.
inline bool same_up_to_labels(const QuadraticLieSuperalgebra& a, const QuadraticLieSuperalgebra& b) {
  if (a.dim() != b.dim()) return false;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    labels.push_back(a.basis().label(i));
    if (!b.basis().find(labels.back())) return false;
  }
  try {
    return a.same_structure(reorder(b, labels));
  } catch (const InputError&) {
    return false;  // label order incompatible with the parity layout
  }
}

struct CentralReduction {
  QuadraticLieSuperalgebra base;
  Matrix derivation;
};

/// Inverse of the 1-dimensional double extension. For an even central basis
/// element z and an even basis element x with B(x,z) = 1, B(x,x) = B(z,z) = 0,
/// returns W = {z,x}^⊥ with [u,v]_W = [u,v] - B([u,v],x) z and D = ad(x)|_W.
/// W is spanned by w_i = e_i - B(e_i,x) z - B(e_i,z) x and inherits the
/// labels of the e_i; then one_dim_double_extension(W, D, x, z) rebuilds q.
inline CentralReduction central_reduction(const QuadraticLieSuperalgebra& q, std::size_t z, std::size_t x) {
  const auto& g = q.algebra();
  const std::size_t n = q.dim();
  const auto& b = q.form();
  if (z >= n || x >= n || z == x) throw InputError("central reduction needs two distinct basis indices");
  if (g.parity(z) != Parity::Even || g.parity(x) != Parity::Even) throw PreconditionError("z and x must be even");
  for (std::size_t i = 0; i < n; ++i)
    if (!g.structure(z, i).empty()) throw PreconditionError(g.basis().label(z) + " is not central");
  if (b(x, z) != 1 || b(x, x) != 0 || b(z, z) != 0)
    throw PreconditionError("need B(x,z) = 1 and x, z isotropic");

  std::vector<std::size_t> keep;
  std::vector<BasisElement> elems;
  for (std::size_t i = 0; i < n; ++i)
    if (i != z && i != x) {
      keep.push_back(i);
      elems.push_back(g.basis().elements()[i]);
    }
  auto lift = [&](std::size_t i) {
    Vector w = unit_vector(n, i);
    w[z] -= b(i, x);
    w[x] -= b(i, z);
    return w;
  };
  auto restrict = [&](const Vector& v) {
    Vector r(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) r[k] = v[keep[k]];
    return r;
  };
  std::vector<Vector> w;
  for (std::size_t i : keep) w.push_back(lift(i));

  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t c = a; c < keep.size(); ++c) {
      const Vector br = g.bracket(w[a], w[c]);
      const Vector r = restrict(br);
      SparseVector v;
      for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] != 0) v[k] = r[k];
      if (!v.empty()) entries.push_back({a, c, v});
    }
  Matrix gram(keep.size(), keep.size()), d(keep.size(), keep.size());
  const Vector xv = unit_vector(n, x);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t c = 0; c < keep.size(); ++c) gram(a, c) = b.value(w[a], w[c]);
    const Vector r = restrict(g.bracket(xv, w[a]));
    for (std::size_t k = 0; k < r.size(); ++k) d(k, a) = r[k];
  }
  QuadraticLieSuperalgebra base(LieSuperalgebra(q.name() + "-reduced", GradedBasis(std::move(elems)), entries),
                                BilinearForm(std::move(gram)));
  return {std::move(base), std::move(d)};
}

}  // namespace superlie
