#pragma once

// Cohomology with trivial coefficients: δ_k as exact matrices between the
// monomial bases of C^k and C^{k+1}, then kernels, images and Betti numbers.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "superlie/poisson.hpp"

namespace superlie {

inline constexpr std::size_t default_size_guard = 200000;
// Dense differential matrices are capped separately: a pair of degrees can
// each be under the monomial guard and still need billions of entries.
inline constexpr std::size_t max_matrix_entries = 20'000'000;

/// dim C^k = sum_p C(m, p) * C(o + k - p - 1, k - p).
inline Integer cochain_dimension(std::size_t even_dim, std::size_t odd_dim, std::size_t k) {
  auto binom = [](std::size_t n, std::size_t r) {
    if (r > n) return Integer(0);
    Integer b = 1;
    for (std::size_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
  };
  Integer total = 0;
  for (std::size_t p = 0; p <= std::min(k, even_dim); ++p) {
    const std::size_t q = k - p;
    if (q == 0)
      total += binom(even_dim, p);
    else if (odd_dim > 0)
      total += binom(even_dim, p) * binom(odd_dim + q - 1, q);
  }
  return total;
}

inline void check_size_guard(const GradedBasis& basis, std::size_t k, std::size_t guard) {
  const Integer n = cochain_dimension(basis.even_dim(), basis.odd_dim(), k);
  if (n > guard)
    throw ResourceError("dim C^" + std::to_string(k) + " = " + n.str() + " exceeds the size guard of " +
                        std::to_string(guard) + " monomials");
}

class CochainBasis {
public:
  CochainBasis(const GradedBasis& basis, std::size_t k, std::size_t guard = default_size_guard) : degree_(k) {
    check_size_guard(basis, k, guard);
    monomials_ = monomials_of_degree(basis, k);
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  std::size_t position(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw InputError("monomial is not in C^" + std::to_string(degree_));
    return it->second;
  }

  /// Coordinates of the degree-k component; other components must be zero.
  Vector coordinates(const Cochain& a) const {
    Vector v = zero_vector(size());
    for (const auto& [m, c] : a.terms()) v[position(m)] = c;
    return v;
  }

  Cochain cochain(std::span<const Scalar> coords) const {
    if (coords.size() != size()) throw InputError("coordinate vector has the wrong length");
    Cochain out;
    for (std::size_t i = 0; i < coords.size(); ++i) out.add(monomials_[i], coords[i]);
    return out;
  }

private:
  std::size_t degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

inline CochainBasis cochain_basis(const GradedBasis& basis, std::size_t k, std::size_t guard = default_size_guard) {
  return CochainBasis(basis, k, guard);
}

/// Matrix of δ_k: rows indexed by C^{k+1}, columns by C^k.
inline Matrix differential_matrix(const LieSuperalgebra& g, std::size_t k, std::size_t guard = default_size_guard) {
  const CochainBasis src(g.basis(), k, guard), dst(g.basis(), k + 1, guard);
  if (src.size() > 0 && dst.size() > max_matrix_entries / src.size())
    throw ResourceError("the matrix of delta_" + std::to_string(k) + " would be " + std::to_string(dst.size()) + " x " +
                        std::to_string(src.size()) + ", above the limit of " + std::to_string(max_matrix_entries) +
                        " entries");
  Matrix d(dst.size(), src.size());
  if (k == 0) return d;
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Cochain image = differential_direct(g, Cochain(src[j], 1));
    for (const auto& [m, c] : image.terms()) d(dst.position(m), j) = c;
  }
  return d;
}

/// As above, with every column checked against -{I, ·}.
inline Matrix differential_matrix(const QuadraticLieSuperalgebra& q, std::size_t k,
                                  std::size_t guard = default_size_guard) {
  Matrix d = differential_matrix(q.algebra(), k, guard);
  if (k == 0) return d;
  const CochainBasis src(q.basis(), k, guard), dst(q.basis(), k + 1, guard);
  const PoissonDifferential poisson(q);
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Vector expected = dst.coordinates(poisson(Cochain(src[j], 1)));
    if (expected != d.col(j))
      throw std::logic_error("direct and Poisson differentials disagree on a degree " + std::to_string(k) +
                             " monomial of " + q.name());
  }
  return d;
}

struct CohomologyResult {
  std::size_t degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t betti = 0;
  std::vector<Cochain> representatives;
};

namespace detail {

inline Subspace column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace(m.rows(), cols);
}

/// H^k from δ_{k-1} (into C^k) and δ_k (out of C^k). Representatives: walk
/// the cocycle basis in order, keep each vector not yet spanned together with
/// the coboundaries, reduced modulo the coboundary echelon form.
inline CohomologyResult assemble(std::size_t k, const CochainBasis& basis, const Matrix& into, const Matrix& out_of) {
  CohomologyResult r;
  r.degree = k;
  r.dim_cochains = basis.size();
  const auto cocycles = nullspace(out_of);
  r.dim_cocycles = cocycles.size();
  const Subspace boundaries = column_space(into);
  r.dim_coboundaries = boundaries.dim();
  if (r.dim_coboundaries > r.dim_cocycles) throw std::logic_error("coboundaries exceed cocycles: δ∘δ != 0");
  r.betti = r.dim_cocycles - r.dim_coboundaries;
  Subspace spanned = boundaries;
  for (const auto& z : cocycles) {
    if (r.representatives.size() == r.betti) break;
    if (spanned.contains(z)) continue;
    spanned = spanned.plus(Subspace(basis.size(), {z}));
    r.representatives.push_back(basis.cochain(boundaries.residue(z)));
  }
  return r;
}

}  // namespace detail

inline CohomologyResult cohomology(const LieSuperalgebra& g, std::size_t k, std::size_t guard = default_size_guard) {
  const CochainBasis basis(g.basis(), k, guard);
  const Matrix into = k == 0 ? Matrix(basis.size(), 0) : differential_matrix(g, k - 1, guard);
  return detail::assemble(k, basis, into, differential_matrix(g, k, guard));
}

inline CohomologyResult cohomology(const QuadraticLieSuperalgebra& q, std::size_t k,
                                   std::size_t guard = default_size_guard) {
  const CochainBasis basis(q.basis(), k, guard);
  const Matrix into = k == 0 ? Matrix(basis.size(), 0) : differential_matrix(q, k - 1, guard);
  return detail::assemble(k, basis, into, differential_matrix(q, k, guard));
}

namespace detail {

template <class Algebra>
std::vector<CohomologyResult> betti_table(const Algebra& a, std::size_t k_max, std::size_t guard) {
  const GradedBasis& basis = a.basis();
  Integer total = 0;
  for (std::size_t k = 0; k <= k_max + 1; ++k) {
    check_size_guard(basis, k, guard);
    total += cochain_dimension(basis.even_dim(), basis.odd_dim(), k);
  }
  if (total > guard)
    throw ResourceError("sum of dim C^k for k <= " + std::to_string(k_max + 1) + " is " + total.str() +
                        ", above the size guard of " + std::to_string(guard));
  std::vector<CochainBasis> bases;
  std::vector<Matrix> deltas;
  for (std::size_t k = 0; k <= k_max + 1; ++k) bases.emplace_back(basis, k, guard);
  for (std::size_t k = 0; k <= k_max; ++k) deltas.push_back(differential_matrix(a, k, guard));
  std::vector<CohomologyResult> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const Matrix into = k == 0 ? Matrix(bases[0].size(), 0) : deltas[k - 1];
    out.push_back(assemble(k, bases[k], into, deltas[k]));
  }
  return out;
}

}  // namespace detail

inline std::vector<CohomologyResult> betti_table(const LieSuperalgebra& g, std::size_t k_max,
                                                 std::size_t guard = default_size_guard) {
  return detail::betti_table(g, k_max, guard);
}

inline std::vector<CohomologyResult> betti_table(const QuadraticLieSuperalgebra& q, std::size_t k_max,
                                                 std::size_t guard = default_size_guard) {
  return detail::betti_table(q, k_max, guard);
}

struct ClassCheck {
  bool is_cocycle = false;
  bool nonzero_class = false;
};

/// Whether a homogeneous degree-k cochain is a cocycle, and whether it lies
/// outside the coboundaries.
inline ClassCheck class_is_nonzero(const LieSuperalgebra& g, const Cochain& a, std::size_t k,
                                   std::size_t guard = default_size_guard) {
  check_compatible(g.basis(), a);
  for (std::size_t d : a.degrees())
    if (d != k) throw InputError("cochain is not homogeneous of degree " + std::to_string(k));
  ClassCheck r;
  r.is_cocycle = differential_direct(g, a).is_zero();
  if (!r.is_cocycle) return r;
  const CochainBasis basis(g.basis(), k, guard);
  const Vector v = basis.coordinates(a);
  if (k == 0) {
    r.nonzero_class = !is_zero(v);
    return r;
  }
  r.nonzero_class = !detail::column_space(differential_matrix(g, k - 1, guard)).contains(v);
  return r;
}

}  // namespace superlie
