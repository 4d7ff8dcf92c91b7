#pragma once

// Super-Poisson bracket on C(g) for a quadratic Lie superalgebra (g, B), and
// the differential recovered from it as δ = -{I, ·}.

#include "superlie/cochain.hpp"
#include "superlie/quadratic.hpp"

namespace superlie {

/// I(X, Y, Z) = B([X, Y], Z).
inline Cochain associated_three_form(const QuadraticLieSuperalgebra& q) {
  return from_evaluation(q.basis(), 3, [&](std::span<const std::size_t> t) {
    return q.invariant_value(t[0], t[1], t[2]);
  });
}

/// Contraction kernels read off a Darboux frame.
///   even(i, j) = sum_k [e_i = X0^k] (Y0^k)_j = (G0^{-1})_{ij}
///   odd(s, t)  = sum_k X^k_s Y^k_t - Y^k_s X^k_t
struct PoissonKernels {
  Matrix even;
  Matrix odd;
};

inline PoissonKernels poisson_kernels(const DarbouxFrame& frame) {
  return {frame.even_dual_frame.transpose(), frame.odd_pairing()};
}

/// For A of bidegree (w + f, f) with w the exterior degree:
///   {A, A'} = (-1)^{w+f+1} sum_{ij} K0_ij i_{e_i} A ∧ i_{e_j} A'
///           - (-1)^w      sum_{st} K1_st i_{e_s} A ∧ i_{e_t} A'
/// extended bilinearly over the monomials of A.
inline Cochain poisson_bracket(const QuadraticLieSuperalgebra& q, const PoissonKernels& k, const Cochain& a,
                               const Cochain& b) {
  const auto& basis = q.basis();
  check_compatible(basis, a);
  check_compatible(basis, b);
  const std::size_t m = basis.even_dim(), o = basis.odd_dim();
  if (k.even.rows() != m || k.odd.rows() != o) throw InputError("Poisson kernels do not match the algebra");

  std::vector<Cochain> ib(basis.dim());
  for (std::size_t j = 0; j < basis.dim(); ++j) ib[j] = contract(basis, j, b);

  Cochain out;
  for (const auto& [mono, c] : a.terms()) {
    const Cochain term(mono, c);
    const long long w = static_cast<long long>(mono.even.size());
    const long long f = static_cast<long long>(mono.odd.size());
    for (std::size_t i = 0; i < m; ++i) {
      Cochain ia = contract(basis, i, term);
      if (ia.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (k.even(i, j) != 0 && !ib[j].is_zero())
          out += Scalar(sign_of(w + f + 1)) * k.even(i, j) * wedge(ia, ib[j]);
    }
    for (std::size_t s = 0; s < o; ++s) {
      Cochain ia = contract(basis, m + s, term);
      if (ia.is_zero()) continue;
      for (std::size_t t = 0; t < o; ++t)
        if (k.odd(s, t) != 0 && !ib[m + t].is_zero())
          out += Scalar(-sign_of(w)) * k.odd(s, t) * wedge(ia, ib[m + t]);
    }
  }
  return out;
}

inline Cochain poisson_bracket(const QuadraticLieSuperalgebra& q, const Cochain& a, const Cochain& b) {
  return poisson_bracket(q, poisson_kernels(darboux_frame(q)), a, b);
}

/// Precomputes I and the kernels once for repeated use.
class PoissonDifferential {
public:
  explicit PoissonDifferential(const QuadraticLieSuperalgebra& q)
      : q_(q), kernels_(poisson_kernels(darboux_frame(q))), three_form_(associated_three_form(q)) {}

  const Cochain& three_form() const { return three_form_; }
  const PoissonKernels& kernels() const { return kernels_; }

  Cochain operator()(const Cochain& a) const { return -poisson_bracket(q_, kernels_, three_form_, a); }

private:
  const QuadraticLieSuperalgebra& q_;
  PoissonKernels kernels_;
  Cochain three_form_;
};

/// δA = -{I, A}.
inline Cochain differential_via_poisson(const QuadraticLieSuperalgebra& q, const Cochain& a) {
  return PoissonDifferential(q)(a);
}

}  // namespace superlie
