#pragma once

// Graded Lie identities of the Poisson bracket on random homogeneous triples.

#include <string>

#include "oracles.hpp"

namespace oracle {

struct PropertyTally {
  std::size_t triples = 0;
  std::size_t antisymmetry_failures = 0;
  std::size_t jacobi_failures = 0;
  std::size_t leibniz_failures = 0;
  bool ok() const { return antisymmetry_failures + jacobi_failures + leibniz_failures == 0; }
};

/// For A in C^(a,b), A' in C^(a',b'), e = (-1)^{aa'+bb'}:
///   {A', A} = -e {A, A'}
///   {{A, A'}, A''} = {A, {A', A''}} - e {A', {A, A''}}
///   {A, A' ∧ A''} = {A, A'} ∧ A'' + e A' ∧ {A, A''}
inline PropertyTally check_graded_lie(const superlie::QuadraticLieSuperalgebra& q, std::size_t triples,
                                      std::uint64_t seed) {
  using namespace superlie;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> degree(1, 3);
  std::bernoulli_distribution odd(0.5);
  const auto kernels = poisson_kernels(darboux_frame(q));
  auto pb = [&](const Cochain& x, const Cochain& y) { return poisson_bracket(q, kernels, x, y); };
  auto draw = [&] {
    while (true) {
      Cochain c = random_cochain(q.basis(), degree(rng), odd(rng) ? Parity::Odd : Parity::Even, rng, 2);
      if (!c.is_zero()) return c;
    }
  };
  PropertyTally t;
  while (t.triples < triples) {
    const Cochain a = draw(), a1 = draw(), a2 = draw();
    const auto [da, pa] = *a.bidegree();
    const auto [d1, p1] = *a1.bidegree();
    const Scalar e = sign_of(static_cast<long long>(da * d1 + bit(pa) * bit(p1)));
    if (pb(a1, a) != -e * pb(a, a1)) ++t.antisymmetry_failures;
    if (pb(pb(a, a1), a2) != pb(a, pb(a1, a2)) - e * pb(a1, pb(a, a2))) ++t.jacobi_failures;
    if (pb(a, wedge(a1, a2)) != wedge(pb(a, a1), a2) + e * wedge(a1, pb(a, a2))) ++t.leibniz_failures;
    ++t.triples;
  }
  return t;
}

}  // namespace oracle
