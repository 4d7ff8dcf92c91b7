#include <gtest/gtest.h>

#include "properties.hpp"

using namespace superlie;

TEST(Properties, PoissonBracketIsGradedLieOnEveryQuadraticEntry) {
  std::uint64_t seed = 2024;
  for (const auto& e : catalog_list()) {
    if (!e.quadratic) continue;
    const auto t = oracle::check_graded_lie(catalog_build_quadratic(e.key), 200, seed++);
    EXPECT_EQ(t.triples, 200u);
    EXPECT_EQ(t.antisymmetry_failures, 0u) << e.key;
    EXPECT_EQ(t.jacobi_failures, 0u) << e.key;
    EXPECT_EQ(t.leibniz_failures, 0u) << e.key;
  }
}

TEST(Properties, SeededRunsAreReproducible) {
  const auto q = catalog_build_quadratic("g_6_s");
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 20; ++i)
    EXPECT_EQ(oracle::random_cochain(q.basis(), 2, Parity::Even, a), oracle::random_cochain(q.basis(), 2, Parity::Even, b));
}

TEST(Properties, DifferentialIsMinusBracketWithThreeForm) {
  std::mt19937_64 rng(107);
  for (const auto& e : catalog_list()) {
    if (!e.quadratic) continue;
    const auto q = catalog_build_quadratic(e.key);
    const Cochain i = associated_three_form(q);
    for (int trial = 0; trial < 30; ++trial) {
      const Cochain a = oracle::random_cochain(q.basis(), 1 + trial % 3, parity_of(trial), rng);
      EXPECT_EQ(differential_direct(q.algebra(), a), -poisson_bracket(q, i, a)) << e.key;
    }
  }
}
