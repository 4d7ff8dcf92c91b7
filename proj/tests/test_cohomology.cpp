#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace superlie;

TEST(CochainSpace, Dimensions) {
  const auto g41 = catalog_build_quadratic("g_4_1_s");
  const CochainBasis c2(g41.basis(), 2);
  EXPECT_EQ(c2.size(), 8u);
  std::size_t alt2 = 0, mixed = 0, sym2 = 0;
  for (const auto& m : c2.monomials()) (m.even.size() == 2 ? alt2 : m.even.size() == 1 ? mixed : sym2)++;
  EXPECT_EQ(alt2, 1u);
  EXPECT_EQ(mixed, 4u);
  EXPECT_EQ(sym2, 3u);
  EXPECT_EQ(CochainBasis(catalog_build("g_6_s").algebra.basis(), 2).size(), 19u);
  for (const auto& en : catalog_list()) {
    const auto g = catalog_build(en.key).algebra;
    const auto& b = g.basis();
    const CochainBasis c0(b, 0);
    ASSERT_EQ(c0.size(), 1u);
    EXPECT_TRUE(c0[0].even.empty() && c0[0].odd.empty());
  }
}

TEST(CochainSpace, FormulaMatchesEnumeration) {
  for (std::size_t p = 0; p <= 5; ++p)
    for (std::size_t q = 0; q <= 5; ++q)
      for (std::size_t k = 0; k <= 5; ++k)
        EXPECT_EQ(cochain_dimension(p, q, k), Integer(oracle::brute_cochain_count(p, q, k))) << p << q << k;
}

TEST(CochainSpace, SizeGuard) {
  const auto h = catalog_build("heisenberg", {{"n", 20}, {"m", 20}}).algebra;
  EXPECT_THROW(cohomology(h, 4), ResourceError);
  EXPECT_THROW(cohomology(catalog_build("g_6_s").algebra, 3, 10), ResourceError);
  EXPECT_THROW(catalog_build("heisenberg", {{"n", 100000}}), ResourceError);
}

TEST(DifferentialMatrix, DegreeZeroVanishes) {
  for (const auto& en : catalog_list()) EXPECT_TRUE(differential_matrix(catalog_build(en.key).algebra, 0).is_zero());
}

TEST(DifferentialMatrix, AbelianVanishes) {
  const auto g = make_abelian(2, 3);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_TRUE(differential_matrix(g, k).is_zero());
}

TEST(DifferentialMatrix, RankOfDelta1ForG42) {
  const auto q = catalog_build_quadratic("g_4_2_s");
  const Matrix d1 = differential_matrix(q, 1);
  EXPECT_EQ(rank(d1), 3u);
  EXPECT_EQ(oracle::bareiss_rank(d1), 3u);
}

TEST(DifferentialMatrix, ComposesToZero) {
  for (const auto& en : catalog_list()) {
    const auto g = catalog_build(en.key).algebra;
    for (std::size_t k = 0; k + 1 <= 3; ++k)
      EXPECT_TRUE((differential_matrix(g, k + 1) * differential_matrix(g, k)).is_zero()) << en.key << " k=" << k;
  }
}

TEST(DifferentialMatrix, QuadraticRouteMatchesDirect) {
  for (const auto& en : catalog_list())
    if (en.quadratic) {
      const auto q = catalog_build_quadratic(en.key);
      for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(differential_matrix(q, k), differential_matrix(q.algebra(), k)) << en.key;
    }
}

TEST(Cohomology, G41) {
  const auto q = catalog_build_quadratic("g_4_1_s");
  const auto r = cohomology(q, 2);
  EXPECT_EQ(r.betti, 2u);
  EXPECT_EQ(r.dim_cocycles, 4u);
  EXPECT_EQ(r.dim_coboundaries, 2u);
  ASSERT_EQ(r.representatives.size(), 2u);
  // The listed classes span the same quotient as the computed representatives.
  const auto& b = q.basis();
  const CochainBasis c2(b, 2);
  const Subspace boundaries = detail::column_space(differential_matrix(q, 1));
  const Subspace listed = boundaries.plus(Subspace(c2.size(), {c2.coordinates(parse_cochain(b, "e(Y0) ⊗ s(X1)")),
                                                              c2.coordinates(parse_cochain(b, "s(X1,Y1) - 2 * e(X0^Y0)"))}));
  Subspace computed = boundaries;
  for (const auto& rep : r.representatives) computed = computed.plus(Subspace(c2.size(), {c2.coordinates(rep)}));
  EXPECT_EQ(listed.dim(), 4u);
  EXPECT_TRUE(listed.contains(computed) && computed.contains(listed));
}

TEST(Cohomology, G42AndG6s) {
  EXPECT_EQ(cohomology(catalog_build_quadratic("g_4_2_s"), 2).betti, 0u);
  const auto r = cohomology(catalog_build_quadratic("g_6_s"), 2);
  EXPECT_EQ(r.betti, 6u);
  EXPECT_EQ(r.representatives.size(), 6u);
}

TEST(Cohomology, RepresentativesAreNonzeroClasses) {
  for (const auto& en : catalog_list()) {
    const auto g = catalog_build(en.key).algebra;
    for (const auto& r : betti_table(g, 2))
      for (const auto& rep : r.representatives) {
        const auto c = class_is_nonzero(g, rep, r.degree);
        EXPECT_TRUE(c.is_cocycle && c.nonzero_class) << en.key << " k=" << r.degree;
      }
  }
}

TEST(Cohomology, HeisenbergFormula) {
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 1}}) {
    const auto h = catalog_build("heisenberg", {{"n", n}, {"m", m}}).algebra;
    EXPECT_EQ(Scalar(cohomology(h, 2).betti), oracle::heisenberg_b2(n, m)) << n << "," << m;
  }
  EXPECT_EQ(cohomology(catalog_build("heisenberg", {{"n", 1}, {"m", 2}}).algebra, 2).betti, 7u);
  EXPECT_EQ(cohomology(catalog_build("heisenberg", {{"n", 2}, {"m", 1}}).algebra, 2).betti, 10u);
}

TEST(Cohomology, AbelianBettiIsCochainDimension) {
  const auto g = make_abelian(3, 2);
  for (const auto& r : betti_table(g, 3)) EXPECT_EQ(r.betti, r.dim_cochains);
}

TEST(Cohomology, BettiTableMatchesSingleDegrees) {
  const auto q = catalog_build_quadratic("g_8_2_3_s");
  const auto table = betti_table(q, 2);
  for (const auto& r : table) {
    const auto single = cohomology(q, r.degree);
    EXPECT_EQ(single.betti, r.betti);
    EXPECT_EQ(single.dim_cocycles, r.dim_cocycles);
  }
  // ranks by an independent elimination
  for (std::size_t k = 1; k <= 2; ++k) {
    const std::size_t z = table[k].dim_cochains - oracle::bareiss_rank(differential_matrix(q.algebra(), k));
    EXPECT_EQ(table[k].betti, z - oracle::bareiss_rank(differential_matrix(q.algebra(), k - 1)));
  }
}

TEST(Cohomology, ClassCheck) {
  const auto q = catalog_build_quadratic("g_4_1_s");
  const auto& b = q.basis();
  const auto& g = q.algebra();
  EXPECT_FALSE(class_is_nonzero(g, parse_cochain(b, "e(X0)"), 1).is_cocycle);
  const auto boundary = class_is_nonzero(g, parse_cochain(b, "s(Y1,Y1)"), 2);
  EXPECT_TRUE(boundary.is_cocycle);
  EXPECT_FALSE(boundary.nonzero_class);
  EXPECT_THROW(class_is_nonzero(g, parse_cochain(b, "e(X0)"), 2), InputError);
}
