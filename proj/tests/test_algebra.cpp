#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace superlie;

namespace {

Vector basis_vec(const LieSuperalgebra& g, const std::string& l) { return unit_vector(g.dim(), g.basis().index_of(l)); }

Vector bracket(const LieSuperalgebra& g, const std::string& a, const std::string& b) {
  return g.bracket_basis(g.basis().index_of(a), g.basis().index_of(b));
}

}  // namespace

TEST(Algebra, HeisenbergBracket) {
  const auto h = catalog_build("heisenberg").algebra;
  EXPECT_EQ(bracket(h, "X1", "X2"), basis_vec(h, "Z"));
  EXPECT_EQ(bracket(h, "X2", "X1"), scaled(basis_vec(h, "Z"), -1));
  EXPECT_EQ(bracket(h, "Y1", "Y1"), basis_vec(h, "Z"));
}

TEST(Algebra, G41Bracket) {
  const auto g = catalog_build("g_4_1_s").algebra;
  EXPECT_EQ(bracket(g, "Y0", "Y1"), scaled(basis_vec(g, "X1"), -2));
  EXPECT_EQ(bracket(g, "Y1", "Y0"), scaled(basis_vec(g, "X1"), 2));  // even-odd pair is antisymmetric
  EXPECT_EQ(bracket(g, "Y1", "Y1"), scaled(basis_vec(g, "X0"), -2));
}

TEST(Algebra, EvenSelfBracketVanishes) {
  std::mt19937_64 rng(3);
  for (const auto& e : catalog_list()) {
    const auto g = catalog_build(e.key).algebra;
    Vector v = zero_vector(g.dim());
    for (std::size_t i = 0; i < g.basis().even_dim(); ++i) v[i] = oracle::random_scalar(rng);
    EXPECT_TRUE(is_zero(g.bracket(v, v))) << e.key;
  }
}

TEST(Algebra, CatalogAlgebrasValidate) {
  for (const auto& e : catalog_list()) EXPECT_TRUE(validate_lie_superalgebra(catalog_build(e.key).algebra).ok()) << e.key;
  EXPECT_TRUE(validate_lie_superalgebra(make_abelian(3, 4)).ok());
}

TEST(Algebra, MutatedTableFailsJacobi) {
  const auto g = catalog_build("g_4_2_s").algebra;
  const std::size_t y0 = g.basis().index_of("Y0"), x1 = g.basis().index_of("X1");
  const auto bad = g.with_bracket(y0, x1, {{x1, Scalar(-1)}});
  const auto report = validate_lie_superalgebra(bad);
  EXPECT_FALSE(report.ok());
  // brute force over all triples as an independent witness
  bool found = false;
  for (std::size_t i = 0; i < bad.dim(); ++i)
    for (std::size_t j = 0; j < bad.dim(); ++j)
      for (std::size_t k = 0; k < bad.dim(); ++k) {
        const Vector x = unit_vector(bad.dim(), i), y = unit_vector(bad.dim(), j), z = unit_vector(bad.dim(), k);
        // [X,[Y,Z]] - [[X,Y],Z] - (-1)^{xy}[Y,[X,Z]]
        Vector lhs = bad.bracket(x, bad.bracket(y, z));
        axpy(lhs, -1, bad.bracket(bad.bracket(x, y), z));
        axpy(lhs, -koszul(bad.parity(i), bad.parity(j)), bad.bracket(y, bad.bracket(x, z)));
        found = found || !is_zero(lhs);
      }
  EXPECT_TRUE(found);
  EXPECT_TRUE(report.mentions("super Jacobi identity"));
}

TEST(Algebra, OddSymmetricBracketIsLegal) {
  const GradedBasis b({{"Z", Parity::Even}, {"Y", Parity::Odd}});
  const LieSuperalgebra g("t", b, {{1, 1, {{0, Scalar(1)}}}});
  EXPECT_TRUE(validate_lie_superalgebra(g).ok());
}

TEST(Algebra, GradingViolationReported) {
  const GradedBasis b({{"A", Parity::Even}, {"B", Parity::Even}, {"Y", Parity::Odd}});
  const LieSuperalgebra g("t", b, {{0, 1, {{2, Scalar(1)}}}});
  const auto r = validate_lie_superalgebra(g);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.mentions("grading"));
}

TEST(Algebra, DerivedSeries) {
  const auto g61 = catalog_build("g_6_1").algebra;
  const auto s = derived_series(g61);
  ASSERT_GE(s.size(), 3u);
  EXPECT_EQ(s[1].dim(), 3u);
  EXPECT_TRUE(s[2].is_zero());
  const auto ab = derived_series(make_abelian(2, 2));
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_TRUE(ab[1].is_zero());
  EXPECT_TRUE(is_solvable(catalog_build("g_8_2_9_s").algebra));
}

TEST(Algebra, Center) {
  for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    const auto h = catalog_build("heisenberg", {{"n", n}, {"m", m}}).algebra;
    const Subspace c = center(h);
    EXPECT_EQ(c.dim(), 1u);
    EXPECT_TRUE(c.contains(basis_vec(h, "Z")));
  }
  EXPECT_EQ(center(make_abelian(2, 3)).dim(), 5u);
  const auto g = catalog_build("g_4_1_s").algebra;
  const Subspace even_part(g.dim(), {basis_vec(g, "X0"), basis_vec(g, "Y0")});
  const Subspace c0 = center(g).intersect(even_part);
  EXPECT_EQ(c0.dim(), 1u);
  EXPECT_TRUE(c0.contains(basis_vec(g, "X0")));
}
