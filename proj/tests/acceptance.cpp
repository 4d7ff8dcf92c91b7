// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check recomputes from structure constants.

#include <chrono>
#include <iostream>
#include <sstream>

#include "properties.hpp"

using namespace superlie;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
};

std::string show(const GradedBasis& b, const Cochain& c) { return format_cochain(b, c); }

std::vector<std::string> quadratic_keys() {
  std::vector<std::string> keys;
  for (const auto& e : catalog_list())
    if (e.quadratic) keys.push_back(e.key);
  return keys;
}

Outcome betti_regression() {
  Outcome o;
  std::ostringstream s;
  for (const auto& [key, want] : std::vector<std::pair<std::string, std::size_t>>{{"g_4_1_s", 2}, {"g_4_2_s", 0}, {"g_6_s", 6}}) {
    const auto r = cohomology(catalog_build(key).algebra, 2);
    s << key << " b2=" << r.betti << " ";
    if (r.betti != want) o.fail(key + ": b2 = " + std::to_string(r.betti) + ", expected " + std::to_string(want));
  }
  o.summary = s.str();
  return o;
}

Outcome span_dimensions() {
  Outcome o;
  std::ostringstream s;
  for (const auto& [key, im, ker] :
       std::vector<std::tuple<std::string, std::size_t, std::size_t>>{{"g_4_1_s", 2, 4}, {"g_4_2_s", 3, 3}, {"g_6_s", 3, 9}}) {
    const auto r = cohomology(catalog_build(key).algebra, 2);
    s << key << " " << r.dim_coboundaries << "/" << r.dim_cocycles << " ";
    if (r.dim_coboundaries != im || r.dim_cocycles != ker)
      o.fail(key + ": Im/Ker = " + std::to_string(r.dim_coboundaries) + "/" + std::to_string(r.dim_cocycles));
  }
  o.summary = s.str();
  return o;
}

Outcome representatives() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<std::string>>> listed = {
      {"g_4_1_s", {"e(Y0) ⊗ s(X1)", "s(X1,Y1) - 2 * e(X0^Y0)"}},
      {"g_6_s",
       {"e(Y0) ⊗ s(X1)", "e(Y0) ⊗ s(Y1)", "s(Z1,Z1)", "s(T1,T1)", "s(X1,Z1) - e(X0^Y0)", "s(Y1,T1) - e(X0^Y0)"}}};
  std::size_t n = 0;
  for (const auto& [key, reps] : listed) {
    const auto g = catalog_build(key).algebra;
    const auto b2 = cohomology(g, 2);
    // the listed classes must also be independent modulo coboundaries
    const CochainBasis c2(g.basis(), 2);
    Matrix cols(c2.size(), reps.size());
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const Cochain a = parse_cochain(g.basis(), reps[j]);
      const auto check = class_is_nonzero(g, a, 2);
      ++n;
      if (!check.is_cocycle) o.fail(key + ": " + reps[j] + " is not a cocycle");
      else if (!check.nonzero_class) o.fail(key + ": " + reps[j] + " is a coboundary");
      const Vector v = c2.coordinates(a);
      for (std::size_t i = 0; i < v.size(); ++i) cols(i, j) = v[i];
    }
    const Matrix into = differential_matrix(g, 1);
    Matrix both(c2.size(), reps.size() + into.cols());
    for (std::size_t i = 0; i < c2.size(); ++i) {
      for (std::size_t j = 0; j < reps.size(); ++j) both(i, j) = cols(i, j);
      for (std::size_t j = 0; j < into.cols(); ++j) both(i, reps.size() + j) = into(i, j);
    }
    const std::size_t classes = rank(both) - rank(into);
    if (classes != b2.betti) o.fail(key + ": listed classes span " + std::to_string(classes) + " of " + std::to_string(b2.betti));
  }
  o.summary = std::to_string(n) + " listed representatives checked";
  return o;
}

Outcome heisenberg_formula() {
  Outcome o;
  std::ostringstream s;
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    const auto g = catalog_build("heisenberg", {{"n", n}, {"m", m}}).algebra;
    const std::size_t b2 = cohomology(g, 2).betti;
    const Scalar want = oracle::heisenberg_b2(n, m);
    s << "(" << n << "," << m << ")=" << b2 << " ";
    if (Scalar(b2) != want)
      o.fail("h(" + std::to_string(2 * n + 1) + "," + std::to_string(m) + "): b2 = " + std::to_string(b2) + ", formula " +
             to_string(want));
  }
  o.summary = s.str();
  return o;
}

Outcome poisson_table() {
  Outcome o;
  const auto q = catalog_build_quadratic("g_4_1_s");
  const auto& b = q.basis();
  // the cochain the printed computation brackets with
  const Cochain i = parse_cochain(b, "e(Y0) ⊗ s(Y1,Y1)");
  const std::vector<std::pair<std::string, std::string>> table = {
      {"e(X0)", "s(Y1,Y1)"},
      {"e(Y0)", "0"},
      {"s(X1)", "2 * e(Y0) ⊗ s(Y1)"},
      {"s(Y1)", "0"},
      {"e(X0^Y0)", "e(Y0) ⊗ s(Y1,Y1)"},
      {"e(X0) ⊗ s(X1)", "s(X1,Y1,Y1) + 2 * e(X0^Y0) ⊗ s(Y1)"},
      {"e(X0) ⊗ s(Y1)", "-1 * s(Y1,Y1,Y1)"},
      {"e(Y0) ⊗ s(X1)", "0"},
      {"e(Y0) ⊗ s(Y1)", "0"},
      {"s(X1,X1)", "4 * e(Y0) ⊗ s(X1,Y1)"},
      {"s(Y1,Y1)", "0"},
      {"s(X1,Y1)", "2 * e(Y0) ⊗ s(Y1,Y1)"}};
  std::size_t matched = 0;
  for (const auto& [arg, want] : table) {
    const Cochain got = poisson_bracket(q, i, parse_cochain(b, arg));
    if (got == parse_cochain(b, want))
      ++matched;
    else
      o.fail("{I, " + arg + "} = " + show(b, got) + ", listed " + want);
  }
  o.summary = std::to_string(matched) + "/" + std::to_string(table.size()) + " listed brackets reproduced";
  return o;
}

Outcome dual_differential() {
  Outcome o;
  std::size_t monomials = 0, products = 0;
  for (const auto& key : quadratic_keys()) {
    const auto q = catalog_build_quadratic(key);
    for (std::size_t k = 0; k <= 3; ++k) {
      const CochainBasis c(q.basis(), k);
      for (std::size_t j = 0; j < c.size(); ++j) {
        const Cochain a(c[j], 1);
        ++monomials;
        if (differential_direct(q.algebra(), a) != differential_via_poisson(q, a))
          o.fail(key + ": direct and Poisson differentials differ on " + show(q.basis(), a));
      }
    }
  }
  std::vector<LieSuperalgebra> all;
  for (const auto& e : catalog_list()) all.push_back(catalog_build(e.key).algebra);
  for (const auto& g : all) {
    for (std::size_t k = 0; k + 1 <= 2; ++k) {
      ++products;
      if (!(differential_matrix(g, k + 1) * differential_matrix(g, k)).is_zero())
        o.fail(g.name() + ": delta_" + std::to_string(k + 1) + " delta_" + std::to_string(k) + " != 0");
    }
  }
  o.summary = std::to_string(monomials) + " monomials, " + std::to_string(products) + " matrix products";
  return o;
}

Outcome graded_lie() {
  Outcome o;
  std::uint64_t seed = 2024;
  std::size_t triples = 0;
  for (const auto& key : quadratic_keys()) {
    const auto t = oracle::check_graded_lie(catalog_build_quadratic(key), 200, seed++);
    triples += t.triples;
    if (!t.ok())
      o.fail(key + ": " + std::to_string(t.antisymmetry_failures) + " antisymmetry, " + std::to_string(t.jacobi_failures) +
             " Jacobi, " + std::to_string(t.leibniz_failures) + " Leibniz failures");
  }
  o.summary = std::to_string(triples) + " triples over " + std::to_string(quadratic_keys().size()) + " algebras";
  return o;
}

Outcome extension_soundness() {
  Outcome o;
  std::mt19937_64 rng(31337);
  std::size_t count = 0;
  for (const auto& key : quadratic_keys()) {
    const auto q = catalog_build_quadratic(key);
    for (int kind = 0; kind < 4; ++kind) {
      const auto ext = double_extension(oracle::random_extension_datum(q, kind, rng));
      ++count;
      const auto r = validate_full(ext);
      if (!r.ok()) o.fail(key + " kind " + std::to_string(kind) + ": " + r.describe(ext.basis()));
    }
  }
  if (count < 50) o.fail("only " + std::to_string(count) + " data");
  o.summary = std::to_string(count) + " random extension data";
  return o;
}

Outcome classification() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<ParamMap>>> cases = {
      {"g_8_2_3_s", {{{"lambda", 1}}, {{"lambda", -2}}, {{"lambda", Scalar(3, 5)}}}},
      {"g_8_2_4_s",
       {{{"lambda", 1}, {"mu", 1}}, {{"lambda", Scalar(-1, 2)}, {"mu", 3}}, {{"lambda", 4}, {"mu", Scalar(-2, 7)}}}},
      {"g_8_2_7_s", {{}}},
      {"g_8_2_8_s", {{{"lambda", 1}}, {{"lambda", Scalar(-5, 3)}}, {{"lambda", 6}}}}};
  std::size_t rebuilt = 0, families = 0;
  for (const auto& [key, bindings] : cases) {
    for (const auto& p : bindings) {
      const auto r = catalog_extension_recipe(key, p);
      const auto built = one_dim_double_extension(r.base, r.derivation, r.e_label, r.f_label);
      ++rebuilt;
      if (!same_up_to_labels(built, catalog_build_quadratic(key, p))) o.fail(key + ": recipe does not rebuild the table");
    }
  }
  for (const auto& e : catalog_list()) {
    if (e.key.rfind("g_8_2_", 0) != 0) continue;
    ++families;
    const auto q = catalog_build_quadratic(e.key);
    const auto r = validate_full(q);
    if (!r.ok()) o.fail(e.key + ": " + r.describe(q.basis()));
    if (!is_solvable(q.algebra())) o.fail(e.key + " is not solvable");
  }
  if (families != 9) o.fail(std::to_string(families) + " eight-dimensional families registered");
  o.summary = std::to_string(rebuilt) + " recipe rebuilds, " + std::to_string(families) + " families validated";
  return o;
}

Sp2Element random_sp2(std::mt19937_64& rng) {
  return {oracle::random_scalar(rng), oracle::random_scalar(rng), oracle::random_scalar(rng)};
}

Matrix ad_matrix(const Sp2Element& a) {
  Matrix m(3, 3);
  const Sp2Element basis[] = {Sp2Element::H(), Sp2Element::X(), Sp2Element::Y()};
  for (std::size_t j = 0; j < 3; ++j) {
    const auto c = commutator(a, basis[j]);
    m(0, j) = c.a;
    m(1, j) = c.b;
    m(2, j) = c.c;
  }
  return m;
}

Outcome sp2_checks() {
  Outcome o;
  std::mt19937_64 rng(4242);
  // commuting pairs: B drawn from the centralizer of A, solved as a nullspace
  std::size_t pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Sp2Element a = trial % 50 == 0 ? Sp2Element{} : random_sp2(rng);
    Sp2Element b;
    for (const auto& v : nullspace(ad_matrix(a))) b = b + oracle::random_scalar(rng) * Sp2Element{v[0], v[1], v[2]};
    const auto cert = check_commuting_dependence(a, b);
    ++pairs;
    if (!cert.dependent || (cert.mu == 0 && cert.nu == 0) || !(cert.mu * a + cert.nu * b).is_zero())
      o.fail("no dependence certificate for a commuting pair");
  }
  // [A,B] = C, [A,C] = [B,C] = 0: for each A and C in the centralizer of A,
  // solve the linear conditions on B
  std::size_t triples = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix g = oracle::random_gl2(rng);
    // every third A is a nilpotent conjugate of X, where ad_A B = C has more solutions
    const Sp2Element a =
        trial % 3 == 0 ? Sp2Element::from_matrix(g * Sp2Element::X().matrix() * *inverse(g)) : random_sp2(rng);
    if (a.is_zero()) continue;
    Sp2Element c;
    for (const auto& v : nullspace(ad_matrix(a))) c = c + oracle::random_scalar(rng) * Sp2Element{v[0], v[1], v[2]};
    // rows: ad_A B = C and ad_C B = 0 (i.e. [B,C] = 0)
    const Matrix ada = ad_matrix(a), adc = ad_matrix(c);
    Matrix sys(6, 4);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        sys(i, j) = ada(i, j);
        sys(3 + i, j) = adc(i, j);
      }
    }
    sys(0, 3) = -c.a;
    sys(1, 3) = -c.b;
    sys(2, 3) = -c.c;
    for (const auto& v : nullspace(sys)) {
      if (v[3] == 0) continue;
      const Sp2Element b{v[0] / v[3], v[1] / v[3], v[2] / v[3]};
      ++triples;
      if (commutator(a, b) != c || !commutator(a, c).is_zero() || !commutator(b, c).is_zero())
        o.fail("constructed triple does not satisfy the hypotheses");
      if (!c.is_zero()) o.fail("triple with C != 0");
    }
  }
  // [A,B] = B with B != 0: conjugates of (H/2, X) and (-H/2, Y), B rescaled
  std::size_t conjugates = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix g = oracle::random_gl2(rng);
    const Matrix gi = *inverse(g);
    const bool upper = trial % 2 == 0;
    const Sp2Element a0 = Scalar(upper ? 1 : -1, 2) * Sp2Element::H();
    const Sp2Element b0 = oracle::random_scalar(rng, true) * (upper ? Sp2Element::X() : Sp2Element::Y());
    const auto a = Sp2Element::from_matrix(g * a0.matrix() * gi), b = Sp2Element::from_matrix(g * b0.matrix() * gi);
    const auto r = check_eigenvector_relation(a, b);
    ++conjugates;
    if (a.discriminant() != Scalar(1, 4) || !r.semisimple_half || !r.b_nilpotent)
      o.fail("eigenvector relation flags false for a conjugate pair");
  }
  if (triples == 0) o.fail("no triples with [A,B] = C constructed");
  o.summary = std::to_string(pairs) + " commuting pairs, " + std::to_string(triples) + " triples, " +
              std::to_string(conjugates) + " conjugate pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"Betti numbers of the elementary algebras", betti_regression},
      {"dim Im delta_1 / dim Ker delta_2", span_dimensions},
      {"listed H^2 representatives", representatives},
      {"Heisenberg b_2 formula", heisenberg_formula},
      {"Poisson brackets with I on g_4_1_s", poisson_table},
      {"direct vs Poisson differential, delta^2 = 0", dual_differential},
      {"graded Lie identities of the Poisson bracket", graded_lie},
      {"double extension soundness", extension_soundness},
      {"eight-dimensional classification", classification},
      {"sp(2) commuting pairs, triples and eigenvector pairs", sp2_checks}};
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "AC" << n + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": " << criteria[n].first << " (" << o.summary
              << ", " << ms << " ms)\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    failed += !o.pass;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
