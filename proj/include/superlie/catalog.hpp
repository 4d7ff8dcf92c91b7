#pragma once

// Built-in algebras: Heisenberg superalgebras, the three elementary quadratic
// Lie superalgebras, the 6-dimensional indecomposable solvable quadratic Lie
// algebras, and the 8-dimensional solvable quadratic Lie superalgebras with
// 6-dimensional indecomposable even part.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superlie/extensions.hpp"

namespace superlie {

using ParamMap = std::map<std::string, Scalar>;

struct CatalogParam {
  std::string name;
  Scalar default_value;
  std::string constraint;  // human readable; empty when unconstrained
};

struct CatalogEntry {
  std::string key;
  std::string summary;
  std::vector<CatalogParam> params;
  std::string constraint;  // joint constraint, if any
  bool quadratic = true;
};

/// Documented 1-dimensional double extension data: one_dim_double_extension
/// of base by derivation, with new elements e_label and f_label, reproduces
/// the catalog table after reordering to the catalog labels.
struct ExtensionRecipe {
  QuadraticLieSuperalgebra base;
  Matrix derivation;
  std::string e_label;
  std::string f_label;
};

namespace catalog_detail {

using Table = std::vector<std::tuple<std::string, std::string, std::vector<std::pair<Scalar, std::string>>>>;

inline GradedBasis basis_of(const std::vector<std::string>& even, const std::vector<std::string>& odd) {
  std::vector<BasisElement> e;
  for (const auto& l : even) e.push_back({l, Parity::Even});
  for (const auto& l : odd) e.push_back({l, Parity::Odd});
  return GradedBasis(std::move(e));
}

inline std::vector<BracketEntry> entries_of(const GradedBasis& b, const Table& t) {
  std::vector<BracketEntry> out;
  for (const auto& [l, r, terms] : t) {
    SparseVector v;
    for (const auto& [c, lab] : terms) v[b.index_of(lab)] += c;
    out.push_back({b.index_of(l), b.index_of(r), prune(v)});
  }
  return out;
}

inline BilinearForm form_of(const GradedBasis& b, const std::vector<std::tuple<std::string, std::string, Scalar>>& f) {
  std::vector<FormEntry> e;
  for (const auto& [l, r, v] : f) e.push_back({b.index_of(l), b.index_of(r), v});
  return BilinearForm::from_entries(b, e);
}

/// Completes a table whose even-even and even-odd brackets are known by the
/// odd-odd brackets forced by invariance of a non-degenerate even form:
/// B([a,b], e_m) = B(a, [b, e_m]) for every even e_m.
inline LieSuperalgebra solve_odd_brackets(const LieSuperalgebra& partial, const BilinearForm& form) {
  const auto& b = partial.basis();
  const std::size_t m = b.even_dim(), n = b.dim();
  Matrix g0(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g0(i, j) = form(i, j);
  const auto inv = inverse(g0.transpose());
  if (!inv) throw PreconditionError("even part of the form is degenerate");
  std::vector<BracketEntry> entries = partial.entries();
  std::erase_if(entries, [&](const BracketEntry& e) {
    return b.parity(e.left) == Parity::Odd && b.parity(e.right) == Parity::Odd;
  });
  for (std::size_t a = m; a < n; ++a)
    for (std::size_t c = a; c < n; ++c) {
      Vector rhs = zero_vector(m);
      for (std::size_t k = 0; k < m; ++k)
        for (const auto& [t, v] : partial.structure(c, k)) rhs[k] += v * form(a, t);
      const Vector beta = inv->apply(rhs);
      SparseVector v;
      for (std::size_t k = 0; k < m; ++k)
        if (beta[k] != 0) v[k] = beta[k];
      if (!v.empty()) entries.push_back({a, c, v});
    }
  return LieSuperalgebra(partial.name(), b, entries);
}

inline const std::vector<std::string>& g6_labels() {
  static const std::vector<std::string> l{"Z1", "Z2", "Z3", "X1", "X2", "X3"};
  return l;
}

inline std::vector<std::tuple<std::string, std::string, Scalar>> g6_form() {
  return {{"X1", "Z1", 1}, {"X2", "Z2", 1}, {"X3", "Z3", 1}};
}

inline Table g6_table(int which, const Scalar& lambda) {
  switch (which) {
    case 1:
      return {{"X1", "X2", {{1, "Z3"}}}, {"X2", "X3", {{1, "Z1"}}}, {"X3", "X1", {{1, "Z2"}}}};
    case 2:
      return {{"X3", "Z1", {{1, "Z1"}}},   {"X3", "Z2", {{lambda, "Z2"}}},  {"X3", "X1", {{-1, "X1"}}},
              {"X3", "X2", {{-lambda, "X2"}}}, {"Z1", "X1", {{1, "Z3"}}}, {"Z2", "X2", {{lambda, "Z3"}}}};
    default:
      return {{"X3", "Z1", {{1, "Z1"}}},
              {"X3", "Z2", {{1, "Z1"}, {1, "Z2"}}},
              {"X3", "X1", {{-1, "X1"}, {-1, "X2"}}},
              {"X3", "X2", {{-1, "X2"}}},
              {"Z1", "X1", {{1, "Z3"}}},
              {"Z2", "X1", {{1, "Z3"}}},
              {"Z2", "X2", {{1, "Z3"}}}};
  }
}

/// ad(X)|_{odd} as a 2x2 matrix on (Y, T), columns are images.
struct OddAction {
  std::string even;
  Scalar m00, m01, m10, m11;
};

inline Table odd_table(const std::vector<OddAction>& acts) {
  Table t;
  for (const auto& a : acts) {
    std::vector<std::pair<Scalar, std::string>> y, tt;
    if (a.m00 != 0) y.push_back({a.m00, "Y"});
    if (a.m10 != 0) y.push_back({a.m10, "T"});
    if (a.m01 != 0) tt.push_back({a.m01, "Y"});
    if (a.m11 != 0) tt.push_back({a.m11, "T"});
    if (!y.empty()) t.push_back({a.even, "Y", y});
    if (!tt.empty()) t.push_back({a.even, "T", tt});
  }
  return t;
}

inline AlgebraWithForm g8(const std::string& name, int base, const Scalar& lambda, const std::vector<OddAction>& acts) {
  const GradedBasis b = basis_of(g6_labels(), {"Y", "T"});
  Table t = g6_table(base, lambda);
  for (auto& e : odd_table(acts)) t.push_back(e);
  auto f = g6_form();
  f.emplace_back("Y", "T", 1);
  const BilinearForm form = form_of(b, f);
  return {solve_odd_brackets(LieSuperalgebra(name, b, entries_of(b, t)), form), form};
}

inline Scalar integer_param(const ParamMap& p, const std::string& name) {
  const Scalar v = p.at(name);
  if (denominator(v) != 1 || v < 0) throw InputError("parameter " + name + " must be a non-negative integer");
  return v;
}

inline void require_nonzero(const ParamMap& p, const std::string& name) {
  if (p.at(name) == 0) throw InputError("parameter " + name + " must be non-zero");
}

struct Registered {
  CatalogEntry entry;
  std::function<AlgebraWithForm(const ParamMap&)> build;
};

inline AlgebraWithForm heisenberg(const ParamMap& p) {
  if (integer_param(p, "n") > 256 || integer_param(p, "m") > 256)
    throw ResourceError("Heisenberg parameters above 256 are not supported");
  const auto n = static_cast<std::size_t>(integer_param(p, "n"));
  const auto m = static_cast<std::size_t>(integer_param(p, "m"));
  std::vector<std::string> even{"Z"}, odd;
  for (std::size_t i = 1; i <= 2 * n; ++i) even.push_back("X" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) odd.push_back("Y" + std::to_string(j));
  const GradedBasis b = basis_of(even, odd);
  Table t;
  for (std::size_t i = 1; i <= n; ++i) t.push_back({"X" + std::to_string(i), "X" + std::to_string(n + i), {{1, "Z"}}});
  for (std::size_t j = 1; j <= m; ++j) t.push_back({"Y" + std::to_string(j), "Y" + std::to_string(j), {{1, "Z"}}});
  return {LieSuperalgebra("h(" + std::to_string(2 * n + 1) + "," + std::to_string(m) + ")", b, entries_of(b, t)),
          std::nullopt};
}

inline AlgebraWithForm elementary(const std::string& name, const std::vector<std::string>& odd, const Table& t,
                                 const std::vector<std::tuple<std::string, std::string, Scalar>>& f) {
  const GradedBasis b = basis_of({"X0", "Y0"}, odd);
  return {LieSuperalgebra(name, b, entries_of(b, t)), form_of(b, f)};
}

inline AlgebraWithForm g6(const std::string& name, int which, const Scalar& lambda) {
  const GradedBasis b = basis_of(g6_labels(), {});
  return {LieSuperalgebra(name, b, entries_of(b, g6_table(which, lambda))), form_of(b, g6_form())};
}

inline std::string fmt(const Scalar& s) { return to_string(s); }

inline const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = [] {
    std::vector<Registered> v;
    const Scalar half(1, 2);
    v.push_back({{"heisenberg", "Heisenberg Lie superalgebra h(2n+1,m): [X_i,X_{n+i}] = Z, [Y_j,Y_j] = Z",
                  {{"n", 1, "non-negative integer"}, {"m", 1, "non-negative integer"}}, "", false},
                 heisenberg});
    v.push_back({{"g_4_1_s", "elementary, dim 4: [Y1,Y1] = -2X0, [Y0,Y1] = -2X1", {}, "", true}, [](const ParamMap&) {
                   return elementary("g_4_1_s", {"X1", "Y1"},
                                     {{"Y1", "Y1", {{-2, "X0"}}}, {"Y0", "Y1", {{-2, "X1"}}}},
                                     {{"X0", "Y0", 1}, {"X1", "Y1", 1}});
                 }});
    v.push_back({{"g_4_2_s", "elementary, dim 4: [X1,Y1] = X0, [Y0,X1] = X1, [Y0,Y1] = -Y1", {}, "", true},
                 [](const ParamMap&) {
                   return elementary("g_4_2_s", {"X1", "Y1"},
                                     {{"X1", "Y1", {{1, "X0"}}}, {"Y0", "X1", {{1, "X1"}}}, {"Y0", "Y1", {{-1, "Y1"}}}},
                                     {{"X0", "Y0", 1}, {"X1", "Y1", 1}});
                 }});
    v.push_back({{"g_6_s", "elementary, dim 6: [Z1,T1] = -X0, [Y0,Z1] = -Y1, [Y0,T1] = -X1", {}, "", true},
                 [](const ParamMap&) {
                   return elementary("g_6_s", {"X1", "Y1", "Z1", "T1"},
                                     {{"Z1", "T1", {{-1, "X0"}}}, {"Y0", "Z1", {{-1, "Y1"}}}, {"Y0", "T1", {{-1, "X1"}}}},
                                     {{"X0", "Y0", 1}, {"X1", "Z1", 1}, {"Y1", "T1", 1}});
                 }});
    v.push_back({{"g_6_1", "6-dim quadratic Lie algebra: [X1,X2] = Z3, [X2,X3] = Z1, [X3,X1] = Z2", {}, "", true},
                 [](const ParamMap&) { return g6("g_6_1", 1, 0); }});
    v.push_back({{"g_6_2", "6-dim quadratic Lie algebra, diagonal action of X3 with weights 1, lambda",
                  {{"lambda", 1, "non-zero"}}, "", true},
                 [](const ParamMap& p) {
                   require_nonzero(p, "lambda");
                   return g6("g_6_2(" + fmt(p.at("lambda")) + ")", 2, p.at("lambda"));
                 }});
    v.push_back({{"g_6_3", "6-dim quadratic Lie algebra, Jordan block action of X3", {}, "", true},
                 [](const ParamMap&) { return g6("g_6_3", 3, 0); }});
    v.push_back({{"g_8_2_1_s", "even part g_6_1, X_i act diagonally on (Y,T) with weights lambda, mu, nu",
                  {{"lambda", 1, ""}, {"mu", 0, ""}, {"nu", 0, ""}}, "lambda, mu, nu not all zero", true},
                 [](const ParamMap& p) {
                   const Scalar l = p.at("lambda"), m = p.at("mu"), n = p.at("nu");
                   if (l == 0 && m == 0 && n == 0) throw InputError("lambda, mu, nu must not all be zero");
                   return g8("g_8_2_1_s(" + fmt(l) + "," + fmt(m) + "," + fmt(n) + ")", 1, 0,
                             {{"X1", l, 0, 0, -l}, {"X2", m, 0, 0, -m}, {"X3", n, 0, 0, -n}});
                 }});
    v.push_back({{"g_8_2_2_s", "even part g_6_1, X3, X1, X2 act nilpotently: T -> Y, lambda Y, mu Y",
                  {{"lambda", 0, ""}, {"mu", 0, ""}}, "", true},
                 [](const ParamMap& p) {
                   const Scalar l = p.at("lambda"), m = p.at("mu");
                   return g8("g_8_2_2_s(" + fmt(l) + "," + fmt(m) + ")", 1, 0,
                             {{"X3", 0, 1, 0, 0}, {"X1", 0, l, 0, 0}, {"X2", 0, m, 0, 0}});
                 }});
    v.push_back({{"g_8_2_3_s", "even part g_6_2(lambda), X3 acts on (Y,T) by T -> Y", {{"lambda", 1, "non-zero"}}, "",
                  true},
                 [](const ParamMap& p) {
                   require_nonzero(p, "lambda");
                   const Scalar l = p.at("lambda");
                   return g8("g_8_2_3_s(" + fmt(l) + ")", 2, l, {{"X3", 0, 1, 0, 0}});
                 }});
    v.push_back({{"g_8_2_4_s", "even part g_6_2(lambda), X3 acts on (Y,T) by diag(mu, -mu)",
                  {{"lambda", 1, "non-zero"}, {"mu", 1, "non-zero"}}, "", true},
                 [](const ParamMap& p) {
                   require_nonzero(p, "lambda");
                   require_nonzero(p, "mu");
                   const Scalar l = p.at("lambda"), m = p.at("mu");
                   return g8("g_8_2_4_s(" + fmt(l) + "," + fmt(m) + ")", 2, l, {{"X3", m, 0, 0, -m}});
                 }});
    v.push_back({{"g_8_2_5_s", "even part g_6_2(lambda), X3 acts by diag(1/2, -1/2), Z1 by T -> Y",
                  {{"lambda", 1, "non-zero"}}, "", true},
                 [half](const ParamMap& p) {
                   require_nonzero(p, "lambda");
                   const Scalar l = p.at("lambda");
                   return g8("g_8_2_5_s(" + fmt(l) + ")", 2, l, {{"X3", half, 0, 0, -half}, {"Z1", 0, 1, 0, 0}});
                 }});
    v.push_back({{"g_8_2_6_s", "even part g_6_2(1), X3 acts by diag(1/2, -1/2), Z1 by T -> Y, Z2 by T -> mu Y",
                  {{"lambda", 1, "equal to 1"}, {"mu", 1, "non-zero"}}, "", true},
                 [half](const ParamMap& p) {
                   if (p.at("lambda") != 1) throw InputError("parameter lambda must be 1 for the super Jacobi identity to hold");
                   require_nonzero(p, "mu");
                   const Scalar m = p.at("mu");
                   return g8("g_8_2_6_s(1," + fmt(m) + ")", 2, 1,
                             {{"X3", half, 0, 0, -half}, {"Z1", 0, 1, 0, 0}, {"Z2", 0, m, 0, 0}});
                 }});
    v.push_back({{"g_8_2_7_s", "even part g_6_3, X3 acts on (Y,T) by T -> Y", {}, "", true}, [](const ParamMap&) {
                   return g8("g_8_2_7_s", 3, 0, {{"X3", 0, 1, 0, 0}});
                 }});
    v.push_back({{"g_8_2_8_s", "even part g_6_3, X3 acts on (Y,T) by diag(lambda, -lambda)",
                  {{"lambda", 1, "non-zero"}}, "", true},
                 [](const ParamMap& p) {
                   require_nonzero(p, "lambda");
                   const Scalar l = p.at("lambda");
                   return g8("g_8_2_8_s(" + fmt(l) + ")", 3, 0, {{"X3", l, 0, 0, -l}});
                 }});
    v.push_back({{"g_8_2_9_s", "even part g_6_3, X3 acts by diag(1/2, -1/2), Z2 by T -> Y", {}, "", true},
                 [half](const ParamMap&) {
                   return g8("g_8_2_9_s", 3, 0, {{"X3", half, 0, 0, -half}, {"Z2", 0, 1, 0, 0}});
                 }});
    v.push_back({{"decomposable", "g_6_<base> plus a 2-dim symplectic odd part with [even, odd] = 0",
                  {{"base", 1, "1, 2 or 3"}, {"lambda", 1, "non-zero, used when base = 2"}}, "", true},
                 [](const ParamMap& p) {
                   const Scalar base = p.at("base");
                   if (base != 1 && base != 2 && base != 3) throw InputError("parameter base must be 1, 2 or 3");
                   const int which = static_cast<int>(numerator(base));
                   if (which == 2) require_nonzero(p, "lambda");
                   const Scalar l = which == 2 ? p.at("lambda") : Scalar(0);
                   std::string name = "decomposable(g_6_" + std::to_string(which);
                   if (which == 2) name += "(" + fmt(l) + ")";
                   return g8(name + ")", which, l, {});
                 }});
    return v;
  }();
  return r;
}

inline const Registered& find(const std::string& key) {
  for (const auto& r : registry())
    if (r.entry.key == key) return r;
  throw InputError("unknown catalog key '" + key + "'");
}

inline ParamMap resolve(const CatalogEntry& e, const ParamMap& given) {
  ParamMap p;
  for (const auto& param : e.params) p[param.name] = param.default_value;
  for (const auto& [k, v] : given) {
    if (!p.count(k)) throw InputError("unknown parameter '" + k + "' for " + e.key);
    p[k] = v;
  }
  return p;
}

}  // namespace catalog_detail

inline std::vector<CatalogEntry> catalog_list() {
  std::vector<CatalogEntry> out;
  for (const auto& r : catalog_detail::registry()) out.push_back(r.entry);
  return out;
}

inline AlgebraWithForm catalog_build(const std::string& key, const ParamMap& params = {}) {
  const auto& r = catalog_detail::find(key);
  return r.build(catalog_detail::resolve(r.entry, params));
}

inline QuadraticLieSuperalgebra catalog_build_quadratic(const std::string& key, const ParamMap& params = {}) {
  return catalog_build(key, params).quadratic();
}

/// Extension data for the families given as 1-dimensional double extensions
/// of the abelian span{Z1, Z2, X1, X2} ⊕ span{Y, T} by ad(X3): g_8_2_3_s,
/// g_8_2_4_s, g_8_2_7_s, g_8_2_8_s. The derivation acts on (Z1, Z2, X1, X2, Y, T).
inline ExtensionRecipe catalog_extension_recipe(const std::string& key, const ParamMap& params = {}) {
  const auto& r = catalog_detail::find(key);
  const ParamMap p = catalog_detail::resolve(r.entry, params);
  r.build(p);  // parameter validation
  const GradedBasis b = catalog_detail::basis_of({"Z1", "Z2", "X1", "X2"}, {"Y", "T"});
  const BilinearForm form = catalog_detail::form_of(b, {{"X1", "Z1", 1}, {"X2", "Z2", 1}, {"Y", "T", 1}});
  QuadraticLieSuperalgebra base(LieSuperalgebra("q0+g1", b, {}), form);
  Matrix d(6, 6);
  if (key == "g_8_2_3_s" || key == "g_8_2_4_s") {
    const Scalar l = p.at("lambda");
    d(0, 0) = 1;
    d(1, 1) = l;
    d(2, 2) = -1;
    d(3, 3) = -l;
  } else if (key == "g_8_2_7_s" || key == "g_8_2_8_s") {
    d(0, 0) = 1;
    d(0, 1) = 1;
    d(1, 1) = 1;
    d(2, 2) = -1;
    d(3, 2) = -1;
    d(3, 3) = -1;
  } else {
    throw InputError("no extension recipe is recorded for '" + key + "'");
  }
  if (key == "g_8_2_3_s" || key == "g_8_2_7_s") {
    d(4, 5) = 1;
  } else {
    const Scalar s = key == "g_8_2_4_s" ? p.at("mu") : p.at("lambda");
    d(4, 4) = s;
    d(5, 5) = -s;
  }
  return {std::move(base), std::move(d), "X3", "Z3"};
}

}  // namespace superlie
