// Walk through g_4_1_s: validate, print the 3-form, a few Poisson brackets,
// H^2 with representatives, then a double extension by a derivation.

#include <iostream>

#include "superlie/superlie.hpp"

using namespace superlie;

int main() {
  const QuadraticLieSuperalgebra q = catalog_build_quadratic("g_4_1_s");
  const auto& b = q.basis();
  std::cout << q.name() << ": " << (validate_full(q).ok() ? "valid" : "INVALID") << "\n";

  const PoissonDifferential delta(q);
  std::cout << "I = " << format_cochain(b, delta.three_form()) << "\n";
  for (const char* lit : {"e(X0)", "e(Y0)", "s(X1)", "s(X1,X1)"}) {
    const Cochain a = parse_cochain(b, lit);
    std::cout << "delta " << lit << " = " << format_cochain(b, delta(a)) << "\n";
  }

  for (const auto& r : betti_table(q, 2)) {
    std::cout << "b_" << r.degree << " = " << r.betti << "\n";
    for (const auto& rep : r.representatives) std::cout << "    [" << format_cochain(b, rep) << "]\n";
  }

  // Skew superderivations of degree 0, first basis element: extend by it.
  const auto ders = skew_superderivation_space(q, Parity::Even);
  std::cout << ders.size() << " independent even skew superderivations\n";
  if (!ders.empty()) {
    const auto ext = one_dim_double_extension(q, ders.front().matrix, "e", "f", "g_4_1_s+");
    std::cout << ext.name() << " (dim " << ext.dim() << "): "
              << (validate_full(ext).ok() ? "valid" : "INVALID") << ", b_2 = " << cohomology(ext, 2).betti << "\n";
  }
}
