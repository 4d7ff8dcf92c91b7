#pragma once

// sp(2) = sl(2) elements ((a, b), (c, -a)) with the structural checks used on them.
// Basis H = ((1,0),(0,-1)), X = ((0,1),(0,0)), Y = ((0,0),(1,0)).

#include <optional>

#include "superlie/linalg.hpp"

namespace superlie {

struct Sp2Element {
  Scalar a, b, c;

  static Sp2Element H() { return {1, 0, 0}; }
  static Sp2Element X() { return {0, 1, 0}; }
  static Sp2Element Y() { return {0, 0, 1}; }

  static Sp2Element from_matrix(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw InputError("sp(2) element must be 2x2");
    if (m(0, 0) + m(1, 1) != 0) throw InputError("sp(2) element must be trace-free");
    return {m(0, 0), m(0, 1), m(1, 0)};
  }

  Matrix matrix() const {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = -a;
    return m;
  }

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  Scalar discriminant() const { return a * a + b * c; }

  friend Sp2Element operator+(const Sp2Element& x, const Sp2Element& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
  friend Sp2Element operator-(const Sp2Element& x, const Sp2Element& y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }
  friend Sp2Element operator*(const Scalar& s, const Sp2Element& x) { return {s * x.a, s * x.b, s * x.c}; }
  friend bool operator==(const Sp2Element&, const Sp2Element&) = default;
};

enum class Sp2Kind { Zero, Nilpotent, Semisimple };

struct Sp2Class {
  Sp2Kind kind;
  Scalar discriminant;  // eigenvalues are ±sqrt(discriminant)
};

inline Sp2Class classify(const Sp2Element& x) {
  if (x.is_zero()) return {Sp2Kind::Zero, 0};
  const Scalar d = x.discriminant();
  return {d == 0 ? Sp2Kind::Nilpotent : Sp2Kind::Semisimple, d};
}

/// [A, B] = (bc' - b'c) H + 2(ab' - a'b) X - 2(ac' - a'c) Y
inline Sp2Element commutator(const Sp2Element& x, const Sp2Element& y) {
  return {x.b * y.c - y.b * x.c, 2 * (x.a * y.b - y.a * x.b), -2 * (x.a * y.c - y.a * x.c)};
}

/// AB - BA through 2x2 matrix products.
inline Sp2Element commutator_by_matrices(const Sp2Element& x, const Sp2Element& y) {
  return Sp2Element::from_matrix(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

struct DependenceCertificate {
  bool dependent = false;
  Scalar mu, nu;  // mu A + nu B = 0, (mu, nu) != 0
};

/// For commuting A, B returns a rational certificate of linear dependence.
inline DependenceCertificate check_commuting_dependence(const Sp2Element& x, const Sp2Element& y) {
  if (!commutator(x, y).is_zero()) throw PreconditionError("elements do not commute");
  if (x.is_zero()) return {true, 1, 0};
  const Scalar t = x.a != 0 ? y.a / x.a : x.b != 0 ? y.b / x.b : y.c / x.c;
  if (t * x == y) return {true, t, -1};
  return {false, 0, 0};
}

struct EigenRelation {
  bool semisimple_half = false;  // eigenvalues ±1/2
  bool b_nilpotent = false;
};

/// For B != 0 with [A, B] = B.
inline EigenRelation check_eigenvector_relation(const Sp2Element& x, const Sp2Element& y) {
  if (y.is_zero()) throw PreconditionError("B must be non-zero");
  if (commutator(x, y) != y) throw PreconditionError("[A, B] != B");
  return {classify(x).kind == Sp2Kind::Semisimple && x.discriminant() == Scalar(1, 4),
          classify(y).kind == Sp2Kind::Nilpotent};
}

/// Rational square root, if there is one.
inline std::optional<Scalar> rational_sqrt(const Scalar& s) {
  if (s < 0) return std::nullopt;
  const Integer n = numerator(s), d = denominator(s);
  const Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Scalar(rn, rd);
}

struct Sp2NormalForm {
  Sp2Element form;  // diag(r, -r), or ((0, t), (0, 0))
  Matrix change;    // det 1, change^{-1} A change = form
};

/// Diagonal or strictly upper triangular normal form under SL(2)
/// conjugation. None when the eigenvalues are irrational.
inline std::optional<Sp2NormalForm> normal_form(const Sp2Element& x) {
  const Sp2Class k = classify(x);
  const Matrix a = x.matrix();
  auto make = [](const Vector& u, const Vector& v) {
    Matrix p(2, 2);
    p(0, 0) = u[0];
    p(1, 0) = u[1];
    p(0, 1) = v[0];
    p(1, 1) = v[1];
    return p;
  };
  auto det = [](const Matrix& p) { return p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0); };
  if (k.kind == Sp2Kind::Zero) return Sp2NormalForm{x, Matrix::identity(2)};
  if (k.kind == Sp2Kind::Nilpotent) {
    Vector v = unit_vector(2, 0);
    if (is_zero(a.apply(v))) v = unit_vector(2, 1);
    Vector w = a.apply(v);
    Matrix p = make(w, v);
    const Scalar d = det(p);
    for (auto& e : w) e /= d;
    return Sp2NormalForm{{0, d, 0}, make(w, v)};
  }
  const auto r = rational_sqrt(k.discriminant);
  if (!r) return std::nullopt;
  auto eigenvector = [&](const Scalar& lambda) {
    Matrix s = a - lambda * Matrix::identity(2);
    return nullspace(s).front();
  };
  const Vector u = eigenvector(*r);
  Vector v = eigenvector(-*r);
  const Scalar d = det(make(u, v));
  for (auto& e : v) e /= d;
  return Sp2NormalForm{{*r, 0, 0}, make(u, v)};
}

}  // namespace superlie
