#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superlie/errors.hpp"
#include "superlie/linalg.hpp"
#include "superlie/parity.hpp"
#include "superlie/scalar.hpp"

namespace superlie {

struct BasisElement {
  std::string label;
  Parity parity = Parity::Even;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Ordered homogeneous basis; all even elements precede all odd ones.
class GradedBasis {
public:
  GradedBasis() = default;

  explicit GradedBasis(std::vector<BasisElement> elements) : elements_(std::move(elements)) {
    bool seen_odd = false;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const auto& e = elements_[i];
      if (e.label.empty()) throw InputError("empty basis label");
      if (e.parity == Parity::Odd) {
        seen_odd = true;
        ++odd_dim_;
      } else if (seen_odd) {
        throw InputError("even basis element '" + e.label + "' listed after an odd one");
      }
      for (std::size_t j = 0; j < i; ++j)
        if (elements_[j].label == e.label) throw InputError("duplicate basis label '" + e.label + "'");
    }
  }

  std::size_t dim() const { return elements_.size(); }
  std::size_t even_dim() const { return elements_.size() - odd_dim_; }
  std::size_t odd_dim() const { return odd_dim_; }

  Parity parity(std::size_t i) const { return elements_.at(i).parity; }
  const std::string& label(std::size_t i) const { return elements_.at(i).label; }
  const std::vector<BasisElement>& elements() const { return elements_; }

  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i].label == label) return i;
    return std::nullopt;
  }

  std::size_t index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw InputError("unknown basis label '" + label + "'");
  }

  friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

private:
  std::vector<BasisElement> elements_;
  std::size_t odd_dim_ = 0;
};

/// Coordinates keyed by basis index; zero coefficients are never stored.
using SparseVector = std::map<std::size_t, Scalar>;

inline SparseVector prune(SparseVector v) {
  std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
  return v;
}

struct BracketEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  SparseVector value;
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;  // basis indices
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::size_t> witness, std::string detail = {}) {
    violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }
  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  bool mentions(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }

  std::string describe(const GradedBasis& basis) const {
    std::ostringstream out;
    for (const auto& v : violations) {
      out << v.axiom << " violated";
      if (!v.witness.empty()) {
        out << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          out << (i ? ", " : "") << (v.witness[i] < basis.dim() ? basis.label(v.witness[i]) : std::to_string(v.witness[i]));
        out << ")";
      }
      if (!v.detail.empty()) out << ": " << v.detail;
      out << "\n";
    }
    return out.str();
  }
};

/// Finite-dimensional Lie superalgebra given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k. Only pairs i <= j are stored; the rest
/// follow from [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j].
class LieSuperalgebra {
public:
  LieSuperalgebra() = default;

  LieSuperalgebra(std::string name, GradedBasis basis, const std::vector<BracketEntry>& entries)
      : name_(std::move(name)), basis_(std::move(basis)) {
    const std::size_t d = basis_.dim();
    for (const auto& e : entries) {
      if (e.left >= d || e.right >= d) throw InputError("bracket entry refers to a basis index out of range");
      for (const auto& [k, c] : e.value)
        if (k >= d) throw InputError("bracket value refers to a basis index out of range");
      std::size_t i = e.left, j = e.right;
      SparseVector v = prune(e.value);
      if (i > j) {
        std::swap(i, j);
        const int s = -koszul(basis_.parity(i), basis_.parity(j));
        for (auto& [k, c] : v) c *= s;
      }
      auto [it, inserted] = upper_.emplace(std::make_pair(i, j), v);
      if (!inserted && it->second != v)
        throw InputError("inconsistent brackets given for [" + basis_.label(e.left) + ", " + basis_.label(e.right) + "]");
    }
    std::erase_if(upper_, [](const auto& kv) { return kv.second.empty(); });
  }

  const std::string& name() const { return name_; }
  const GradedBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  Parity parity(std::size_t i) const { return basis_.parity(i); }

  /// [e_i, e_j]
  SparseVector structure(std::size_t i, std::size_t j) const {
    const bool swapped = i > j;
    auto it = upper_.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == upper_.end()) return {};
    SparseVector v = it->second;
    if (swapped) {
      const int s = -koszul(parity(i), parity(j));
      for (auto& [k, c] : v) c *= s;
    }
    return v;
  }

  Vector bracket_basis(std::size_t i, std::size_t j) const {
    Vector out = zero_vector(dim());
    for (const auto& [k, c] : structure(i, j)) out[k] = c;
    return out;
  }

  /// Bilinear extension: sum_{i,j} x_i y_j [e_i, e_j].
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
    if (x.size() != dim() || y.size() != dim())
      throw InputError("bracket: vector length does not match dim " + std::to_string(dim()));
    Vector out = zero_vector(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        Scalar s = x[i] * y[j];
        for (const auto& [k, c] : structure(i, j)) out[k] += s * c;
      }
    }
    return out;
  }

  /// Stored entries (i <= j, nonzero), in index order.
  std::vector<BracketEntry> entries() const {
    std::vector<BracketEntry> out;
    for (const auto& [key, v] : upper_) out.push_back({key.first, key.second, v});
    return out;
  }

  /// Copy with [e_i, e_j] replaced (and [e_j, e_i] adjusted accordingly).
  LieSuperalgebra with_bracket(std::size_t i, std::size_t j, SparseVector value) const {
    std::vector<BracketEntry> es;
    const auto key = i <= j ? std::make_pair(i, j) : std::make_pair(j, i);
    for (const auto& e : entries())
      if (std::make_pair(e.left, e.right) != key) es.push_back(e);
    es.push_back({i, j, std::move(value)});
    return LieSuperalgebra(name_, basis_, es);
  }

  LieSuperalgebra renamed(std::string name) const {
    LieSuperalgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  /// Matrix of ad(e_i); column j holds [e_i, e_j].
  Matrix ad(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : structure(i, j)) m(k, j) = c;
    return m;
  }

  Matrix ad(std::span<const Scalar> x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i] != 0) m = m + x[i] * ad(i);
    return m;
  }

  bool is_abelian() const { return upper_.empty(); }

  /// Same basis and same structure constants; the name is ignored.
  bool same_table(const LieSuperalgebra& other) const {
    return basis_ == other.basis_ && upper_ == other.upper_;
  }

private:
  std::string name_;
  GradedBasis basis_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> upper_;
};

inline LieSuperalgebra make_abelian(std::size_t even_dim, std::size_t odd_dim) {
  std::vector<BasisElement> els;
  for (std::size_t i = 0; i < even_dim; ++i) els.push_back({"a" + std::to_string(i + 1), Parity::Even});
  for (std::size_t i = 0; i < odd_dim; ++i) els.push_back({"b" + std::to_string(i + 1), Parity::Odd});
  return LieSuperalgebra("abelian(" + std::to_string(even_dim) + "|" + std::to_string(odd_dim) + ")",
                         GradedBasis(std::move(els)), {});
}

inline ValidationReport validate_grading_and_skew(const LieSuperalgebra& g) {
  ValidationReport report;
  for (const auto& e : g.entries()) {
    const Parity target = g.parity(e.left) + g.parity(e.right);
    for (const auto& [k, c] : e.value)
      if (g.parity(k) != target)
        report.add("grading", {e.left, e.right, k},
                   "bracket of " + std::string(to_string(g.parity(e.left))) + " and " +
                       to_string(g.parity(e.right)) + " elements has a component along " + to_string(g.parity(k)) +
                       " element " + g.basis().label(k));
    if (e.left == e.right && g.parity(e.left) == Parity::Even)
      report.add("skew-supersymmetry", {e.left, e.left}, "[X, X] must vanish for even X");
  }
  return report;
}

/// (-1)^{zx}[[X,Y],Z] + (-1)^{xy}[[Y,Z],X] + (-1)^{yz}[[Z,X],Y] for basis elements.
inline Vector jacobiator(const LieSuperalgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  const Parity x = g.parity(i), y = g.parity(j), z = g.parity(k);
  const std::size_t d = g.dim();
  Vector out = zero_vector(d);
  auto accumulate = [&](int sign, std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [t, coeff] : g.structure(a, b))
      for (const auto& [u, coeff2] : g.structure(t, c)) out[u] += sign * coeff * coeff2;
  };
  accumulate(koszul(z, x), i, j, k);
  accumulate(koszul(x, y), j, k, i);
  accumulate(koszul(y, z), k, i, j);
  return out;
}

/// Every basis triple i <= j <= k with a nonzero jacobiator. Given
/// skew-supersymmetry, the other orderings of a triple differ only by sign.
inline ValidationReport validate_super_jacobi(const LieSuperalgebra& g) {
  ValidationReport report;
  const std::size_t d = g.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t k = j; k < d; ++k)
        if (!is_zero(jacobiator(g, i, j, k))) report.add("super Jacobi identity", {i, j, k});
  return report;
}

inline ValidationReport validate_lie_superalgebra(const LieSuperalgebra& g) {
  ValidationReport r = validate_grading_and_skew(g);
  r.append(validate_super_jacobi(g));
  return r;
}

/// span{[u, v] : u in a, v in b}
inline Subspace bracket_span(const LieSuperalgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> rows;
  const auto ua = a.basis();
  const auto ub = b.basis();
  for (const auto& u : ua)
    for (const auto& v : ub) {
      Vector w = g.bracket(u, v);
      if (!is_zero(w)) rows.push_back(std::move(w));
    }
  return Subspace(g.dim(), rows);
}

inline bool is_graded(const LieSuperalgebra& g, const Subspace& s) {
  // The RREF of a graded subspace consists of homogeneous rows.
  for (const auto& v : s.basis()) {
    bool even = false, odd = false;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) (g.parity(i) == Parity::Even ? even : odd) = true;
    if (even && odd) return false;
  }
  return true;
}

inline bool is_ideal(const LieSuperalgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::whole(g.dim()), s));
}

/// g, [g,g], [[g,g],[g,g]], ... up to and including the first repeated term.
inline std::vector<Subspace> derived_series(const LieSuperalgebra& g) {
  std::vector<Subspace> series{Subspace::whole(g.dim())};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    const bool stable = next.dim() == series.back().dim();
    if (stable) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_solvable(const LieSuperalgebra& g) { return derived_series(g).back().is_zero(); }

/// {z : [z, e_j] = 0 for all j}. Solved separately on each parity block, so
/// every returned row is homogeneous.
inline Subspace center(const LieSuperalgebra& g) {
  const std::size_t d = g.dim();
  std::vector<Vector> rows;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < d; ++i)
      if (g.parity(i) == p) cols.push_back(i);
    if (cols.empty()) continue;
    // Equations indexed by (j, k): sum_i x_i c_ij^k = 0.
    Matrix m(d * d, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [k, coeff] : g.structure(cols[c], j)) m(j * d + k, c) = coeff;
    for (const auto& sol : nullspace(m)) {
      Vector v = zero_vector(d);
      for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = sol[c];
      rows.push_back(std::move(v));
    }
  }
  return Subspace(d, rows);
}

}  // namespace superlie
