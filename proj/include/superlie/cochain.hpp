#pragma once

// The super-exterior algebra C(g) = Alt(g0*) ⊗ Sym(g1*).
//
// Monomials are stored over the algebra's own dual basis, using the global
// basis indices. Evaluation convention: a monomial
//   a_{i1} ∧ ... ∧ a_{ip} ⊗ b_{j1} ... b_{jq}
// evaluated on the canonical tuple (e_{i1},...,e_{ip}, e_{j1},...,e_{jq})
// gives prod_j (multiplicity of j)!, i.e. symmetric factors are summed over
// all permutations with no 1/q! normalization. Other argument orders follow
// from super-alternation: swapping adjacent u, v multiplies by -(-1)^{|u||v|}.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superlie/algebra.hpp"

namespace superlie {

using Index = std::uint32_t;

struct Monomial {
  std::vector<Index> even;  // strictly increasing
  std::vector<Index> odd;   // weakly increasing

  std::size_t degree() const { return even.size() + odd.size(); }
  Parity parity() const { return parity_of(static_cast<long long>(odd.size())); }

  /// Order: total degree, then even length, then lexicographic.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.even.size() <=> b.even.size(); c != 0) return c;
    if (auto c = a.even <=> b.even; c != 0) return c;
    return a.odd <=> b.odd;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// prod_j (multiplicity of j in odd)!
inline Integer symmetric_weight(const Monomial& m) {
  Integer w = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= m.odd.size(); ++i) {
    if (i < m.odd.size() && m.odd[i] == m.odd[i - 1]) {
      ++run;
      w *= run;
    } else {
      run = 1;
    }
  }
  return w;
}

/// Sorts even indices into increasing order. Returns the permutation sign, or
/// 0 if an index repeats.
inline int sort_alternating(std::vector<Index>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

class Cochain {
public:
  using Terms = std::map<Monomial, Scalar>;

  Cochain() = default;
  Cochain(const Monomial& m, const Scalar& c) { add(m, c); }

  static Cochain unit() { return Cochain(Monomial{}, Scalar(1)); }

  /// The dual basis form e_i^*.
  static Cochain dual(const GradedBasis& basis, std::size_t i) {
    Monomial m;
    (basis.parity(i) == Parity::Even ? m.even : m.odd).push_back(static_cast<Index>(i));
    return Cochain(m, Scalar(1));
  }

  void add(const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Terms of total degree k.
  Cochain component(std::size_t k) const {
    Cochain out;
    for (const auto& [m, c] : terms_)
      if (m.degree() == k) out.terms_.emplace(m, c);
    return out;
  }

  /// Bidegree (total degree, Z2 degree) if every term shares it.
  std::optional<std::pair<std::size_t, Parity>> bidegree() const {
    if (terms_.empty()) return std::nullopt;
    auto first = std::make_pair(terms_.begin()->first.degree(), terms_.begin()->first.parity());
    for (const auto& [m, c] : terms_)
      if (m.degree() != first.first || m.parity() != first.second) return std::nullopt;
    return first;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out;
    for (const auto& [m, c] : terms_)
      if (out.empty() || out.back() != m.degree()) out.push_back(m.degree());
    return out;
  }

  Cochain& operator+=(const Cochain& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator-(Cochain a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Cochain operator*(const Scalar& s, Cochain a) {
    if (s == 0) return Cochain{};
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const Cochain&, const Cochain&) = default;

private:
  Terms terms_;
};

/// Checks that every index of A is a basis index of the right parity.
inline void check_compatible(const GradedBasis& basis, const Cochain& a) {
  for (const auto& [m, c] : a.terms()) {
    for (Index i : m.even)
      if (i >= basis.dim() || basis.parity(i) != Parity::Even)
        throw InputError("cochain uses index " + std::to_string(i) + " which is not an even basis element");
    for (Index i : m.odd)
      if (i >= basis.dim() || basis.parity(i) != Parity::Odd)
        throw InputError("cochain uses index " + std::to_string(i) + " which is not an odd basis element");
  }
}

/// (Ω⊗F) ∧ (Ω'⊗F') = (-1)^{f ω'} (Ω∧Ω') ⊗ FF'
inline Cochain wedge(const Cochain& a, const Cochain& b) {
  Cochain out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m;
      m.even = ma.even;
      m.even.insert(m.even.end(), mb.even.begin(), mb.even.end());
      int s = sort_alternating(m.even);
      if (s == 0) continue;
      if ((ma.odd.size() * mb.even.size()) % 2) s = -s;
      m.odd = ma.odd;
      m.odd.insert(m.odd.end(), mb.odd.begin(), mb.odd.end());
      std::sort(m.odd.begin(), m.odd.end());
      out.add(m, s * ca * cb);
    }
  return out;
}

inline Cochain wedge(std::initializer_list<Cochain> factors) {
  Cochain out = Cochain::unit();
  for (const auto& f : factors) out = wedge(out, f);
  return out;
}

/// Contraction i_X for the basis element X = e_t: inserts X into the first
/// argument slot. This is a superderivation of bidegree (-1, |X|):
///   i_X(A ∧ A') = i_X(A) ∧ A' + (-1)^{a + |X| b} A ∧ i_X(A')
/// for A of total degree a and Z2 degree b. On Ω⊗F it reads
///   even X:  i_X(Ω) ⊗ F
///   odd X:   (-1)^{deg Ω} Ω ⊗ ∂F/∂X*
inline Cochain contract(const GradedBasis& basis, std::size_t t, const Cochain& a) {
  if (t >= basis.dim()) throw InputError("contraction index out of range");
  const Index ti = static_cast<Index>(t);
  Cochain out;
  if (basis.parity(t) == Parity::Even) {
    for (const auto& [m, c] : a.terms()) {
      auto it = std::find(m.even.begin(), m.even.end(), ti);
      if (it == m.even.end()) continue;
      const auto pos = static_cast<std::size_t>(it - m.even.begin());
      Monomial r = m;
      r.even.erase(r.even.begin() + static_cast<std::ptrdiff_t>(pos));
      out.add(r, sign_of(static_cast<long long>(pos)) * c);
    }
  } else {
    for (const auto& [m, c] : a.terms()) {
      const auto mult = std::count(m.odd.begin(), m.odd.end(), ti);
      if (mult == 0) continue;
      Monomial r = m;
      r.odd.erase(std::find(r.odd.begin(), r.odd.end(), ti));
      out.add(r, Scalar(sign_of(static_cast<long long>(m.even.size())) * mult) * c);
    }
  }
  return out;
}

/// Contraction with an arbitrary vector; homogeneous components of x are
/// contracted separately.
inline Cochain contract(const GradedBasis& basis, std::span<const Scalar> x, const Cochain& a) {
  if (x.size() != basis.dim()) throw InputError("contraction vector has the wrong length");
  Cochain out;
  for (std::size_t t = 0; t < x.size(); ++t)
    if (x[t] != 0) out += x[t] * contract(basis, t, a);
  return out;
}

/// Canonical argument order for a tuple of basis indices: evens first
/// (ascending), then odds (ascending). Returns the monomial whose canonical
/// tuple it is and the super-alternation sign; sign 0 when an even index
/// repeats.
inline std::pair<Monomial, int> canonical_order(const GradedBasis& basis, std::span<const std::size_t> tuple) {
  std::vector<std::size_t> t(tuple.begin(), tuple.end());
  int sign = 1;
  auto key = [&](std::size_t i) { return std::make_pair(bit(basis.parity(i)), i); };
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && key(t[j - 1]) > key(t[j]); --j) {
      sign *= -koszul(basis.parity(t[j - 1]), basis.parity(t[j]));
      std::swap(t[j - 1], t[j]);
    }
  Monomial m;
  for (std::size_t i : t) (basis.parity(i) == Parity::Even ? m.even : m.odd).push_back(static_cast<Index>(i));
  for (std::size_t i = 1; i < m.even.size(); ++i)
    if (m.even[i] == m.even[i - 1]) return {m, 0};
  return {m, sign};
}

/// A(e_{t1}, ..., e_{tk}) under the evaluation convention above.
inline Scalar evaluate(const GradedBasis& basis, const Cochain& a, std::span<const std::size_t> tuple) {
  auto [m, sign] = canonical_order(basis, tuple);
  if (sign == 0) return 0;
  Scalar c = a.coefficient(m);
  if (c == 0) return 0;
  return sign * c * Scalar(symmetric_weight(m));
}

/// All monomials of Alt^p ⊗ Sym^{k-p}, ordered by p, then lexicographically.
inline std::vector<Monomial> monomials_of_degree(const GradedBasis& basis, std::size_t k) {
  const std::size_t m = basis.even_dim(), o = basis.odd_dim();
  std::vector<Monomial> out;
  for (std::size_t p = 0; p <= std::min(k, m); ++p) {
    const std::size_t q = k - p;
    if (q > 0 && o == 0) continue;
    std::vector<Index> ev(p);
    for (std::size_t i = 0; i < p; ++i) ev[i] = static_cast<Index>(i);
    while (true) {
      std::vector<Index> od(q, static_cast<Index>(m));
      while (true) {
        out.push_back({ev, od});
        // next multiset of size q over [m, m+o)
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(q) - 1;
        while (i >= 0 && od[static_cast<std::size_t>(i)] == m + o - 1) --i;
        if (i < 0) break;
        Index v = od[static_cast<std::size_t>(i)] + 1;
        for (std::size_t j = static_cast<std::size_t>(i); j < q; ++j) od[j] = v;
      }
      // next p-subset of [0, m)
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(p) - 1;
      while (i >= 0 && ev[static_cast<std::size_t>(i)] == m - p + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++ev[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < p; ++j) ev[j] = ev[j - 1] + 1;
    }
  }
  return out;
}

/// Canonical argument tuple of a monomial.
inline std::vector<std::size_t> canonical_tuple(const Monomial& m) {
  std::vector<std::size_t> t(m.even.begin(), m.even.end());
  t.insert(t.end(), m.odd.begin(), m.odd.end());
  return t;
}

/// Rebuilds a degree-k cochain from its values on canonical tuples.
inline Cochain from_evaluation(const GradedBasis& basis, std::size_t k,
                               const std::function<Scalar(std::span<const std::size_t>)>& values) {
  Cochain out;
  for (const auto& m : monomials_of_degree(basis, k)) {
    const auto t = canonical_tuple(m);
    Scalar v = values(t);
    if (v != 0) out.add(m, v / Scalar(symmetric_weight(m)));
  }
  return out;
}

/// δ evaluated directly from the defining formula
///   δω(X0..Xk) = sum_{r<s} (-1)^{s + x_s(x_{r+1}+...+x_{s-1})}
///                ω(X0,..,X_{r-1},[X_r,X_s],X_{r+1},..,^X_s,..,X_k)
/// on every canonical (k+1)-tuple, then re-expanded in monomials. δ0 = 0.
inline Cochain differential_direct(const LieSuperalgebra& g, const Cochain& a) {
  const auto& basis = g.basis();
  check_compatible(basis, a);
  Cochain out;
  for (std::size_t k : a.degrees()) {
    if (k == 0) continue;
    const Cochain ak = a.component(k);
    std::vector<std::size_t> args;
    args.reserve(k + 1);
    out += from_evaluation(basis, k + 1, [&](std::span<const std::size_t> x) {
      Scalar total = 0;
      for (std::size_t r = 0; r <= k; ++r)
        for (std::size_t s = r + 1; s <= k; ++s) {
          const SparseVector br = g.structure(x[r], x[s]);
          if (br.empty()) continue;
          int between = 0;
          for (std::size_t t = r + 1; t < s; ++t) between += bit(basis.parity(x[t]));
          const int sign = sign_of(static_cast<long long>(s) + bit(basis.parity(x[s])) * between);
          for (const auto& [t, c] : br) {
            args.clear();
            for (std::size_t u = 0; u <= k; ++u) {
              if (u == s) continue;
              args.push_back(u == r ? t : x[u]);
            }
            Scalar v = evaluate(basis, ak, args);
            if (v != 0) total += sign * c * v;
          }
        }
      return total;
    });
  }
  return out;
}

}  // namespace superlie
