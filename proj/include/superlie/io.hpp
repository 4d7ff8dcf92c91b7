#pragma once

// Text and JSON formats: cochain literals, the algebra description document,
// and machine-readable reports.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "superlie/cohomology.hpp"

namespace superlie {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema = 1;

// ---------------------------------------------------------------- cochains

/// "c * e(a1^...^ap) ⊗ s(b1,...,bq)" per term, joined by " + "; "0" if empty.
inline std::string format_cochain(const GradedBasis& basis, const Cochain& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + " * e(";
    for (std::size_t i = 0; i < m.even.size(); ++i) out += (i ? "^" : "") + basis.label(m.even[i]);
    out += ") ⊗ s(";
    for (std::size_t i = 0; i < m.odd.size(); ++i) out += (i ? "," : "") + basis.label(m.odd[i]);
    out += ")";
  }
  return out;
}

namespace io_detail {

class CochainParser {
public:
  CochainParser(const GradedBasis& basis, std::string_view text) : basis_(basis), s_(text) {}

  Cochain parse() {
    Cochain out;
    skip();
    if (s_.substr(pos_) == "0") return out;
    bool first = true;
    while (true) {
      skip();
      if (at_end()) {
        if (first) fail("empty cochain");
        break;
      }
      int sign = 1;
      if (!first) {
        if (eat("+")) {
        } else if (eat("-")) {
          sign = -1;
        } else {
          fail("expected '+' or '-' between terms");
        }
        skip();
      }
      while (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        ++pos_;
        skip();
      }
      out += Scalar(sign) * term();
      first = false;
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cochain literal: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Cochain term() {
    Scalar coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coeff = parse_scalar(s_.substr(start, pos_ - start));
      has_coeff = true;
      skip();
      if (eat("*")) skip();
    }
    std::vector<Index> even, odd;
    bool has_e = false, has_s = false;
    if (eat("e(")) {
      has_e = true;
      labels(even, '^', Parity::Even);
      skip();
      if (eat("⊗") || eat("(x)")) skip();
    }
    if (eat("s(")) {
      has_s = true;
      labels(odd, ',', Parity::Odd);
    }
    if (!has_coeff && !has_e && !has_s) fail("expected a term");
    const int sign = sort_alternating(even);
    if (sign == 0) return Cochain{};
    std::sort(odd.begin(), odd.end());
    return Cochain(Monomial{even, odd}, sign * coeff);
  }

  void labels(std::vector<Index>& out, char sep, Parity want) {
    skip();
    if (eat(")")) return;
    while (true) {
      skip();
      const std::size_t start = pos_;
      while (!at_end() && peek() != sep && peek() != ')' && !std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string label(s_.substr(start, pos_ - start));
      auto i = basis_.find(label);
      if (!i) fail("unknown basis label '" + label + "'");
      if (basis_.parity(*i) != want)
        fail("label '" + label + "' belongs in " + (want == Parity::Even ? "s(...)" : "e(...)"));
      out.push_back(static_cast<Index>(*i));
      skip();
      if (eat(")")) return;
      if (peek() != sep) fail(std::string("expected '") + sep + "' or ')'");
      ++pos_;
    }
  }

  const GradedBasis& basis_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace io_detail

/// Inverse of format_cochain; also accepts "-" between terms, omitted unit
/// coefficients, "(x)" for ⊗ and either factor alone.
inline Cochain parse_cochain(const GradedBasis& basis, std::string_view text) {
  return io_detail::CochainParser(basis, text).parse();
}

// ---------------------------------------------------------------- algebras

inline Json algebra_to_json(const LieSuperalgebra& g, const std::optional<BilinearForm>& form) {
  const auto& b = g.basis();
  Json doc;
  doc["name"] = g.name();
  doc["basis"] = Json::array();
  for (const auto& e : b.elements()) doc["basis"].push_back({{"label", e.label}, {"parity", to_string(e.parity)}});
  doc["brackets"] = Json::array();
  for (const auto& e : g.entries()) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.value) terms.push_back({{"coeff", to_string(c)}, {"basis", b.label(k)}});
    doc["brackets"].push_back({{"left", b.label(e.left)}, {"right", b.label(e.right)}, {"terms", terms}});
  }
  if (form) {
    doc["form"] = Json::array();
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = i; j < b.dim(); ++j)
        if ((*form)(i, j) != 0)
          doc["form"].push_back({{"left", b.label(i)}, {"right", b.label(j)}, {"value", to_string((*form)(i, j))}});
  }
  return doc;
}

inline Json algebra_to_json(const AlgebraWithForm& a) { return algebra_to_json(a.algebra, a.form); }
inline Json algebra_to_json(const QuadraticLieSuperalgebra& q) { return algebra_to_json(q.algebra(), q.form()); }

namespace io_detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw InputError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

/// Rational literal given as a string "p/q" or as a JSON integer.
inline Scalar scalar_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long long>());
  throw InputError(where + ": field '" + key + "' must be a rational string such as \"-3/2\"");
}

inline std::size_t label_field(const GradedBasis& b, const Json& j, const char* key, const std::string& where) {
  const std::string l = string_field(j, key, where);
  auto i = b.find(l);
  if (!i) throw InputError(where + ": unknown basis label '" + l + "'");
  return *i;
}

}  // namespace io_detail

inline AlgebraWithForm algebra_from_json(const Json& doc) {
  using namespace io_detail;
  if (!doc.is_object()) throw InputError("algebra document must be a JSON object");
  const std::string name = doc.contains("name") ? string_field(doc, "name", "algebra") : std::string("algebra");
  const Json& basis = field(doc, "basis", "algebra");
  if (!basis.is_array()) throw InputError("algebra: 'basis' must be an array");
  std::vector<BasisElement> elems;
  for (const auto& e : basis) {
    const std::string p = string_field(e, "parity", "basis entry");
    Parity parity;
    if (p == "even" || p == "0")
      parity = Parity::Even;
    else if (p == "odd" || p == "1")
      parity = Parity::Odd;
    else
      throw InputError("basis entry: parity must be \"even\" or \"odd\", got '" + p + "'");
    elems.push_back({string_field(e, "label", "basis entry"), parity});
  }
  GradedBasis b(std::move(elems));

  std::vector<BracketEntry> entries;
  if (doc.contains("brackets")) {
    if (!doc.at("brackets").is_array()) throw InputError("algebra: 'brackets' must be an array");
    for (const auto& br : doc.at("brackets")) {
      BracketEntry e{label_field(b, br, "left", "bracket"), label_field(b, br, "right", "bracket"), {}};
      const Json& terms = field(br, "terms", "bracket");
      if (!terms.is_array()) throw InputError("bracket: 'terms' must be an array");
      for (const auto& t : terms) e.value[label_field(b, t, "basis", "bracket term")] += scalar_field(t, "coeff", "bracket term");
      entries.push_back(std::move(e));
    }
  }
  LieSuperalgebra g(name, b, entries);
  std::optional<BilinearForm> form;
  if (doc.contains("form")) {
    if (!doc.at("form").is_array()) throw InputError("algebra: 'form' must be an array");
    std::vector<FormEntry> fe;
    for (const auto& f : doc.at("form"))
      fe.push_back({label_field(b, f, "left", "form entry"), label_field(b, f, "right", "form entry"),
                    scalar_field(f, "value", "form entry")});
    form = BilinearForm::from_entries(b, fe);
  }
  return {std::move(g), std::move(form)};
}

inline AlgebraWithForm algebra_from_json_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(doc);
}

// ---------------------------------------------------------------- reports

inline Json report_to_json(const ValidationReport& r, const GradedBasis& basis) {
  Json out;
  out["schema"] = report_schema;
  out["ok"] = r.ok();
  out["violations"] = Json::array();
  for (const auto& v : r.violations) {
    Json w = Json::array();
    for (auto i : v.witness) w.push_back(basis.label(i));
    out["violations"].push_back({{"axiom", v.axiom}, {"witness", w}, {"detail", v.detail}});
  }
  return out;
}

inline Json cohomology_to_json(const CohomologyResult& r, const GradedBasis& basis) {
  Json reps = Json::array();
  for (const auto& c : r.representatives) reps.push_back(format_cochain(basis, c));
  return {{"degree", r.degree},
          {"dim_cochains", r.dim_cochains},
          {"dim_cocycles", r.dim_cocycles},
          {"dim_coboundaries", r.dim_coboundaries},
          {"betti", r.betti},
          {"representatives", reps}};
}

inline Json cohomology_report(const std::string& name, const std::vector<CohomologyResult>& results,
                              const GradedBasis& basis) {
  Json out;
  out["schema"] = report_schema;
  out["algebra"] = name;
  out["results"] = Json::array();
  for (const auto& r : results) out["results"].push_back(cohomology_to_json(r, basis));
  return out;
}

}  // namespace superlie
