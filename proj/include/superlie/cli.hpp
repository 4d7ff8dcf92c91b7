#pragma once

// Command-line front end. run() is separate from main() so the verbs can be
// exercised in-process.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superlie/superlie.hpp"

namespace superlie::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_usage = 2;

struct Options {
  std::string verb;
  std::string target;
  std::vector<std::string> params;
  std::string format = "text";
  std::string output;
  std::size_t max_degree = 2;
  std::size_t degree = 2;
  std::size_t guard = default_size_guard;
  std::string left = "I";
  std::string right;
  std::string derivation;
  std::string derivation_file;
  std::string e_label = "e";
  std::string f_label = "f";
  std::string name;
};

inline ParamMap parse_params(const std::vector<std::string>& items) {
  ParamMap p;
  for (const auto& s : items) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("parameter binding must look like name=p/q, got '" + s + "'");
    p[s.substr(0, eq)] = parse_scalar(s.substr(eq + 1));
  }
  return p;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// A catalog key, or a path to a JSON algebra document.
inline AlgebraWithForm load_target(const Options& o) {
  if (o.target.empty()) throw InputError("missing target (catalog key or JSON file)");
  const bool looks_like_file = o.target.find('/') != std::string::npos || o.target.ends_with(".json") ||
                               std::filesystem::exists(o.target);
  if (looks_like_file) {
    if (!o.params.empty()) throw InputError("--param only applies to catalog keys");
    return algebra_from_json_text(read_file(o.target));
  }
  return catalog_build(o.target, parse_params(o.params));
}

/// Rows separated by ';' or newlines, entries by whitespace or ','.
inline Matrix parse_matrix(const std::string& text) {
  std::vector<Vector> rows;
  std::string row;
  auto flush = [&] {
    std::string cleaned = row;
    for (char& c : cleaned)
      if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    Vector v;
    std::string tok;
    while (in >> tok) v.push_back(parse_scalar(tok));
    if (!v.empty()) rows.push_back(std::move(v));
    row.clear();
  };
  for (char c : text) {
    if (c == ';' || c == '\n') flush();
    else row += c;
  }
  flush();
  if (rows.empty()) throw InputError("empty derivation matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw InputError("derivation matrix must be square");
  return Matrix::from_rows(rows, rows.size());
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw InputError("cannot write '" + o.output + "'");
  f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline int do_list(const Options& o, std::ostream& out) {
  const auto entries = catalog_list();
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& e : entries) {
      Json params = Json::array();
      for (const auto& p : e.params)
        params.push_back({{"name", p.name}, {"default", to_string(p.default_value)}, {"constraint", p.constraint}});
      arr.push_back({{"key", e.key}, {"quadratic", e.quadratic}, {"params", params}, {"constraint", e.constraint},
                     {"summary", e.summary}});
    }
    emit(o, dump({{"schema", report_schema}, {"entries", arr}}), out);
    return exit_ok;
  }
  std::ostringstream s;
  for (const auto& e : entries) {
    s << e.key;
    if (!e.params.empty()) {
      s << " (";
      for (std::size_t i = 0; i < e.params.size(); ++i)
        s << (i ? ", " : "") << e.params[i].name << "=" << to_string(e.params[i].default_value);
      s << ")";
    }
    s << "\n    " << e.summary << "\n";
    for (const auto& p : e.params)
      if (!p.constraint.empty()) s << "    " << p.name << ": " << p.constraint << "\n";
    if (!e.constraint.empty()) s << "    " << e.constraint << "\n";
  }
  emit(o, s.str(), out);
  return exit_ok;
}

inline int do_validate(const Options& o, std::ostream& out) {
  const AlgebraWithForm a = load_target(o);
  ValidationReport r = validate_lie_superalgebra(a.algebra);
  const bool quadratic = a.form.has_value();
  if (quadratic) r.append(validate_quadratic(QuadraticLieSuperalgebra(a.algebra, *a.form)));
  const std::string kind = quadratic ? "quadratic Lie superalgebra" : "Lie superalgebra";
  if (o.format == "json") {
    Json j = report_to_json(r, a.algebra.basis());
    j["algebra"] = a.algebra.name();
    j["kind"] = kind;
    emit(o, dump(j), out);
  } else if (r.ok()) {
    emit(o, kind + ": OK\n", out);
  } else {
    emit(o, kind + ": FAILED\n" + r.describe(a.algebra.basis()), out);
  }
  return r.ok() ? exit_ok : exit_invalid;
}

inline std::vector<CohomologyResult> compute_table(const AlgebraWithForm& a, std::size_t k_max, std::size_t guard) {
  if (a.form) return betti_table(a.quadratic(), k_max, guard);
  return betti_table(a.algebra, k_max, guard);
}

inline int require_valid(const AlgebraWithForm& a, std::ostream& err) {
  ValidationReport r = validate_lie_superalgebra(a.algebra);
  if (a.form) r.append(validate_quadratic(a.quadratic()));
  if (r.ok()) return exit_ok;
  err << "input is not a valid " << (a.form ? "quadratic " : "") << "Lie superalgebra\n" << r.describe(a.algebra.basis());
  return exit_invalid;
}

inline int do_betti(const Options& o, std::ostream& out, std::ostream& err) {
  const AlgebraWithForm a = load_target(o);
  if (int rc = require_valid(a, err)) return rc;
  const auto table = compute_table(a, o.max_degree, o.guard);
  const auto& basis = a.algebra.basis();
  if (o.format == "json") {
    emit(o, dump(cohomology_report(a.algebra.name(), table, basis)), out);
    return exit_ok;
  }
  std::ostringstream s;
  s << "Betti numbers of " << a.algebra.name() << "\n";
  s << std::setw(4) << "k" << std::setw(10) << "dim C^k" << std::setw(10) << "dim Z^k" << std::setw(10) << "dim B^k"
    << std::setw(6) << "b_k" << "\n";
  for (const auto& r : table)
    s << std::setw(4) << r.degree << std::setw(10) << r.dim_cochains << std::setw(10) << r.dim_cocycles << std::setw(10)
      << r.dim_coboundaries << std::setw(6) << r.betti << "\n";
  for (std::size_t i = 0; i < table.size(); ++i)
    s << (i ? ", " : "") << "b_" << table[i].degree << " = " << table[i].betti;
  s << "\n";
  emit(o, s.str(), out);
  return exit_ok;
}

inline int do_cohomology(const Options& o, std::ostream& out, std::ostream& err) {
  const AlgebraWithForm a = load_target(o);
  if (int rc = require_valid(a, err)) return rc;
  const CohomologyResult r = a.form ? cohomology(a.quadratic(), o.degree, o.guard) : cohomology(a.algebra, o.degree, o.guard);
  const auto& basis = a.algebra.basis();
  if (o.format == "json") {
    emit(o, dump(cohomology_report(a.algebra.name(), {r}, basis)), out);
    return exit_ok;
  }
  std::ostringstream s;
  s << "H^" << r.degree << "(" << a.algebra.name() << ")\n";
  s << "  dim C^" << r.degree << " = " << r.dim_cochains << "\n";
  s << "  dim Z^" << r.degree << " = " << r.dim_cocycles << "\n";
  s << "  dim B^" << r.degree << " = " << r.dim_coboundaries << "\n";
  s << "  b_" << r.degree << " = " << r.betti << "\n";
  for (const auto& c : r.representatives) s << "  [" << format_cochain(basis, c) << "]\n";
  emit(o, s.str(), out);
  return exit_ok;
}

inline int do_poisson(const Options& o, std::ostream& out, std::ostream& err) {
  const AlgebraWithForm a = load_target(o);
  if (!a.form) throw InputError(a.algebra.name() + " has no invariant form; the Poisson bracket needs one");
  if (int rc = require_valid(a, err)) return rc;
  const QuadraticLieSuperalgebra q = a.quadratic();
  const auto& basis = q.basis();
  const Cochain three = associated_three_form(q);
  auto operand = [&](const std::string& text) { return text == "I" ? three : parse_cochain(basis, text); };
  Json j;
  j["schema"] = report_schema;
  j["algebra"] = q.name();
  j["I"] = format_cochain(basis, three);
  std::ostringstream s;
  s << "I = " << format_cochain(basis, three) << "\n";
  if (!o.right.empty()) {
    const Cochain l = operand(o.left), r = operand(o.right);
    const Cochain br = poisson_bracket(q, l, r);
    j["left"] = format_cochain(basis, l);
    j["right"] = format_cochain(basis, r);
    j["bracket"] = format_cochain(basis, br);
    s << "{" << format_cochain(basis, l) << ", " << format_cochain(basis, r) << "} = " << format_cochain(basis, br) << "\n";
    if (o.left == "I") {
      const Cochain d = differential_direct(q.algebra(), r);
      j["delta"] = format_cochain(basis, d);
      s << "delta = " << format_cochain(basis, d) << "\n";
    }
  }
  emit(o, o.format == "json" ? dump(j) : s.str(), out);
  return exit_ok;
}

inline int do_double_extend(const Options& o, std::ostream& out, std::ostream& err) {
  const AlgebraWithForm a = load_target(o);
  if (!a.form) throw InputError(a.algebra.name() + " has no invariant form; a double extension needs one");
  if (int rc = require_valid(a, err)) return rc;
  if (o.derivation.empty() == o.derivation_file.empty())
    throw InputError("give exactly one of --derivation and --derivation-file");
  const Matrix d = parse_matrix(o.derivation.empty() ? read_file(o.derivation_file) : o.derivation);
  if (d.rows() != a.algebra.dim())
    throw InputError("derivation must be " + std::to_string(a.algebra.dim()) + "x" + std::to_string(a.algebra.dim()));
  const auto ext = one_dim_double_extension(a.quadratic(), d, o.e_label, o.f_label, o.name);
  emit(o, dump(algebra_to_json(ext)), out);
  return exit_ok;
}

inline int do_export(const Options& o, std::ostream& out) {
  emit(o, dump(algebra_to_json(load_target(o))), out);
  return exit_ok;
}

/// "error: <msg>\n" with any embedded line breaks folded into "; ".
inline std::string one_line(std::string_view msg) {
  std::string s(msg);
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  std::string out = "error: ";
  for (char c : s) out += c == '\n' ? std::string("; ") : std::string(1, c);
  return out + "\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact cohomology and double extensions of quadratic Lie superalgebras", "superlie"};
  app.require_subcommand(1);
  Options o;

  auto target = [&](CLI::App* c) { c->add_option("target", o.target, "catalog key or JSON algebra file")->required(); };
  auto common = [&](CLI::App* c) {
    c->add_option("--param,-p", o.params, "parameter binding name=p/q (repeatable)");
    c->add_option("--format,-f", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--output,-o", o.output, "write the report to this file");
  };

  auto* list = app.add_subcommand("list", "list catalog entries");
  list->add_option("--format,-f", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  list->add_option("--output,-o", o.output, "write the report to this file");

  auto* validate = app.add_subcommand("validate", "check the Lie superalgebra and quadratic axioms");
  target(validate);
  common(validate);

  auto* coh = app.add_subcommand("cohomology", "H^k with representatives");
  target(coh);
  common(coh);
  coh->add_option("--degree,-k", o.degree, "cohomological degree");
  coh->add_option("--size-guard", o.guard, "largest admissible dim C^k");

  auto* betti = app.add_subcommand("betti", "Betti numbers b_0..b_K");
  target(betti);
  common(betti);
  betti->add_option("--max-degree,-K", o.max_degree, "largest degree");
  betti->add_option("--size-guard", o.guard, "largest admissible total cochain dimension");

  auto* poisson = app.add_subcommand("poisson", "super Poisson bracket of two cochains");
  target(poisson);
  common(poisson);
  poisson->add_option("--left", o.left, "left cochain literal, or I for the 3-form");
  poisson->add_option("--right", o.right, "right cochain literal, e.g. \"1 * e(X0) ⊗ s()\"");

  auto* dext = app.add_subcommand("double-extend", "1-dimensional double extension by a derivation");
  target(dext);
  common(dext);
  dext->add_option("--derivation", o.derivation, "matrix rows separated by ';', entries by spaces or commas");
  dext->add_option("--derivation-file", o.derivation_file, "file holding the matrix, one row per line");
  dext->add_option("--e-label", o.e_label, "label of the new element e");
  dext->add_option("--f-label", o.f_label, "label of the new element f");
  dext->add_option("--name", o.name, "name of the extended algebra");

  auto* exp = app.add_subcommand("export", "write an algebra as a JSON document");
  target(exp);
  common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << one_line(e.what());
    return exit_usage;
  }

  try {
    if (list->parsed()) return do_list(o, out);
    if (validate->parsed()) return do_validate(o, out);
    if (coh->parsed()) return do_cohomology(o, out, err);
    if (betti->parsed()) return do_betti(o, out, err);
    if (poisson->parsed()) return do_poisson(o, out, err);
    if (dext->parsed()) return do_double_extend(o, out, err);
    if (exp->parsed()) return do_export(o, out);
  } catch (const InputError& e) {
    err << one_line(e.what());
    return exit_usage;
  } catch (const ResourceError& e) {
    err << one_line(e.what());
    return exit_usage;
  } catch (const PreconditionError& e) {
    err << one_line(e.what());
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace superlie::cli
