#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "superlie/errors.hpp"

namespace superlie {

/// Exact rational; always stored reduced with a positive denominator.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer numerator(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline Integer denominator(const Scalar& s) { return boost::multiprecision::denominator(s); }

inline bool is_zero(const Scalar& s) { return s == 0; }

/// Parses `p`, `p/q` with an optional leading sign. No decimals, no spaces
/// inside the literal.
inline Scalar parse_scalar(std::string_view text) {
  auto fail = [&]() -> Scalar {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return fail();
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  auto digits = [](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!digits(num)) return fail();
  if (slash != std::string_view::npos && !digits(den)) return fail();
  Integer n{std::string(num)};
  Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Scalar r(n, d);
  return negative ? Scalar(-r) : r;
}

inline std::string to_string(const Scalar& s) {
  std::string out = numerator(s).str();
  if (denominator(s) != 1) out += "/" + denominator(s).str();
  return out;
}

/// (-1)^e
inline int sign_of(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace superlie
