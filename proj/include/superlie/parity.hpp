#pragma once

#include <cstdint>

namespace superlie {

/// Z2 degree of a homogeneous element.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr int bit(Parity p) { return static_cast<int>(p); }
constexpr Parity parity_of(long long n) { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }
constexpr Parity operator+(Parity a, Parity b) { return parity_of(bit(a) + bit(b)); }

/// Koszul sign (-1)^{ab}.
constexpr int koszul(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

constexpr const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace superlie
