#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "milnor/errors.hpp"

namespace milnor {

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 127;

/// Exponent vector packed one byte per variable (variable i in byte i), with
/// the total degree cached. Exponents are kept below 128 so that byte-wise
/// sums never carry into the neighbouring variable.
struct Monomial {
  std::uint64_t exps = 0;
  std::uint32_t deg = 0;

  static constexpr std::uint64_t kHigh = 0x8080808080808080ULL;

  static Monomial from_exponents(std::span<const int> e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars)) throw ResourceLimit("more than 8 variables");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > kMaxExponent) throw ResourceLimit("exponent out of range");
      m.exps |= static_cast<std::uint64_t>(e[i]) << (8 * i);
      m.deg += static_cast<std::uint32_t>(e[i]);
    }
    return m;
  }
  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.exps = static_cast<std::uint64_t>(power) << (8 * i);
    m.deg = static_cast<std::uint32_t>(power);
    return m;
  }

  int operator[](int i) const { return static_cast<int>((exps >> (8 * i)) & 0xFF); }
  bool is_one() const { return exps == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r{a.exps + b.exps, a.deg + b.deg};
  if (r.exps & Monomial::kHigh) throw ResourceLimit("exponent overflow (degree beyond desk scale)");
  return r;
}

/// True iff a divides b.
inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  return (((b.exps | Monomial::kHigh) - a.exps) & Monomial::kHigh) == Monomial::kHigh;
}

/// b / a, assuming divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) { return {b.exps - a.exps, b.deg - a.deg}; }

inline std::uint64_t byte_ge_mask(std::uint64_t a, std::uint64_t b) {
  std::uint64_t ge = ((a | Monomial::kHigh) - b) & Monomial::kHigh;
  return (ge >> 7) * 0xFF;
}

inline std::uint32_t byte_sum(std::uint64_t e) {
  std::uint32_t s = 0;
  while (e) {
    s += static_cast<std::uint32_t>(e & 0xFF);
    e >>= 8;
  }
  return s;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  std::uint64_t mask = byte_ge_mask(a.exps, b.exps);
  std::uint64_t e = (a.exps & mask) | (b.exps & ~mask);
  return {e, byte_sum(e)};
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  std::uint64_t mask = byte_ge_mask(a.exps, b.exps);
  std::uint64_t e = (b.exps & mask) | (a.exps & ~mask);
  return {e, byte_sum(e)};
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  // Bytes of a and b both nonzero somewhere <=> gcd nontrivial.
  std::uint64_t nz_a = ((a.exps | Monomial::kHigh) - 0x0101010101010101ULL) & Monomial::kHigh;
  std::uint64_t nz_b = ((b.exps | Monomial::kHigh) - 0x0101010101010101ULL) & Monomial::kHigh;
  return (nz_a & nz_b) == 0;
}

/// Monomial orders on k[x_0, ..., x_{n-1}] with x_0 > x_1 > ... .
struct MonomialOrder {
  enum class Kind : std::uint8_t { GradedReverseLex, Lex, Elimination };

  Kind kind = Kind::GradedReverseLex;
  /// Elimination: the first `block` variables are eliminated (degree in
  /// that block compared first, then graded reverse lex).
  int block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(int block) { return {Kind::Elimination, block}; }

  bool degree_compatible() const { return kind == Kind::GradedReverseLex; }

  /// Returns >0, 0, <0 as a is greater, equal, smaller than b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::GradedReverseLex:
        return compare_grevlex(a, b);
      case Kind::Lex: {
        std::uint64_t diff = a.exps ^ b.exps;
        if (!diff) return 0;
        int byte = std::countr_zero(diff) >> 3;
        return a[byte] > b[byte] ? 1 : -1;
      }
      case Kind::Elimination: {
        std::uint64_t mask = block >= 8 ? ~0ULL : ((1ULL << (8 * block)) - 1);
        std::uint32_t da = byte_sum(a.exps & mask), db = byte_sum(b.exps & mask);
        if (da != db) return da > db ? 1 : -1;
        return compare_grevlex(a, b);
      }
    }
    return 0;
  }

  static int compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    return compare_revlex(a, b);
  }
  static int compare_revlex(const Monomial& a, const Monomial& b) {
    std::uint64_t diff = a.exps ^ b.exps;
    if (!diff) return 0;
    int byte = (63 - std::countl_zero(diff)) >> 3;
    return a[byte] < b[byte] ? 1 : -1;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::GradedReverseLex: return "grevlex";
      case Kind::Lex: return "lex";
      case Kind::Elimination: return "elim(" + std::to_string(block) + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace milnor
