#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "milnor/errors.hpp"

namespace milnor {

/// Runtime description of a coefficient field, used by rings and reports.
struct CoefficientField {
  enum class Kind : std::uint8_t { ExactRational, Prime };

  Kind kind = Kind::Prime;
  std::uint32_t prime = 32003;

  static CoefficientField rational() { return {Kind::ExactRational, 0}; }
  static CoefficientField prime_field(std::uint32_t p) { return {Kind::Prime, p}; }

  bool is_rational() const { return kind == Kind::ExactRational; }
  std::string to_string() const {
    return is_rational() ? std::string("QQ") : "GF(" + std::to_string(prime) + ")";
  }
  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;
};

bool is_prime(std::uint64_t n);

/// Z/p with p < 2^26, so that products of two residues plus a residue stay
/// exact in a double (the SIMD kernels rely on this).
class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint32_t kMaxPrime = (1u << 26);

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  CoefficientField descriptor() const { return CoefficientField::prime_field(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  Elem from_int(std::int64_t v) const;
  Elem from_mpz(const mpz_class& v) const;
  /// Throws DomainError when the denominator vanishes mod p.
  Elem from_rational(const mpq_class& v) const;

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Elem a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Elem a) const { return std::to_string(to_signed(a)); }
  bool negative(Elem a) const { return to_signed(a) < 0; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The field of rationals, backed by GMP.
class RationalField {
 public:
  using Elem = mpq_class;

  CoefficientField descriptor() const { return CoefficientField::rational(); }
  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw DomainError("division by zero in QQ");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }
  Elem pow(const Elem& a, std::uint64_t e) const;

  Elem from_int(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  Elem from_mpz(const mpz_class& v) const { return mpq_class(v); }
  Elem from_rational(const mpq_class& v) const { return v; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  bool negative(const Elem& a) const { return sgn(a) < 0; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace milnor
