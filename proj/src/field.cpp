#include "milnor/field.hpp"

namespace milnor {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= kMaxPrime || !is_prime(p))
    throw PreconditionError("modulus " + std::to_string(p) + " is not an odd prime below 2^26");
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(p_) + ")");
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r.get_ui());
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& v) const {
  Elem den = from_mpz(v.get_den());
  if (den == 0)
    throw DomainError("denominator " + v.get_den().get_str() + " vanishes mod " + std::to_string(p_));
  return div(from_mpz(v.get_num()), den);
}

RationalField::Elem RationalField::pow(const Elem& a, std::uint64_t e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace milnor
