#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/monomial.hpp"

namespace milnor {

/// Integer polynomial in t, lowest degree first.
using IntPoly = std::vector<std::int64_t>;

IntPoly trim(IntPoly p);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly multiply(const IntPoly& a, const IntPoly& b);
/// p(t) * t^k
IntPoly shift(const IntPoly& p, int k);
std::int64_t evaluate_at_one(const IntPoly& p);

/// Drops generators divisible by another generator; sorted, duplicates removed.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Numerator N(t) of the Hilbert series of S/M, HS(t) = N(t) / (1-t)^nvars,
/// for the monomial ideal M generated by `gens`. Pivot recursion
/// N(M) = N(M + (p)) + t^deg(p) N(M : p), memoized.
IntPoly hilbert_numerator(const std::vector<Monomial>& gens, int nvars);

/// Number of monomials of S outside M; nullopt when infinite.
std::optional<std::int64_t> standard_monomial_total(const std::vector<Monomial>& gens, int nvars);

}  // namespace milnor
