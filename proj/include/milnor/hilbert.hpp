#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "milnor/groebner.hpp"
#include "milnor/monomial_ideal.hpp"

namespace milnor {

/// Hilbert series, polynomial and function of a graded quotient S/I.
struct HilbertData {
  int nvars = 0;
  /// N(t) with HS(t) = N(t) / (1-t)^nvars.
  IntPoly numerator;
  /// Hilbert polynomial coefficients, lowest degree first; empty when zero.
  std::vector<mpq_class> hp;
  /// Least k with H(j) = P(j) for every j >= k.
  int k0 = 0;
  /// H(k) for k = 0 .. k0 + 2.
  std::vector<std::int64_t> prefix;

  /// Krull dimension of S/I (0 for a zero Hilbert polynomial).
  int krull_dimension() const;
  /// Dimension of Proj(S/I): degree of hp, -1 when hp = 0.
  int projective_dimension() const { return static_cast<int>(hp.size()) - 1; }
  /// Degree of Proj(S/I); 0 when empty.
  std::int64_t degree() const;
  /// Coefficient of t^k in the series.
  std::int64_t value(int k) const;
  mpq_class hp_at(std::int64_t k) const;
};

/// Hilbert data of S/M for a monomial ideal M.
HilbertData hilbert_data_monomial(const std::vector<Monomial>& gens, int nvars);

template <class K>
HilbertData hilbert_data(const Ideal<K>& ideal);

template <class K>
std::int64_t hilbert_function(const Ideal<K>& ideal, int k);

/// Hilbert data of the Milnor algebra S/J_f.
template <class K>
HilbertData milnor_hilbert_data(const Polynomial<K>& f);

/// Constant Hilbert polynomial of the Milnor algebra; throws
/// NonIsolatedSingularities when the polynomial has positive degree.
template <class K>
std::int64_t total_tjurina(const Polynomial<K>& f);

struct DimensionDegree {
  int dimension;  // projective dimension, -1 when empty
  std::int64_t degree;
};

/// Dimension and degree of Proj(S/I), read off the Hilbert polynomial.
template <class K>
DimensionDegree quotient_dimension_degree(const Ideal<K>& ideal);

/// dim S_k - rank of the degree-k Macaulay matrix of homogeneous generators,
/// by sparse elimination mod p. Shares no code with the Groebner engine.
std::int64_t macaulay_hilbert_function(const std::vector<Polynomial<PrimeField>>& gens, int k);

/// Number of monomials of degree k in n variables.
std::int64_t monomial_count(int n, int k);

/// Hilbert series coefficients of sum_j (-1)^j sum_{shift in column j} t^shift / (1-t)^n,
/// i.e. the numerator of a free resolution; used to check Betti tables.
IntPoly numerator_from_shifts(const std::vector<std::vector<int>>& columns);

}  // namespace milnor
