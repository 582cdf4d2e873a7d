#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "milnor/polynomial.hpp"

namespace milnor {

/// Seeded source for every genericity draw. mt19937_64 output is fixed by
/// the standard, and draws avoid std::uniform_int_distribution so streams
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-enough draw in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// Draw in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream label into an independent seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

template <class K>
using Matrix = std::vector<std::vector<typename K::Elem>>;

/// A random field element: uniform over F_p, or an integer in [-bound, bound] over Q.
template <class K>
typename K::Elem random_element(const K& field, Rng& rng, std::int64_t rational_bound = 50);

template <class K>
typename K::Elem determinant(const K& field, Matrix<K> m);

template <class K>
Matrix<K> identity_matrix(const K& field, int n);

/// f(A x): variable x_i is replaced by sum_j A[i][j] x_j.
template <class K>
Polynomial<K> apply_linear_change(const Polynomial<K>& f, const Matrix<K>& a);

template <class K>
struct LinearChange {
  Polynomial<K> g;
  Matrix<K> a;
};

/// g = f o A for a seeded random invertible A. Redraws a singular A, and
/// gives up with GenericityFailure after 16 draws.
template <class K>
LinearChange<K> random_linear_change(const Polynomial<K>& f, std::uint64_t seed);

/// Determinant of the matrix of second partials, expanded exactly.
template <class K>
Polynomial<K> hessian_determinant(const Polynomial<K>& f);

}  // namespace milnor
