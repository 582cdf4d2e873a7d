#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "milnor/hilbert.hpp"

namespace milnor {

/// Minimal graded free resolution of the Milnor algebra, by degrees: column j
/// lists the degrees a of the summands S(-a) in homological position j.
struct BettiTable {
  std::vector<std::vector<int>> columns;

  /// Highest position with a nonzero module (projective dimension).
  int length() const;
  std::size_t rank(std::size_t position) const {
    return position < columns.size() ? columns[position].size() : 0;
  }
};

enum class FreenessStatus { Free, NearlyFree, Neither };

std::string to_string(FreenessStatus status);

struct FreenessVerdict {
  FreenessStatus status = FreenessStatus::Neither;
  /// Ascending; empty for Neither.
  std::vector<int> exponents;
};

/// Minimal Betti table of S/J_f, built from iterated minimal syzygies.
template <class K>
BettiTable betti_table(const Polynomial<K>& f);

/// Syzygy soundness: each computed syzygy annihilates its generators.
/// Returns false on the first failure. Used by the property suites.
template <class K>
bool resolution_is_sound(const Polynomial<K>& f);

/// Free: projective dimension 2. NearlyFree: n+1 first syzygies whose two
/// largest exponents coincide, and a single second syzygy in degree d + d_n.
/// Exponents are read from first-syzygy degrees.
FreenessVerdict classify_from_betti(const BettiTable& table, int degree, int nvars);

template <class K>
FreenessVerdict classify_freeness(const Polynomial<K>& f);

/// Exponents of a free divisor of degree d in P^n with the given Hilbert
/// polynomial, recovered through power sums. Throws NotFreeCompatible.
std::vector<int> exponents_from_hilbert_polynomial(const std::vector<mpq_class>& hp, int d, int n);

struct FreeDictionary {
  /// Coefficients of prod (t + d_i), lowest degree first.
  std::vector<std::int64_t> poincare;
  /// Elementary symmetric functions (s_0, ..., s_n) of the exponents.
  std::vector<std::int64_t> mixed;
  /// a*t + b, lowest degree first; only filled for n = 3.
  std::vector<mpq_class> hp;
};

FreeDictionary free_dictionary(const std::vector<int>& exponents, int d, int n);

}  // namespace milnor
