#include "milnor/transforms.hpp"

#include <map>

namespace milnor {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <class K>
typename K::Elem random_element(const K& field, Rng& rng, std::int64_t rational_bound) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    (void)rational_bound;
    return static_cast<typename K::Elem>(rng.below(field.characteristic()));
  } else {
    return field.from_int(rng.between(-rational_bound, rational_bound));
  }
}

template <class K>
typename K::Elem determinant(const K& field, Matrix<K> m) {
  const std::size_t n = m.size();
  typename K::Elem det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && field.is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = field.neg(det);
    }
    det = field.mul(det, m[col][col]);
    auto inv = field.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (field.is_zero(m[r][col])) continue;
      auto factor = field.mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c) m[r][c] = field.sub(m[r][c], field.mul(factor, m[col][c]));
    }
  }
  return det;
}

template <class K>
Matrix<K> identity_matrix(const K& field, int n) {
  Matrix<K> a(static_cast<std::size_t>(n), std::vector<typename K::Elem>(static_cast<std::size_t>(n), field.zero()));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = field.one();
  return a;
}

template <class K>
Polynomial<K> apply_linear_change(const Polynomial<K>& f, const Matrix<K>& a) {
  const int n = f.nvars();
  if (static_cast<int>(a.size()) != n) throw PreconditionError("matrix size does not match the ring");
  std::vector<Polynomial<K>> images;
  for (int i = 0; i < n; ++i) {
    std::vector<Term<K>> terms;
    for (int j = 0; j < n; ++j) terms.push_back({Monomial::variable(j), a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    images.emplace_back(f.ring(), std::move(terms));
  }
  return f.substitute(images);
}

template <class K>
LinearChange<K> random_linear_change(const Polynomial<K>& f, std::uint64_t seed) {
  const K& field = f.field();
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (field.characteristic() < 32003) throw PreconditionError("random coordinate changes need p >= 32003");
  }
  Rng rng(seed);
  const int n = f.nvars();
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix<K> a(static_cast<std::size_t>(n));
    for (auto& row : a)
      for (int j = 0; j < n; ++j) row.push_back(random_element(field, rng));
    if (field.is_zero(determinant(field, a))) continue;
    return {apply_linear_change(f, a), std::move(a)};
  }
  throw GenericityFailure("sampled 16 singular coordinate changes");
}

template <class K>
Polynomial<K> hessian_determinant(const Polynomial<K>& f) {
  const int n = f.nvars();
  std::vector<std::vector<Polynomial<K>>> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Polynomial<K> fi = f.derivative(i);
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i)].push_back(fi.derivative(j));
  }
  // Laplace expansion along rows, memoized over the set of used columns:
  // minor[S] is the determinant of rows 0..|S|-1 restricted to columns S.
  std::map<unsigned, Polynomial<K>> minor;
  minor.emplace(0u, Polynomial<K>::constant(f.ring(), f.field().one()));
  for (int row = 0; row < n; ++row) {
    std::map<unsigned, Polynomial<K>> next;
    for (const auto& [cols, m] : minor) {
      if (m.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (cols & (1u << j)) continue;
        const Polynomial<K>& entry = h[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
        if (entry.is_zero()) continue;
        // Sign: number of used columns greater than j.
        int larger = std::popcount(cols >> (j + 1));
        Polynomial<K> term = entry * m;
        if (larger & 1) term = -term;
        auto [it, inserted] = next.emplace(cols | (1u << j), term);
        if (!inserted) it->second += term;
      }
    }
    minor = std::move(next);
  }
  auto it = minor.find((1u << n) - 1);
  return it == minor.end() ? Polynomial<K>(f.ring()) : it->second;
}

#define MILNOR_INSTANTIATE(K)                                                              \
  template typename K::Elem random_element(const K&, Rng&, std::int64_t);                 \
  template typename K::Elem determinant(const K&, Matrix<K>);                             \
  template Matrix<K> identity_matrix(const K&, int);                                       \
  template Polynomial<K> apply_linear_change(const Polynomial<K>&, const Matrix<K>&);      \
  template LinearChange<K> random_linear_change(const Polynomial<K>&, std::uint64_t);      \
  template Polynomial<K> hessian_determinant(const Polynomial<K>&);

MILNOR_INSTANTIATE(PrimeField)
MILNOR_INSTANTIATE(RationalField)

}  // namespace milnor
