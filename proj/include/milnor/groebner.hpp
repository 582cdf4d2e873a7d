#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "milnor/detail/groebner_engine.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

/// Ideal of a polynomial ring, with reduced Groebner bases cached per order.
/// Copies share the cache; bases are deterministic, so sharing is safe.
template <class K>
class Ideal {
 public:
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> generators);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return generators_; }
  bool is_homogeneous() const;

  /// Reduced, monic basis sorted by increasing leading monomial.
  const std::vector<Polynomial<K>>& groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool contains(const Polynomial<K>& g) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::vector<Polynomial<K>>> bases;
  };
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> generators_;
  std::shared_ptr<Cache> cache_;
};

template <class K>
const std::vector<Polynomial<K>>& groebner_basis(const Ideal<K>& ideal,
                                                 const MonomialOrder& order = MonomialOrder::grevlex()) {
  return ideal.groebner_basis(order);
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& g, const Ideal<K>& ideal,
                          const MonomialOrder& order = MonomialOrder::grevlex());

/// Leading monomials of the reduced basis.
template <class K>
std::vector<Monomial> leading_monomials(const Ideal<K>& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

/// I ∩ J by elimination of an auxiliary variable t from tI + (1-t)J.
template <class K>
Ideal<K> intersection(const Ideal<K>& a, const Ideal<K>& b);

/// (I : g) = (I ∩ (g)) / g.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Polynomial<K>& g);

/// (I : J) as the intersection of the quotients by the generators of J.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Ideal<K>& j);

/// (I : J^inf) by iterating quotients until the ideal stops growing.
template <class K>
Ideal<K> saturation(const Ideal<K>& ideal, const Ideal<K>& j);

/// Monomials outside the leading-term ideal; nullopt when infinitely many.
template <class K>
std::optional<std::int64_t> standard_monomial_count(const Ideal<K>& ideal,
                                                   const MonomialOrder& order = MonomialOrder::grevlex());

/// Every S-pair of `basis` reduces to zero modulo `basis`.
template <class K>
bool satisfies_buchberger_criterion(const std::vector<Polynomial<K>>& basis,
                                    const MonomialOrder& order = MonomialOrder::grevlex());

/// Homogeneous element of a graded free module: entries[c] is homogeneous
/// of degree `degree - shifts[c]` for the module's component shifts.
template <class K>
struct GradedVector {
  std::vector<Polynomial<K>> entries;
  int degree = 0;
};

/// Minimal homogeneous generators of the syzygy module of `gens`, which live
/// in a free module with component shifts `shifts`. Each result has one
/// entry per input generator and records its total degree.
template <class K>
std::vector<GradedVector<K>> syzygies(const std::vector<GradedVector<K>>& gens, const std::vector<int>& shifts,
                                      const RingPtr<K>& ring);

/// Syzygies of homogeneous polynomials (the rank-one case).
template <class K>
std::vector<GradedVector<K>> first_syzygies(const std::vector<Polynomial<K>>& gens);

/// Indices of a minimal generating subset of homogeneous elements, chosen
/// greedily in order of increasing degree.
template <class K>
std::vector<std::size_t> minimal_generator_indices(const std::vector<GradedVector<K>>& gens,
                                                   const std::vector<int>& shifts);

/// sum_i syz.entries[i] * gens[i], entry by entry.
template <class K>
std::vector<Polynomial<K>> apply_syzygy(const GradedVector<K>& syz, const std::vector<GradedVector<K>>& gens);

namespace detail {
template <class K>
Vec<K> to_vec(const Polynomial<K>& p, std::uint32_t comp = 0);
template <class K>
Polynomial<K> from_vec(const Vec<K>& v, const RingPtr<K>& ring, std::uint32_t comp = 0);
}  // namespace detail

extern template class Ideal<PrimeField>;
extern template class Ideal<RationalField>;

}  // namespace milnor
