#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/hilbert.hpp"
#include "milnor/transforms.hpp"

namespace milnor {

enum class SectionMode {
  /// Restrict to the graph x_j = sum_{i<=m} r_ji x_i (j > m) of a random
  /// linear map; keeps sparse inputs sparse.
  Graph,
  /// f o A for a random invertible A, then x_j = 0 for j > m.
  Dense,
};

/// f restricted to a random m-dimensional linear subspace of P^n, as a
/// polynomial in the first m+1 variables. Redraws (up to 8 times) until the
/// section is reduced, which is read off its Jacobian scheme.
template <class K>
Polynomial<K> generic_section(const Polynomial<K>& f, int m, std::uint64_t seed, SectionMode mode = SectionMode::Graph);

/// Degree of the gradient map x -> grad f(x): the number of points of
/// P^n over a random target q, counted as the length of the affine scheme
/// grad f = q divided by d - 1. Two targets must agree. Returns 0 when the
/// fiber is empty (gradient map not dominant).
template <class K>
std::int64_t polar_degree(const Polynomial<K>& f, std::uint64_t seed);

/// Same invariant through the ideal of 2x2 minors of (grad f ; q), saturated
/// by a partial derivative f_k with q_k != 0, whose degree is read from its
/// Hilbert polynomial. Slower; used as an independent check.
template <class K>
std::int64_t polar_degree_by_minors(const Polynomial<K>& f, std::uint64_t seed);

/// Degree of the fiber over the given target q through the saturated minor
/// ideal; nullopt when that fiber is positive-dimensional.
template <class K>
std::optional<std::int64_t> gradient_fiber_degree(const Polynomial<K>& f, const std::vector<typename K::Elem>& q);

struct MixedMultSeq {
  std::vector<std::int64_t> mu;
  std::vector<std::uint64_t> seeds;
  /// Alternating sum, recomputed from mu.
  std::int64_t euler() const;
};

/// mu^0 = 1, mu^i = polar degree of a generic section to P^i, mu^n = polar
/// degree of f.
template <class K>
MixedMultSeq mixed_multiplicities(const Polynomial<K>& f, std::uint64_t seed);

/// Repeats `mixed_multiplicities` for `trials` independent seeds and
/// requires agreement; throws GenericityFailure otherwise.
template <class K>
MixedMultSeq mixed_multiplicities_checked(const Polynomial<K>& f, std::uint64_t seed, int trials);

/// Sum of the local Milnor numbers of a reduced plane curve with isolated
/// singularities: D - D_off in a generic affine chart, with D the length of
/// (h_x, h_y) and D_off that of its saturation by h.
template <class K>
std::int64_t total_milnor_plane_curve(const Polynomial<K>& f, std::uint64_t seed);

struct HomaloidalWitness {
  bool verdict = false;
  bool dominant = false;
  std::int64_t polar_degree = 0;
  std::uint64_t seed = 0;
};

template <class K>
HomaloidalWitness is_homaloidal(const Polynomial<K>& f, std::uint64_t seed);

/// Number of distinct points of a generic linear section of Proj(S/I) of
/// complementary dimension, i.e. the degree of the reduced top-dimensional
/// part. Uses the minimal polynomial of a generic linear form in the finite
/// algebra of the section.
std::int64_t reduced_degree(const Ideal<PrimeField>& ideal, std::uint64_t seed);

/// Degree of the reduced singular locus of V(f).
std::int64_t singular_locus_reduced_degree(const Polynomial<PrimeField>& f, std::uint64_t seed);

/// Exhaustive count over P^n(F_p): for each target q, the number of points
/// x with grad f(x) nonzero and proportional to q.
class FiberCounter {
 public:
  /// f must live over a prime field with p < 128 and in at most 4 variables.
  explicit FiberCounter(const Polynomial<PrimeField>& f);
  std::int64_t count(const std::vector<std::uint32_t>& q) const;
  std::uint32_t characteristic() const { return p_; }
  int nvars() const { return n_; }

 private:
  std::size_t index_of(const std::vector<std::uint32_t>& v) const;
  std::uint32_t p_;
  int n_;
  std::vector<std::uint32_t> counts_;
};

}  // namespace milnor
