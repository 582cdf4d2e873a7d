#pragma once

// Buchberger engine over submodules of free modules S^r. Ideals are the
// rank-one case. Terms carry a component index; the module order either
// compares (shifted degree, grevlex, component) or defers to a plain
// monomial order for rank-one eliminations.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "milnor/field.hpp"
#include "milnor/monomial.hpp"

namespace milnor::detail {

template <class K>
struct VTerm {
  Monomial m;
  std::uint32_t comp = 0;
  typename K::Elem c;
};

template <class K>
using Vec = std::vector<VTerm<K>>;

struct ModuleOrder {
  MonomialOrder mono;
  /// Degree shift per component; missing entries count as zero.
  std::vector<int> shifts;
  /// Components below `block` dominate every other component (elimination
  /// of the first `block` components). Zero disables.
  std::uint32_t block = 0;

  int shift(std::uint32_t c) const { return c < shifts.size() ? shifts[c] : 0; }
  int weighted_degree(const Monomial& m, std::uint32_t c) const {
    return static_cast<int>(m.deg) + (mono.degree_compatible() ? shift(c) : 0);
  }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (block) {
      bool in_a = ca < block, in_b = cb < block;
      if (in_a != in_b) return in_a ? 1 : -1;
    }
    if (mono.degree_compatible()) {
      int da = static_cast<int>(a.deg) + shift(ca), db = static_cast<int>(b.deg) + shift(cb);
      if (da != db) return da > db ? 1 : -1;
      if (int r = MonomialOrder::compare_grevlex(a, b)) return r;
    } else {
      if (int r = mono.compare(a, b)) return r;
    }
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
};

struct EngineOptions {
  std::size_t max_pairs = 200000;
};

struct EngineStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

template <class K>
class GroebnerEngine {
 public:
  using Elem = typename K::Elem;

  GroebnerEngine(K field, ModuleOrder order, EngineOptions options = {});
  ~GroebnerEngine();
  GroebnerEngine(const GroebnerEngine&) = delete;
  GroebnerEngine& operator=(const GroebnerEngine&) = delete;

  /// Queues an input element. Inputs are processed after all S-pairs of
  /// the same sugar degree, which makes `minimal_inputs` exact for
  /// homogeneous data.
  void add_input(Vec<K> v);
  void run();
  /// Installs an existing Groebner basis as reducers, without forming pairs.
  void adopt_basis(std::vector<Vec<K>> basis);

  /// Reduced basis (monic, inter-reduced), sorted by increasing leading term.
  std::vector<Vec<K>> reduced_basis() const;
  /// Indices of inputs that did not reduce to zero when processed.
  const std::vector<std::size_t>& minimal_inputs() const { return minimal_inputs_; }
  /// Full normal form with respect to the current basis.
  Vec<K> normal_form(Vec<K> v) const;

  const ModuleOrder& order() const { return order_; }
  const K& field() const { return field_; }
  const EngineStats& stats() const { return stats_; }

  /// Sorts into decreasing order for this engine and merges equal terms.
  void canonicalize(Vec<K>& v) const;

 private:
  struct Impl;
  Impl* impl_;
  K field_;
  ModuleOrder order_;
  EngineOptions options_;
  EngineStats stats_;
  std::vector<std::size_t> minimal_inputs_;
};

/// Reduced Groebner basis of the given elements.
template <class K>
std::vector<Vec<K>> groebner(const K& field, const ModuleOrder& order, std::vector<Vec<K>> gens,
                             EngineOptions options = {});

/// Checks that every S-pair of `basis` reduces to zero (Buchberger's criterion).
template <class K>
bool satisfies_buchberger_criterion(const K& field, const ModuleOrder& order, const std::vector<Vec<K>>& basis);

extern template class GroebnerEngine<PrimeField>;
extern template class GroebnerEngine<RationalField>;

}  // namespace milnor::detail
