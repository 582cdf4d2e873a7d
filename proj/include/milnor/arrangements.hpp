#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "milnor/hilbert.hpp"

namespace milnor {

/// Central arrangement of hyperplanes given by pairwise non-proportional
/// linear forms.
template <class K>
class Arrangement {
 public:
  Arrangement(RingPtr<K> ring, std::vector<Polynomial<K>> forms);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& forms() const { return forms_; }
  int size() const { return static_cast<int>(forms_.size()); }
  /// Product of the forms.
  Polynomial<K> defining_polynomial() const;
  /// Coefficient vector of form i.
  const std::vector<typename K::Elem>& normal(int i) const { return normals_[static_cast<std::size_t>(i)]; }

 private:
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> forms_;
  std::vector<std::vector<typename K::Elem>> normals_;
};

/// One form per non-blank line; `#` starts a comment.
template <class K>
Arrangement<K> parse_arrangement(std::string_view text, const RingPtr<K>& ring);

struct Flat {
  /// Indices of the forms vanishing on the flat, ascending.
  std::vector<int> forms;
  int codim = 0;
  std::int64_t moebius = 0;
};

struct IntersectionLattice {
  /// flats[k] lists the flats of codimension k; flats[0] is the whole space.
  std::vector<std::vector<Flat>> flats;

  int rank() const { return static_cast<int>(flats.size()) - 1; }
  /// For codimension k: number of flats on each number of forms.
  std::map<int, int> multiplicities(int codim) const;
  /// Sum of |moebius| per codimension: the Poincare polynomial of the
  /// complement of the central arrangement.
  std::vector<std::int64_t> central_poincare() const;
};

template <class K>
IntersectionLattice build_lattice(const Arrangement<K>& a);

/// Betti numbers b_0..b_n of the complement in P^n: the central Poincare
/// polynomial divided by 1 + t, padded to length n + 1.
template <class K>
std::vector<std::int64_t> betti_complement(const Arrangement<K>& a);

std::vector<std::int64_t> betti_complement(const IntersectionLattice& lattice, int nvars);

struct FormulaCheck {
  mpq_class lhs;
  mpq_class rhs;
  bool holds = false;
};

/// Leading Hilbert coefficient of the Milnor algebra against sum_E (k_E - 1)^2
/// over the codimension-2 flats. Arrangements in P^3 only.
template <class K>
FormulaCheck check_formula_a(const Arrangement<K>& a);

/// Constant Hilbert coefficient against [(d-1)^3 - (3d-7) a - b_3] / 2 with
/// a = (d-1)^2 - b_2. May fail; that is the expected outcome for non-free
/// arrangements.
template <class K>
FormulaCheck check_formula_b(const Arrangement<K>& a);

/// Constant Hilbert coefficient against the closed form for generic
/// arrangements of d planes in P^3. Throws NotGeneric unless every flat of
/// codimension k <= 3 lies on exactly k planes.
template <class K>
FormulaCheck check_formula_b1(const Arrangement<K>& a);

/// The closed form [(d-1)^3 - (3d-7)(d-1)d/2 - C(d,3) + C(d,2) - d + 1] / 2.
mpq_class generic_constant_term(int d);

/// Every flat of codimension k <= 3 lies on exactly k forms.
bool is_generic(const IntersectionLattice& lattice);

extern template class Arrangement<PrimeField>;
extern template class Arrangement<RationalField>;

}  // namespace milnor
