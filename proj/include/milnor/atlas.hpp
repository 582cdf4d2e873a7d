#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/arrangements.hpp"
#include "milnor/polar.hpp"
#include "milnor/resolution.hpp"

namespace milnor {

enum class FamilyKind {
  Delta3,
  D,
  Dp,
  Dpp,
  Dppp,
  CubicY12,
  PappusW,
  PappusWp,
  PappusConeW,
  PappusConeWp,
  Ex33Arrangement,
  Ex33Surface,
  GenericArr,
};

struct FamilyId {
  FamilyKind kind = FamilyKind::Delta3;
  /// Degree for the parametrized kinds (D, Dp, Dpp, Dppp, GenericArr); 0 otherwise.
  int d = 0;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Names as accepted on the command line: Delta3, D, Dp, Dpp, Dppp,
/// CubicY12, PappusW, PappusWp, PappusConeW, PappusConeWp, Ex33Arrangement,
/// Ex33Surface, GenericArr.
std::string kind_name(FamilyKind kind);
std::optional<FamilyKind> kind_from_name(std::string_view name);
bool is_parametrized(FamilyKind kind);
/// Least admissible degree of a parametrized family.
int minimal_degree(FamilyKind kind);

/// Builds an id, checking degree bounds (PreconditionError otherwise).
FamilyId family(FamilyKind kind, int d = 0);
/// "D(7)", "Delta3", ...
std::string to_string(const FamilyId& id);

/// Ring of the family: (x,y,z) for the plane Pappus arrangements, (x,y,z,w)
/// otherwise.
std::vector<std::string> family_variables(const FamilyId& id);

template <class K>
Polynomial<K> family_polynomial(const FamilyId& id, const K& field);

bool is_arrangement(FamilyKind kind);

/// The hyperplanes of an arrangement family. With `ambient_vars` = 4 the plane
/// Pappus arrangements are read in P^3 as non-essential arrangements.
template <class K>
Arrangement<K> family_arrangement(const FamilyId& id, const K& field, int ambient_vars = 0);

/// Linear forms of GenericArr(d): coordinate planes, x+y+z+w, x+2y+3z+4w,
/// then moment-curve planes, skipping any that would break genericity.
std::vector<std::string> generic_arrangement_forms(int d);

struct FamilyInvariants {
  FamilyId id;
  int degree = 0;
  FreenessVerdict verdict;
  std::vector<std::int64_t> mu;
};

template <class K>
FamilyInvariants family_invariants(const FamilyId& id, const K& field, std::uint64_t seed);

struct OverlapEntry {
  std::vector<FamilyId> members;
  /// True for the identities asserted up to projective equivalence; false for
  /// control pairs that must differ.
  bool asserted_equal = true;
  std::vector<FamilyInvariants> invariants;
  /// Equal invariants iff asserted_equal.
  bool consistent = false;
};

/// D_4 = D''_4, D_5 = D'_5 = D''_5, D_6 = D''_6, D'_6 = D'''_6, D_9 = D'_9,
/// checked at the level of degree, verdict, exponents and mu*, plus the
/// control pair D_7 vs D'_7.
std::vector<OverlapEntry> overlap_table(std::uint64_t seed);

template <class K>
struct PreimageWitness {
  /// Target normalized so that its third coordinate is 1.
  std::vector<typename K::Elem> target;
  std::vector<typename K::Elem> point;
  /// grad f(point) is proportional to the target.
  bool evaluates = false;
  /// Degree of the saturated fiber ideal over the target.
  std::int64_t fiber_degree = 0;
  bool unique() const { return evaluates && fiber_degree == 1; }
};

/// Solves grad f = p for a member of D, Dp, Dpp, Dppp in the order
/// f_z, f_w, f_y, f_x, then verifies by evaluation and by the fiber degree.
/// Throws DegenerateTarget when p_z = 0.
template <class K>
PreimageWitness<K> preimage_witness(const FamilyId& id, const K& field, const std::vector<typename K::Elem>& p);

/// Same with a random target drawn from `seed`.
template <class K>
PreimageWitness<K> preimage_witness(const FamilyId& id, const K& field, std::uint64_t seed);

}  // namespace milnor
