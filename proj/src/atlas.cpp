#include "milnor/atlas.hpp"

#include <array>

namespace milnor {

namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  int min_degree;  // 0 for fixed polynomials
};

constexpr std::array<KindInfo, 13> kKinds{{
    {FamilyKind::Delta3, "Delta3", 0},
    {FamilyKind::D, "D", 4},
    {FamilyKind::Dp, "Dp", 5},
    {FamilyKind::Dpp, "Dpp", 4},
    {FamilyKind::Dppp, "Dppp", 5},
    {FamilyKind::CubicY12, "CubicY12", 0},
    {FamilyKind::PappusW, "PappusW", 0},
    {FamilyKind::PappusWp, "PappusWp", 0},
    {FamilyKind::PappusConeW, "PappusConeW", 0},
    {FamilyKind::PappusConeWp, "PappusConeWp", 0},
    {FamilyKind::Ex33Arrangement, "Ex33Arrangement", 0},
    {FamilyKind::Ex33Surface, "Ex33Surface", 0},
    {FamilyKind::GenericArr, "GenericArr", 4},
}};

const KindInfo& info(FamilyKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw PreconditionError("unknown family kind");
}

const std::vector<std::string> kPappusW{"x", "y", "z", "x-y", "y-z", "x-y-z", "2*x+y+z", "2*x+y-z", "-2*x+5*y-z"};
const std::vector<std::string> kPappusWp{"x",       "y",         "z",           "x+y",        "x+3*z",
                                         "y+z",     "x+2*y+z",   "x+2*y+3*z",   "4*x+6*y+6*z"};
const std::vector<std::string> kEx33{"x-y", "x+y", "x-z", "x+z", "y-z", "y+z", "w"};

/// x^a*y^b with unit exponents and zero powers dropped.
std::string xy(int a, int b) {
  auto power = [](const char* v, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
  };
  std::string px = power("x", a), py = power("y", b);
  if (px.empty()) return py.empty() ? "1" : py;
  return py.empty() ? px : px + "*" + py;
}

std::string family_text(const FamilyId& id) {
  const int d = id.d;
  const std::string base = xy(d - 1, 0) + "*z+" + xy(0, d) + "+" + xy(d - 2, 1) + "*w";
  switch (id.kind) {
    case FamilyKind::Delta3: return "y^2*z^2-4*x*z^3-4*y^3*w+18*x*y*z*w-27*x^2*w^2";
    case FamilyKind::D: return base + "+" + xy(4, d - 4);
    case FamilyKind::Dp: return base + "+" + xy(d - 5, 5);
    case FamilyKind::Dpp: return base;
    case FamilyKind::Dppp: return base + "+" + xy(1, d - 1);
    case FamilyKind::CubicY12: return "z^3-2*y*z*w+x*w^2";
    case FamilyKind::Ex33Surface: return "x^6*z+y^7+x^5*y*w+x^4*y^3";
    default: return "";
  }
}

std::vector<std::string> arrangement_forms(const FamilyId& id) {
  auto with_w = [](std::vector<std::string> v) {
    v.push_back("w");
    return v;
  };
  switch (id.kind) {
    case FamilyKind::PappusW: return kPappusW;
    case FamilyKind::PappusWp: return kPappusWp;
    case FamilyKind::PappusConeW: return with_w(kPappusW);
    case FamilyKind::PappusConeWp: return with_w(kPappusWp);
    case FamilyKind::Ex33Arrangement: return kEx33;
    case FamilyKind::GenericArr: return generic_arrangement_forms(id.d);
    default: throw PreconditionError(to_string(id) + " is not an arrangement");
  }
}

}  // namespace

std::string kind_name(FamilyKind kind) { return info(kind).name; }

std::optional<FamilyKind> kind_from_name(std::string_view name) {
  for (const auto& k : kKinds)
    if (name == k.name) return k.kind;
  return std::nullopt;
}

bool is_parametrized(FamilyKind kind) { return info(kind).min_degree > 0; }
int minimal_degree(FamilyKind kind) { return info(kind).min_degree; }

FamilyId family(FamilyKind kind, int d) {
  const auto& k = info(kind);
  if (k.min_degree == 0) {
    if (d != 0) throw PreconditionError(std::string(k.name) + " takes no degree");
    return {kind, 0};
  }
  if (d < k.min_degree)
    throw PreconditionError(std::string(k.name) + " needs d >= " + std::to_string(k.min_degree) + ", got " +
                            std::to_string(d));
  // Exponents must fit the monomial packing.
  if (d > kMaxExponent) throw ResourceLimit("degree beyond the exponent range");
  return {kind, d};
}

std::string to_string(const FamilyId& id) {
  std::string s = kind_name(id.kind);
  if (is_parametrized(id.kind)) s += "(" + std::to_string(id.d) + ")";
  return s;
}

std::vector<std::string> family_variables(const FamilyId& id) {
  if (id.kind == FamilyKind::PappusW || id.kind == FamilyKind::PappusWp) return {"x", "y", "z"};
  return {"x", "y", "z", "w"};
}

bool is_arrangement(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::PappusW:
    case FamilyKind::PappusWp:
    case FamilyKind::PappusConeW:
    case FamilyKind::PappusConeWp:
    case FamilyKind::Ex33Arrangement:
    case FamilyKind::GenericArr: return true;
    default: return false;
  }
}

std::vector<std::string> generic_arrangement_forms(int d) {
  if (d < 4) throw PreconditionError("generic arrangements start at d = 4");
  std::vector<std::string> forms{"x", "y", "z", "w", "x+y+z+w", "x+2*y+3*z+4*w"};
  forms.resize(std::min<std::size_t>(forms.size(), static_cast<std::size_t>(d)));
  auto ring = make_ring<PrimeField>({"x", "y", "z", "w"}, PrimeField(32003));
  for (long t = 2; static_cast<int>(forms.size()) < d; ++t) {
    if (t > 10000) throw ResourceLimit("no generic extension found");
    const std::string candidate = "x+" + std::to_string(t) + "*y+" + std::to_string(t * t) + "*z+" +
                                  std::to_string(t * t * t) + "*w";
    auto trial = forms;
    trial.push_back(candidate);
    std::vector<Polynomial<PrimeField>> polys;
    for (const auto& f : trial) polys.push_back(parse_polynomial(f, ring));
    try {
      if (is_generic(build_lattice(Arrangement<PrimeField>(ring, polys)))) forms = std::move(trial);
    } catch (const PreconditionError&) {
      // proportional to an earlier form
    }
  }
  return forms;
}

template <class K>
Arrangement<K> family_arrangement(const FamilyId& id, const K& field, int ambient_vars) {
  auto names = family_variables(id);
  if (ambient_vars != 0) {
    if (ambient_vars < static_cast<int>(names.size()) || ambient_vars > 4)
      throw PreconditionError("ambient ring too small for " + to_string(id));
    names = {"x", "y", "z", "w"};
    names.resize(static_cast<std::size_t>(ambient_vars));
  }
  auto ring = make_ring<K>(names, field);
  std::vector<Polynomial<K>> forms;
  for (const auto& f : arrangement_forms(id)) forms.push_back(parse_polynomial(f, ring));
  return Arrangement<K>(ring, std::move(forms));
}

template <class K>
Polynomial<K> family_polynomial(const FamilyId& id, const K& field) {
  if (is_arrangement(id.kind)) return family_arrangement(id, field).defining_polynomial();
  auto ring = make_ring<K>(family_variables(id), field);
  return parse_polynomial(family_text(id), ring);
}

template <class K>
FamilyInvariants family_invariants(const FamilyId& id, const K& field, std::uint64_t seed) {
  auto f = family_polynomial(id, field);
  return {id, f.degree(), classify_freeness(f), mixed_multiplicities(f, seed).mu};
}

std::vector<OverlapEntry> overlap_table(std::uint64_t seed) {
  using FK = FamilyKind;
  std::vector<OverlapEntry> table{
      {{family(FK::D, 4), family(FK::Dpp, 4)}, true, {}, false},
      {{family(FK::D, 5), family(FK::Dp, 5), family(FK::Dpp, 5)}, true, {}, false},
      {{family(FK::D, 6), family(FK::Dpp, 6)}, true, {}, false},
      {{family(FK::Dp, 6), family(FK::Dppp, 6)}, true, {}, false},
      {{family(FK::D, 9), family(FK::Dp, 9)}, true, {}, false},
      {{family(FK::D, 7), family(FK::Dp, 7)}, false, {}, false},
  };
  const PrimeField field(32003);
  for (auto& entry : table) {
    bool equal = true;
    for (const auto& id : entry.members) {
      entry.invariants.push_back(family_invariants(id, field, seed));
      const auto& a = entry.invariants.front();
      const auto& b = entry.invariants.back();
      equal = equal && a.degree == b.degree && a.verdict.status == b.verdict.status &&
              a.verdict.exponents == b.verdict.exponents && a.mu == b.mu;
    }
    entry.consistent = equal == entry.asserted_equal;
  }
  return table;
}

template <class K>
PreimageWitness<K> preimage_witness(const FamilyId& id, const K& field, const std::vector<typename K::Elem>& p) {
  if (id.kind != FamilyKind::D && id.kind != FamilyKind::Dp && id.kind != FamilyKind::Dpp &&
      id.kind != FamilyKind::Dppp)
    throw PreconditionError("preimage witnesses exist for D, Dp, Dpp and Dppp only");
  if (p.size() != 4) throw PreconditionError("target must have 4 coordinates");
  if (field.is_zero(p[2])) throw DegenerateTarget("target has vanishing z-coordinate");
  const auto f = family_polynomial(id, field);
  const auto grad = partial_derivatives(f);
  PreimageWitness<K> w;
  const auto scale = field.inv(p[2]);
  for (const auto& c : p) w.target.push_back(field.mul(c, scale));
  const auto& alpha = w.target[0];
  const auto& beta = w.target[1];
  const auto& delta = w.target[3];

  // f_z = x^(d-1) = 1: all roots of unity give the same projective point.
  std::vector<typename K::Elem> pt{field.one(), delta, field.zero(), field.zero()};
  // f_w = x^(d-2) y fixed y; f_y = d y^(d-1) + x^(d-2) w + (terms in x, y) fixes w.
  pt[3] = field.sub(beta, grad[1].evaluate(pt));
  // f_x = (d-1) x^(d-2) z + (terms without z) fixes z.
  pt[2] = field.div(field.sub(alpha, grad[0].evaluate(pt)), field.from_int(id.d - 1));
  w.point = pt;

  w.evaluates = true;
  for (std::size_t j = 0; j < 4; ++j) w.evaluates = w.evaluates && grad[j].evaluate(pt) == w.target[j];
  w.fiber_degree = gradient_fiber_degree(f, w.target).value_or(-1);
  return w;
}

template <class K>
PreimageWitness<K> preimage_witness(const FamilyId& id, const K& field, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<typename K::Elem> p;
    for (int i = 0; i < 4; ++i) p.push_back(random_element(field, rng));
    if (field.is_zero(p[2])) continue;
    return preimage_witness(id, field, p);
  }
  throw DegenerateTarget("16 targets with vanishing z-coordinate");
}

#define MILNOR_INSTANTIATE(K)                                                                                \
  template Arrangement<K> family_arrangement(const FamilyId&, const K&, int);                               \
  template Polynomial<K> family_polynomial(const FamilyId&, const K&);                                       \
  template FamilyInvariants family_invariants(const FamilyId&, const K&, std::uint64_t);                     \
  template PreimageWitness<K> preimage_witness(const FamilyId&, const K&, const std::vector<typename K::Elem>&); \
  template PreimageWitness<K> preimage_witness(const FamilyId&, const K&, std::uint64_t);

MILNOR_INSTANTIATE(PrimeField)
MILNOR_INSTANTIATE(RationalField)

}  // namespace milnor
