// Acceptance run: one PASS/FAIL line per criterion. Randomized steps are
// repeated for every (prime, seed) pair below and must agree everywhere.

#include <functional>
#include <iostream>
#include <sstream>

#include "milnor/atlas.hpp"

using namespace milnor;

namespace {

const std::uint32_t kPrimes[] = {32003, 65521};
const std::uint64_t kSeeds[] = {1, 2};
using FK = FamilyKind;
using Mu = std::vector<std::int64_t>;

/// Collects failures of one criterion.
struct Check {
  std::ostringstream failures;
  std::string note;
  int count = 0;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (count++ < 4) failures << (count > 1 ? "; " : "") << what;
  }
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

std::string where(std::uint32_t p, std::uint64_t seed) {
  return " [p=" + std::to_string(p) + " seed=" + std::to_string(seed) + "]";
}

RingPtr<PrimeField> ring4(std::uint32_t p) { return make_ring<PrimeField>({"x", "y", "z", "w"}, PrimeField(p)); }

Polynomial<PrimeField> poly(std::uint32_t p, const std::string& text) { return parse_polynomial(text, ring4(p)); }

std::vector<FamilyId> range(FK kind, int lo, int hi) {
  std::vector<FamilyId> out;
  for (int d = lo; d <= hi; ++d) out.push_back(family(kind, d));
  return out;
}

std::vector<FamilyId> family_members() {
  std::vector<FamilyId> out;
  for (auto [kind, lo, hi] : {std::tuple{FK::D, 4, 11}, std::tuple{FK::Dp, 6, 13}, std::tuple{FK::Dpp, 4, 13},
                              std::tuple{FK::Dppp, 5, 13}})
    for (const auto& id : range(kind, lo, hi)) out.push_back(id);
  return out;
}

/// Arrangements in P^3; the plane Pappus pair is read as non-essential.
std::vector<std::pair<std::string, Arrangement<PrimeField>>> space_arrangements(std::uint32_t p) {
  const PrimeField k(p);
  std::vector<std::pair<std::string, Arrangement<PrimeField>>> out;
  for (FK kind : {FK::PappusW, FK::PappusWp})
    out.emplace_back(kind_name(kind) + " lifted", family_arrangement(family(kind), k, 4));
  for (FK kind : {FK::PappusConeW, FK::PappusConeWp, FK::Ex33Arrangement})
    out.emplace_back(kind_name(kind), family_arrangement(family(kind), k));
  for (int d = 4; d <= 6; ++d) out.emplace_back(to_string(family(FK::GenericArr, d)), family_arrangement(family(FK::GenericArr, d), k));
  return out;
}

/// Every polynomial of the corpus, by name.
std::vector<std::pair<std::string, Polynomial<PrimeField>>> corpus_polynomials(std::uint32_t p) {
  const PrimeField k(p);
  std::vector<std::pair<std::string, Polynomial<PrimeField>>> out;
  for (FK kind : {FK::Delta3, FK::CubicY12, FK::Ex33Surface, FK::Ex33Arrangement, FK::PappusW, FK::PappusWp,
                  FK::PappusConeW, FK::PappusConeWp})
    out.emplace_back(kind_name(kind), family_polynomial(family(kind), k));
  for (const auto& id : family_members()) out.emplace_back(to_string(id), family_polynomial(id, k));
  for (int d = 4; d <= 6; ++d) out.emplace_back(to_string(family(FK::GenericArr, d)), family_polynomial(family(FK::GenericArr, d), k));
  out.emplace_back("smooth quadric", poly(p, "x^2+y^2+z^2+w^2"));
  out.emplace_back("Fermat cubic", poly(p, "x^3+y^3+z^3+w^3"));
  return out;
}

std::vector<mpq_class> hp(const Polynomial<PrimeField>& f) { return milnor_hilbert_data(f).hp; }

bool hp_is(const std::vector<mpq_class>& h, long c0, long c1) { return h.size() == 2 && h[0] == c0 && h[1] == c1; }

// 1. Hilbert polynomials of the Pappus pair and of its cones.
void criterion_1(Check& c) {
  for (std::uint32_t p : kPrimes) {
    const PrimeField k(p);
    c.expect(hp_is(hp(family_arrangement(family(FK::PappusW), k, 4).defining_polynomial()), -189, 45), "W lifted");
    c.expect(hp_is(hp(family_arrangement(family(FK::PappusWp), k, 4).defining_polynomial()), -190, 45), "W' lifted");
    c.expect(hp_is(hp(family_polynomial(family(FK::PappusConeW), k)), -261, 54), "cone over W");
    c.expect(hp_is(hp(family_polynomial(family(FK::PappusConeWp), k)), -262, 54), "cone over W'");
  }
}

// 2. The Ex33 pair: same Hilbert function, different mixed multiplicities.
void criterion_2(Check& c) {
  for (std::uint32_t p : kPrimes) {
    const PrimeField k(p);
    auto a = family_polynomial(family(FK::Ex33Arrangement), k);
    auto s = family_polynomial(family(FK::Ex33Surface), k);
    Ideal<PrimeField> ja(a.ring(), partial_derivatives(a)), js(s.ring(), partial_derivatives(s));
    for (int j = 0; j <= 25; ++j)
      c.expect(hilbert_function(ja, j) == hilbert_function(js, j), "H(" + std::to_string(j) + ") differs");
    for (std::uint64_t seed : kSeeds) {
      auto ma = mixed_multiplicities_checked(a, seed, 2).mu;
      auto ms = mixed_multiplicities_checked(s, seed, 2).mu;
      c.expect(ma == Mu{1, 6, 11, 6}, "arrangement mu* " + show(ma) + where(p, seed));
      c.expect(ms == Mu{1, 6, 7, 1}, "surface mu* " + show(ms) + where(p, seed));
    }
  }
}

// 3. mu*(f) = (1, d-1, d, 1) across the four families.
void criterion_3(Check& c) {
  for (std::uint32_t p : kPrimes)
    for (std::uint64_t seed : kSeeds)
      for (const auto& id : family_members()) {
        auto mu = mixed_multiplicities_checked(family_polynomial(id, PrimeField(p)), seed, 2).mu;
        c.expect(mu == Mu{1, id.d - 1, id.d, 1}, to_string(id) + " " + show(mu) + where(p, seed));
      }
}

// 4. Homaloidal verdicts and polar degrees of smooth surfaces.
void criterion_4(Check& c) {
  for (std::uint32_t p : kPrimes) {
    const PrimeField k(p);
    std::vector<std::pair<std::string, Polynomial<PrimeField>>> homaloidal{
        {"Delta3", family_polynomial(family(FK::Delta3), k)}, {"CubicY12", family_polynomial(family(FK::CubicY12), k)}};
    for (const auto& id : family_members()) homaloidal.emplace_back(to_string(id), family_polynomial(id, k));
    // Two smooth surfaces per degree; smoothness is checked, not assumed.
    const std::vector<std::string> smooth{"x^2+y^2+z^2+w^2", "x*y+z*w", "x^3+y^3+z^3+w^3",
                                          "x^3+y^3+z^3+w^3-3*x*y*z+5*y*z*w"};
    for (std::uint64_t seed : kSeeds) {
      for (const auto& [name, f] : homaloidal) c.expect(is_homaloidal(f, seed).verdict, name + where(p, seed));
      for (const auto& s : smooth) {
        auto f = poly(p, s);
        c.expect(hp(f).empty(), s + " is not smooth");
        const std::int64_t dm1 = f.degree() - 1;
        const auto w = is_homaloidal(f, seed);
        c.expect(w.polar_degree == dm1 * dm1 * dm1, s + " polar degree " + std::to_string(w.polar_degree) + where(p, seed));
        c.expect(w.verdict == (dm1 == 1), s + " verdict" + where(p, seed));
      }
    }
  }
}

FreenessVerdict expected_verdict(const FamilyId& id) {
  const int d = id.d;
  switch (id.kind) {
    case FK::D: return {d == 7 || d == 8 ? FreenessStatus::Free : FreenessStatus::NearlyFree, {}};
    case FK::Dp:
      if (d >= 10) return {FreenessStatus::Free, {1, 4, d - 6}};
      return {FreenessStatus::NearlyFree, {}};
    case FK::Dpp: return {FreenessStatus::NearlyFree, {1, 1, d - 2}};
    case FK::Dppp: return {FreenessStatus::NearlyFree, {1, 2, d - 3}};
    default: return {};
  }
}

// 5. Freeness schedule.
void criterion_5(Check& c) {
  for (std::uint32_t p : kPrimes) {
    const PrimeField k(p);
    for (const auto& id : family_members()) {
      const auto want = expected_verdict(id);
      const auto got = classify_freeness(family_polynomial(id, k));
      // For D only the free degrees are pinned down.
      const bool status_ok = id.kind == FK::D ? (got.status == FreenessStatus::Free) == (want.status == FreenessStatus::Free)
                                              : got.status == want.status;
      c.expect(status_ok, to_string(id) + " is " + to_string(got.status));
      if (!want.exponents.empty())
        c.expect(got.exponents == want.exponents, to_string(id) + " exponents " + show(got.exponents));
      int sum = 0;
      for (int e : got.exponents) sum += e;
      if (got.status == FreenessStatus::Free) c.expect(sum == id.d - 1, to_string(id) + " exponent sum");
    }
    const auto y12 = classify_freeness(family_polynomial(family(FK::CubicY12), k));
    c.expect(y12.status == FreenessStatus::Neither, "CubicY12 is " + to_string(y12.status));
  }
}

// 6. Exponents recovered from the Hilbert polynomial.
void criterion_6(Check& c) {
  for (std::uint32_t p : kPrimes) {
    int free_items = 0;
    for (const auto& [name, f] : corpus_polynomials(p)) {
      if (f.nvars() != 4) continue;
      const auto v = classify_freeness(f);
      if (v.status != FreenessStatus::Free) continue;
      ++free_items;
      try {
        auto e = exponents_from_hilbert_polynomial(hp(f), f.degree(), 3);
        c.expect(e == v.exponents, name + " recovers " + show(e) + " vs " + show(v.exponents));
      } catch (const NotFreeCompatible& e) {
        c.expect(false, name + ": " + e.what());
      }
    }
    c.expect(free_items >= 7, "only " + std::to_string(free_items) + " free items");
    const PrimeField k(p);
    std::vector<std::pair<std::string, Polynomial<PrimeField>>> pappus{
        {"W lifted", family_arrangement(family(FK::PappusW), k, 4).defining_polynomial()},
        {"W' lifted", family_arrangement(family(FK::PappusWp), k, 4).defining_polynomial()},
        {"cone over W", family_polynomial(family(FK::PappusConeW), k)},
        {"cone over W'", family_polynomial(family(FK::PappusConeWp), k)}};
    for (const auto& [name, f] : pappus) {
      bool rejected = false;
      try {
        exponents_from_hilbert_polynomial(hp(f), f.degree(), 3);
      } catch (const NotFreeCompatible&) {
        rejected = true;
      }
      c.expect(rejected, name + " accepted");
    }
  }
}

// 7. Complement Betti numbers equal mixed multiplicities.
void criterion_7(Check& c) {
  for (std::uint32_t p : kPrimes) {
    const PrimeField k(p);
    std::vector<std::pair<std::string, Arrangement<PrimeField>>> arrs;
    arrs.emplace_back("xyzw", Arrangement<PrimeField>(ring4(p), {poly(p, "x"), poly(p, "y"), poly(p, "z"), poly(p, "w")}));
    for (FK kind : {FK::PappusW, FK::PappusWp, FK::PappusConeW, FK::PappusConeWp})
      arrs.emplace_back(kind_name(kind), family_arrangement(family(kind), k));
    for (int d = 4; d <= 6; ++d) arrs.emplace_back(to_string(family(FK::GenericArr, d)), family_arrangement(family(FK::GenericArr, d), k));
    for (const auto& [name, a] : arrs) {
      const auto b = betti_complement(a);
      for (std::uint64_t seed : kSeeds) {
        const auto mu = mixed_multiplicities_checked(a.defining_polynomial(), seed, 2).mu;
        c.expect(b == mu, name + " b=" + show(b) + " mu=" + show(mu) + where(p, seed));
      }
    }
  }
}

// 8. Formula checks on arrangements in P^3.
void criterion_8(Check& c) {
  for (std::uint32_t p : kPrimes) {
    for (const auto& [name, a] : space_arrangements(p)) c.expect(check_formula_a(a).holds, "formula a fails on " + name);
    const PrimeField k(p);
    for (FK kind : {FK::PappusConeW, FK::PappusConeWp})
      c.expect(!check_formula_b(family_arrangement(family(kind), k)).holds, "formula b holds on " + kind_name(kind));
    for (int d = 4; d <= 6; ++d) {
      auto a = family_arrangement(family(FK::GenericArr, d), k);
      c.expect(check_formula_b1(a).holds, "generic formula fails at d=" + std::to_string(d));
    }
    // The explicit equations xyzw(x+y+z+w) and xyzw(x+y+z+w)(x+2y+3z+4w).
    const auto five = poly(p, "x*y*z*w") * poly(p, "x+y+z+w");
    auto six = five * poly(p, "x+2*y+3*z+4*w");
    c.expect(five == family_polynomial(family(FK::GenericArr, 5), k), "GenericArr(5) is not xyzw(x+y+z+w)");
    c.expect(six == family_polynomial(family(FK::GenericArr, 6), k), "GenericArr(6) is not the explicit sextic");
    c.expect(hp_is(hp(five), -10, 10), "hp of xyzw(x+y+z+w)");
  }
}

// 9. Delta3.
void criterion_9(Check& c) {
  for (std::uint32_t p : kPrimes) {
    const auto f = family_polynomial(family(FK::Delta3), PrimeField(p));
    const auto h = milnor_hilbert_data(f);
    c.expect(h.projective_dimension() == 1, "singular locus is not a curve");
    for (std::uint64_t seed : kSeeds) {
      const auto deg = singular_locus_reduced_degree(f, seed);
      c.expect(deg == 3, "reduced singular degree " + std::to_string(deg) + where(p, seed));
      const auto section = generic_section(f, 2, seed);
      const auto tau = total_tjurina(section);
      const auto mu = total_milnor_plane_curve(section, seed);
      c.expect(tau == 6 && mu == 6, "section tau=" + std::to_string(tau) + " mu=" + std::to_string(mu) + where(p, seed));
      const auto m = mixed_multiplicities_checked(f, seed, 2);
      c.expect(m.mu.size() == 4 && m.mu[3] == 1, "mu^3" + where(p, seed));
      c.expect(m.euler() == 0, "Euler number " + std::to_string(m.euler()) + where(p, seed));
    }
  }
}

/// Exhaustive fiber counts over P^3(F_q) against the polar degree. A target
/// counts as generic when its fiber scheme has the generic degree; for those
/// the rational points must be exactly the fiber (degree 1 forces rationality).
void fiber_oracle(Check& c) {
  for (std::uint32_t q : {41u, 101u}) {
    for (FK kind : {FK::Delta3, FK::D}) {
      const FamilyId id = kind == FK::D ? family(FK::D, 5) : family(FK::Delta3);
      const auto f = family_polynomial(id, PrimeField(q));
      const std::int64_t degree = polar_degree(family_polynomial(id, PrimeField(32003)), 1);
      FiberCounter counter(f);
      Rng rng(derive_seed(q, static_cast<std::uint64_t>(kind)));
      int generic = 0;
      const int draws = 20;
      for (int t = 0; t < draws; ++t) {
        std::vector<std::uint32_t> target(4, 0);
        while (std::all_of(target.begin(), target.end(), [](std::uint32_t v) { return v == 0; }))
          for (auto& v : target) v = static_cast<std::uint32_t>(rng.below(q));
        const auto fiber = gradient_fiber_degree(f, std::vector<PrimeField::Elem>(target.begin(), target.end()));
        const auto points = counter.count(target);
        c.expect(!fiber || points <= *fiber, to_string(id) + " more points than the fiber degree");
        if (fiber && *fiber == degree) {
          ++generic;
          c.expect(points == degree, to_string(id) + " over F_" + std::to_string(q) + ": " + std::to_string(points) +
                                         " points at target " + show(target));
        }
      }
      c.note += (c.note.empty() ? "fiber oracle generic targets:" : ",") + (" " + to_string(id)) + "/F_" +
                std::to_string(q) + " " + std::to_string(generic) + "/" + std::to_string(draws);
      c.expect(2 * generic > draws, to_string(id) + " over F_" + std::to_string(q) + ": only " +
                                        std::to_string(generic) + " generic targets");
    }
  }
}

// 10. Property suites.
void criterion_10(Check& c) {
  for (std::uint32_t p : kPrimes) {
    const PrimeField k(p);
    for (const auto& [name, f] : corpus_polynomials(p)) {
      c.expect(euler_sum(f) == f.scaled(k.from_int(f.degree())), name + " Euler identity");
      const auto gens = partial_derivatives(f);
      Ideal<PrimeField> j(f.ring(), gens);
      c.expect(satisfies_buchberger_criterion(groebner_basis(j)), name + " Buchberger criterion");
      c.expect(resolution_is_sound(f), name + " syzygies");
      if (p == kPrimes[0]) {
        const auto h = hilbert_data(j);
        for (int deg = 0; deg <= 2 * f.degree(); ++deg)
          c.expect(h.value(deg) == macaulay_hilbert_function(gens, deg), name + " H(" + std::to_string(deg) + ")");
      }
    }
    for (std::uint64_t seed : kSeeds)
      for (const auto& [name, f] : corpus_polynomials(p)) {
        if (f.nvars() != 4 || milnor_hilbert_data(f).projective_dimension() > 1) continue;
        const auto full = mixed_multiplicities(f, derive_seed(seed, 1)).mu;
        const auto a = mixed_multiplicities(generic_section(f, 2, derive_seed(seed, 2), SectionMode::Graph), derive_seed(seed, 3)).mu;
        const auto b = mixed_multiplicities(generic_section(f, 2, derive_seed(seed, 4), SectionMode::Dense), derive_seed(seed, 5)).mu;
        c.expect(a == Mu(full.begin(), full.begin() + 3) && a == b, name + " section " + show(a) + " vs " + show(b) + where(p, seed));
      }
  }
  fiber_oracle(c);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Pappus Hilbert polynomials", criterion_1},   {"Ex33 pair", criterion_2},
      {"family mixed multiplicities", criterion_3}, {"homaloidal verdicts", criterion_4},
      {"freeness schedule", criterion_5},           {"exponent roundtrip", criterion_6},
      {"Betti numbers = mu*", criterion_7},         {"arrangement formulas", criterion_8},
      {"Delta3", criterion_9},                      {"property suites", criterion_10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool pass = c.count == 0;
    failed += pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (pass ? "PASS" : "FAIL");
    if (!pass) std::cout << "  " << c.count << " failures: " << c.failures.str();
    if (!c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
