#include "doctest.h"

#include "milnor/polar.hpp"
#include "support.hpp"

using namespace milnor;
using namespace testing_support;

namespace {

const char* kDelta3 = "y^2*z^2-4*x*z^3-4*y^3*w+18*x*y*z*w-27*x^2*w^2";

std::string d_family(int d) {
  auto s = [](int k) { return std::to_string(k); };
  return "x^" + s(d - 1) + "*z+y^" + s(d) + "+x^" + s(d - 2) + "*y*w+x^4" + (d > 4 ? "*y^" + s(d - 4) : "");
}

std::string dpp_family(int d) {
  auto s = [](int k) { return std::to_string(k); };
  return "x^" + s(d - 1) + "*z+y^" + s(d) + "+x^" + s(d - 2) + "*y*w";
}

template <class K>
Polynomial<K> product(const RingPtr<K>& r, const std::vector<std::string>& factors) {
  Polynomial<K> out = Polynomial<K>::constant(r, r->field().one());
  for (const auto& f : factors) out = out * P(r, f);
  return out;
}

Polynomial<PrimeField> random_arrangement(const RingPtr<PrimeField>& r, int count, std::uint64_t seed) {
  Rng rng(seed);
  Polynomial<PrimeField> out = Polynomial<PrimeField>::constant(r, 1);
  for (int k = 0; k < count; ++k) {
    std::vector<Term<PrimeField>> terms;
    for (int i = 0; i < r->nvars(); ++i) terms.push_back({Monomial::variable(i), random_element(r->field(), rng)});
    out = out * Polynomial<PrimeField>(r, terms);
  }
  return out;
}

}  // namespace

TEST_CASE("polar degree of smooth forms is (d-1)^n") {
  auto r = ring4();
  CHECK(polar_degree(P(r, "x^2+y^2+z^2+w^2"), 1) == 1);
  CHECK(polar_degree(P(r, "x^3+y^3+z^3+w^3"), 1) == 8);
  CHECK(polar_degree(P(r, "x*y+z*w"), 2) == 1);
  auto r3 = ring3();
  CHECK(polar_degree(P(r3, "x^4+y^4+z^4"), 3) == 9);
  auto m = mixed_multiplicities(P(r, "x^3+y^3+z^3+w^3"), 4);
  CHECK(m.mu == std::vector<std::int64_t>{1, 2, 4, 8});
  CHECK(m.euler() == -5);
  CHECK(mixed_multiplicities(P(r, "x^2+y^2+z^2+w^2"), 5).mu == std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("polar degree routes agree") {
  auto r = ring4();
  for (const std::string& s : {std::string(kDelta3), std::string("z^3-2*y*z*w+x*w^2"), std::string("x^3+y^3+z^3+w^3"),
                               d_family(5), std::string("x*y*z*w")}) {
    auto f = P(r, s);
    CHECK_MESSAGE(polar_degree(f, 3) == polar_degree_by_minors(f, 8), s);
  }
}

TEST_CASE("non-dominant gradient maps have polar degree zero") {
  auto r = ring4();
  auto cone = P(r, "x^3+y^3+z^3");
  CHECK(polar_degree(cone, 1) == 0);
  CHECK(polar_degree_by_minors(cone, 1) == 0);
  auto w = is_homaloidal(cone, 1);
  CHECK_FALSE(w.dominant);
  CHECK_FALSE(w.verdict);
}

TEST_CASE("mixed multiplicities of the named surfaces") {
  auto r = ring4();
  auto delta = mixed_multiplicities(P(r, kDelta3), 11);
  CHECK(delta.mu == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(delta.euler() == 0);
  auto arr = product(r, {"x^2-y^2", "x^2-z^2", "y^2-z^2", "w"});
  CHECK(mixed_multiplicities(arr, 12).mu == std::vector<std::int64_t>{1, 6, 11, 6});
  CHECK(mixed_multiplicities(P(r, "x^6*z+y^7+x^5*y*w+x^4*y^3"), 13).mu == std::vector<std::int64_t>{1, 6, 7, 1});
  CHECK(mixed_multiplicities(P(r, "z^3-2*y*z*w+x*w^2"), 14).mu == std::vector<std::int64_t>{1, 2, 3, 1});
  for (int d = 4; d <= 11; ++d) {
    auto m = mixed_multiplicities_checked(P(r, d_family(d)), 15, 2);
    const std::vector<std::int64_t> expected{1, d - 1, d, 1};
    CHECK_MESSAGE(m.mu == expected, d);
    CHECK(m.euler() == 1);
  }
}

TEST_CASE("mu^1 is d-1 for reduced forms") {
  auto r = ring4();
  for (const char* s : {"x*y*z*w", kDelta3, "x^6*z+y^7+x^5*y*w+x^4*y^3", "x^5+y^5+z^5+w^5"}) {
    auto f = P(r, s);
    CHECK(mixed_multiplicities(f, 2).mu[1] == f.degree() - 1);
  }
}

TEST_CASE("sections are stable across independent draws") {
  auto r = ring4();
  for (const std::string& s : {std::string(kDelta3), d_family(6), std::string("x^6*z+y^7+x^5*y*w+x^4*y^3")}) {
    auto f = P(r, s);
    auto full = mixed_multiplicities(f, 21).mu;
    auto a = mixed_multiplicities(generic_section(f, 2, 22, SectionMode::Graph), 23).mu;
    auto b = mixed_multiplicities(generic_section(f, 2, 24, SectionMode::Dense), 25).mu;
    CHECK(a == std::vector<std::int64_t>(full.begin(), full.begin() + 3));
    CHECK(b == a);
  }
}

TEST_CASE("generic sections") {
  auto r = ring4();
  auto conic = generic_section(P(r, "x^2+y^2+z^2+w^2"), 2, 1);
  CHECK(conic.nvars() == 3);
  CHECK(total_tjurina(conic) == 0);
  CHECK(total_milnor_plane_curve(conic, 2) == 0);

  auto quartic = generic_section(P(r, kDelta3), 2, 3);
  CHECK(quartic.degree() == 4);
  CHECK(total_milnor_plane_curve(quartic, 4) == 6);
  CHECK(total_tjurina(quartic) == 6);

  // Five generic planes cut a generic plane in five lines with C(5,2) nodes.
  auto lines = generic_section(random_arrangement(r, 5, 77), 2, 5);
  CHECK(total_milnor_plane_curve(lines, 6) == 10);
  CHECK(total_tjurina(lines) == 10);

  CHECK_THROWS_AS(generic_section(P(r, kDelta3), 3, 1), PreconditionError);
  CHECK_THROWS_AS(generic_section(P(r, kDelta3), 0, 1), PreconditionError);
}

TEST_CASE("total Milnor number of plane curves") {
  auto r = ring3();
  CHECK(total_milnor_plane_curve(P(r, "y^2*z-x^3"), 1) == 2);       // cusp
  CHECK(total_milnor_plane_curve(P(r, "y^2*z-x^3-x^2*z"), 1) == 1);  // node
  CHECK(total_milnor_plane_curve(P(r, "x*y*z"), 1) == 3);
  // Three concurrent lines: one ordinary triple point, mu = 4.
  CHECK(total_milnor_plane_curve(product(r, {"x", "y", "x-y"}), 1) == 4);
  auto pappus = product(r, {"x", "y", "z", "x-y", "y-z", "x-y-z", "2*x+y+z", "2*x+y-z", "-2*x+5*y-z"});
  CHECK(total_milnor_plane_curve(pappus, 2) == 9 * 1 + 9 * 4);
  CHECK_THROWS_AS(total_milnor_plane_curve(P(r, "x^2*y"), 1), NonIsolatedSingularities);
}

TEST_CASE("isolated-singularity law on curves: mu^2 = (d-1)^2 - mu(C)") {
  auto r = ring3();
  for (const char* s : {"y^2*z-x^3", "y^2*z-x^3-x^2*z", "x*y*z", "x^4+y^4+z^4", "y^4-x^3*z"}) {
    auto f = P(r, s);
    const std::int64_t d = f.degree();
    CHECK_MESSAGE(polar_degree(f, 9) == (d - 1) * (d - 1) - total_milnor_plane_curve(f, 10), s);
  }
}

TEST_CASE("surface identity with the plane section") {
  auto r = ring4();
  for (const std::string& s : {std::string(kDelta3), d_family(5), d_family(8), std::string("z^3-2*y*z*w+x*w^2")}) {
    auto f = P(r, s);
    const std::int64_t d = f.degree();
    auto m = mixed_multiplicities(f, 31);
    const std::int64_t mu_c = total_milnor_plane_curve(generic_section(f, 2, 32), 33);
    CHECK_MESSAGE(m.mu[2] == (d - 1) * (d - 1) - mu_c, s);
    CHECK_MESSAGE(m.mu[3] == 1 + (d - 1) * (d - 2) - mu_c - m.euler(), s);
  }
}

TEST_CASE("homaloidal verdicts") {
  auto r = ring4();
  auto delta = is_homaloidal(P(r, kDelta3), 1);
  CHECK(delta.verdict);
  CHECK(delta.dominant);
  CHECK(is_homaloidal(P(r, "z^3-2*y*z*w+x*w^2"), 2).verdict);
  for (int d = 4; d <= 13; ++d) CHECK_MESSAGE(is_homaloidal(P(r, dpp_family(d)), 3).verdict, d);
  auto cubic = is_homaloidal(P(r, "x^3+y^3+z^3+w^3"), 4);
  CHECK_FALSE(cubic.verdict);
  CHECK(cubic.polar_degree == 8);
  CHECK_THROWS_AS(is_homaloidal(P(r, "x+y"), 1), PreconditionError);
}

TEST_CASE("exact rational mode") {
  auto r = qring4();
  CHECK(polar_degree(P(r, kDelta3), 1) == 1);
  CHECK(polar_degree(P(r, "x^2+y^2+z^2+w^2"), 1) == 1);
  CHECK(mixed_multiplicities(P(r, "x^4*z+y^5+x^3*y*w+x^4*y"), 2).mu == std::vector<std::int64_t>{1, 4, 5, 1});
}

TEST_CASE("finite-field fiber enumeration agrees with the polar degree") {
  for (std::uint32_t p : {41u, 101u}) {
    auto r = ring4(p);
    for (const std::string& s : {std::string(kDelta3), d_family(5)}) {
      const std::int64_t expected = polar_degree(P(ring4(), s), 1);
      FiberCounter counter(P(r, s));
      Rng rng(p * 7 + s.size());
      int agree = 0;
      for (int draw = 0; draw < 10; ++draw) {
        std::vector<std::uint32_t> q(4, 0);
        while (std::all_of(q.begin(), q.end(), [](std::uint32_t v) { return v == 0; }))
          for (auto& v : q) v = static_cast<std::uint32_t>(rng.below(p));
        agree += counter.count(q) == expected;
      }
      CHECK_MESSAGE(agree >= 7, s << " over F_" << p << ": " << agree << "/10");
    }
  }
}

TEST_CASE("fiber enumeration on a smooth quadric") {
  // grad f = 2x is a bijection of P^3(F_p), so every fiber has one point.
  auto r = ring4(41);
  FiberCounter counter(P(r, "x^2+y^2+z^2+w^2"));
  CHECK(counter.count({1, 2, 3, 4}) == 1);
  CHECK(counter.count({0, 0, 0, 5}) == 1);
  CHECK_THROWS_AS(counter.count({0, 0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(FiberCounter(P(ring4(), "x^2")), PreconditionError);
}

TEST_CASE("reduced degree of singular loci") {
  auto r = ring4();
  auto jac = Ideal<PrimeField>(r, partial_derivatives(P(r, kDelta3)));
  auto scheme = quotient_dimension_degree(jac);
  CHECK(scheme.dimension == 1);
  CHECK(scheme.degree == 6);
  CHECK(singular_locus_reduced_degree(P(r, kDelta3), 1) == 3);
  CHECK(singular_locus_reduced_degree(P(r, kDelta3), 2) == 3);

  // A double line has scheme degree 2 and one reduced component of degree 1.
  Ideal<PrimeField> double_line(r, {P(r, "x^2"), P(r, "y")});
  CHECK(quotient_dimension_degree(double_line).degree == 2);
  CHECK(reduced_degree(double_line, 3) == 1);
  Ideal<PrimeField> twisted(r, {P(r, "x*z-y^2"), P(r, "x*w-y*z"), P(r, "y*w-z^2")});
  CHECK(reduced_degree(twisted, 4) == 3);
  Ideal<PrimeField> skew(r, {P(r, "x*z"), P(r, "x*w"), P(r, "y*z"), P(r, "y*w")});
  CHECK(reduced_degree(skew, 5) == 2);
  // Family members are singular along the line x = y = 0 only.
  for (int d : {5, 9, 13}) CHECK(singular_locus_reduced_degree(P(r, d_family(d)), 6) == 1);

  // Slices that land in P^1: non-reduced plane curves.
  auto r3 = ring3();
  CHECK(singular_locus_reduced_degree(P(r3, "x^2*y^2*z^2"), 7) == 3);
  CHECK(singular_locus_reduced_degree(P(r3, "x^2*y^2*z+y^5"), 7) == 1);
  Ideal<PrimeField> triple_point(r3, {P(r3, "x^3"), P(r3, "y")});
  CHECK(quotient_dimension_degree(triple_point).degree == 3);
  CHECK(reduced_degree(triple_point, 8) == 1);
}
