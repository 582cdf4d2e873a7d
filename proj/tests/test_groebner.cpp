#include "doctest.h"

#include "milnor/groebner.hpp"
#include "support.hpp"

using namespace milnor;
using namespace testing_support;

TEST_CASE("basis of a monomial ideal is its generators") {
  auto r = ring4();
  Ideal<PrimeField> j(r, partial_derivatives(P(r, "x*y*z*w")));
  auto gb = j.groebner_basis();
  REQUIRE(gb.size() == 4);
  for (const auto& g : j.generators()) CHECK(std::find(gb.begin(), gb.end(), g) != gb.end());
}

TEST_CASE("two variables already form a basis") {
  auto r = ring2();
  Ideal<PrimeField> i(r, {P(r, "x"), P(r, "y")});
  auto gb = i.groebner_basis();
  REQUIRE(gb.size() == 2);
  CHECK(gb[0].to_string() == "y");
  CHECK(gb[1].to_string() == "x");
}

TEST_CASE("twisted cubic relation under lex") {
  auto r = make_ring<RationalField>({"x", "y", "z"}, RationalField());
  Ideal<RationalField> i(r, {P(r, "x^2-y"), P(r, "x^3-z")});
  auto gb = i.groebner_basis(MonomialOrder::lex());
  auto rel = P(r, "y^3-z^2");
  bool found = false;
  for (const auto& g : gb) found = found || g == rel || g == -rel;
  CHECK(found);
  CHECK(satisfies_buchberger_criterion(gb, MonomialOrder::lex()));
}

TEST_CASE("normal forms") {
  auto r = ring2();
  Ideal<PrimeField> i(r, {P(r, "x^2-y")});
  CHECK(normal_form(P(r, "x^3"), i).to_string() == "x*y");
  CHECK(normal_form(P(r, "x^2-y"), i).is_zero());
  CHECK(normal_form(P(r, "1"), i).to_string() == "1");
}

TEST_CASE("ideal quotients") {
  auto r = ring2();
  Ideal<PrimeField> xy(r, {P(r, "x*y")});
  CHECK(ideal_quotient(xy, P(r, "x")) == Ideal<PrimeField>(r, {P(r, "y")}));
  CHECK(ideal_quotient(xy, P(r, "1")) == xy);
  Ideal<PrimeField> i(r, {P(r, "x^2"), P(r, "x*y")});
  auto q = ideal_quotient(i, P(r, "x"));
  CHECK(q == Ideal<PrimeField>(r, {P(r, "x"), P(r, "y")}));
  for (const auto& h : q.generators()) CHECK(normal_form(h * P(r, "x"), i).is_zero());
}

TEST_CASE("saturation") {
  auto r = ring2();
  Ideal<PrimeField> i(r, {P(r, "x^2*y")});
  Ideal<PrimeField> x(r, {P(r, "x")});
  CHECK(saturation(i, x) == Ideal<PrimeField>(r, {P(r, "y")}));
  CHECK(saturation(i, Ideal<PrimeField>(r, {P(r, "1")})) == i);
}

TEST_CASE("standard monomial counts") {
  auto r = ring2();
  CHECK(standard_monomial_count(Ideal<PrimeField>(r, {P(r, "x^2"), P(r, "y^2")})) == 4);
  CHECK(!standard_monomial_count(Ideal<PrimeField>(r, {P(r, "x")})).has_value());
  auto cusp = P(r, "x^2-y^3");
  CHECK(standard_monomial_count(Ideal<PrimeField>(r, partial_derivatives(cusp))) == 2);
}

TEST_CASE("Koszul syzygy") {
  auto r = ring2();
  auto syz = first_syzygies<PrimeField>({P(r, "x"), P(r, "y")});
  REQUIRE(syz.size() == 1);
  CHECK(syz[0].degree == 2);
  CHECK(syz[0].entries[0].degree() == 1);
  auto zero = apply_syzygy<PrimeField>(syz[0], {{{P(r, "x")}, 1}, {{P(r, "y")}, 1}});
  CHECK(zero[0].is_zero());
}

TEST_CASE("syzygies of the degree-7 free arrangement") {
  auto r = ring4();
  auto f = (P(r, "x^2-y^2") * P(r, "x^2-z^2")) * (P(r, "y^2-z^2") * P(r, "w"));
  auto gens = partial_derivatives(f);
  auto syz = first_syzygies(gens);
  std::vector<int> degs;
  for (const auto& s : syz) degs.push_back(s.degree - 6);
  CHECK(degs == std::vector<int>{1, 2, 3});
  std::vector<GradedVector<PrimeField>> g;
  for (const auto& p : gens) g.push_back({{p}, 6});
  for (const auto& s : syz) CHECK(apply_syzygy(s, g)[0].is_zero());
}

TEST_CASE("syzygies of the free surface of degree 7") {
  auto r = ring4();
  auto gens = partial_derivatives(P(r, "x^6*z+y^7+x^5*y*w+x^4*y^3"));
  auto syz = first_syzygies(gens);
  std::vector<int> degs;
  for (const auto& s : syz) degs.push_back(s.degree - 6);
  CHECK(degs == std::vector<int>{1, 2, 3});
}
