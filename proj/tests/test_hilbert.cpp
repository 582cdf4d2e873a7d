#include "doctest.h"

#include "milnor/hilbert.hpp"
#include "support.hpp"

using namespace milnor;
using namespace testing_support;

namespace {

std::vector<std::int64_t> hp_ints(const HilbertData& h) {
  std::vector<std::int64_t> out;
  for (const auto& c : h.hp) {
    REQUIRE(c.get_den() == 1);
    out.push_back(c.get_num().get_si());
  }
  return out;
}

Polynomial<PrimeField> free_arrangement(const RingPtr<PrimeField>& r) {
  return (P(r, "x^2-y^2") * P(r, "x^2-z^2")) * (P(r, "y^2-z^2") * P(r, "w"));
}

}  // namespace

TEST_CASE("Hilbert function of the polynomial ring") {
  auto r = ring4();
  Ideal<PrimeField> zero(r, {});
  CHECK(hilbert_function(zero, 2) == 10);
  auto h = hilbert_data(zero);
  CHECK(h.krull_dimension() == 4);
  CHECK(h.degree() == 1);
}

TEST_CASE("Milnor algebra of xyzw") {
  auto r = ring4();
  auto f = P(r, "x*y*z*w");
  Ideal<PrimeField> j(r, partial_derivatives(f));
  CHECK(hilbert_function(j, 3) == 16);
  CHECK(macaulay_hilbert_function(partial_derivatives(f), 3) == 16);
  auto h = hilbert_data(j);
  CHECK(hp_ints(h) == std::vector<std::int64_t>{-2, 6});
  for (int k = 0; k <= h.k0 + 5; ++k) CHECK(h.value(k) == hilbert_function(j, k));
  for (int k = h.k0; k <= h.k0 + 10; ++k) CHECK(mpq_class(h.value(k)) == h.hp_at(k));
  if (h.k0 > 0) CHECK(mpq_class(h.value(h.k0 - 1)) != h.hp_at(h.k0 - 1));
}

TEST_CASE("smooth quadric has an Artinian Milnor algebra") {
  auto r = ring4();
  auto h = milnor_hilbert_data(P(r, "x^2+y^2+z^2+w^2"));
  CHECK(h.hp.empty());
  CHECK(h.value(5) == 0);
  CHECK(h.value(0) == 1);
  CHECK(h.value(1) == 0);
  Ideal<PrimeField> j(r, partial_derivatives(P(r, "x^2+y^2+z^2+w^2")));
  CHECK(quotient_dimension_degree(j).dimension == -1);
}

TEST_CASE("dimension and degree of a line") {
  auto r = ring4();
  auto dd = quotient_dimension_degree(Ideal<PrimeField>(r, {P(r, "x"), P(r, "y")}));
  CHECK(dd.dimension == 1);
  CHECK(dd.degree == 1);
  auto unit = quotient_dimension_degree(Ideal<PrimeField>(r, {P(r, "1")}));
  CHECK(unit.dimension == -1);
  CHECK(unit.degree == 0);
}

TEST_CASE("free arrangement of degree 7") {
  auto r = ring4();
  auto h = milnor_hilbert_data(free_arrangement(r));
  CHECK(hp_ints(h) == std::vector<std::int64_t>{-70, 25});
}

TEST_CASE("Macaulay oracle agrees up to twice the degree") {
  auto r = ring4();
  for (auto f : {free_arrangement(r), P(r, "x^6*z+y^7+x^5*y*w+x^4*y^3"),
                 P(r, "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*x^2*w^2")}) {
    auto gens = partial_derivatives(f);
    Ideal<PrimeField> j(r, gens);
    auto h = hilbert_data(j);
    for (int k = 0; k <= 2 * f.degree(); ++k) CHECK(h.value(k) == macaulay_hilbert_function(gens, k));
  }
}

TEST_CASE("order independence of Hilbert data") {
  auto r = ring4();
  Ideal<PrimeField> j(r, partial_derivatives(P(r, "x^6*z+y^7+x^5*y*w+x^4*y^3")));
  auto a = hilbert_data_monomial(leading_monomials(j, MonomialOrder::grevlex()), 4);
  auto b = hilbert_data_monomial(leading_monomials(j, MonomialOrder::lex()), 4);
  CHECK(a.hp == b.hp);
  CHECK(a.k0 == b.k0);
  CHECK(a.prefix == b.prefix);
}

TEST_CASE("total Tjurina numbers") {
  auto r = ring3();
  CHECK(total_tjurina(P(r, "x^4+y^4+z^4")) == 0);
  CHECK(total_tjurina(P(r, "z*y^2 - x^3 - x^2*z")) == 1);
  auto r4 = ring4();
  CHECK_THROWS_AS(total_tjurina(P(r4, "x*y*z*w")), NonIsolatedSingularities);
}
