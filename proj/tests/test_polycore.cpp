#include "doctest.h"

#include "milnor/transforms.hpp"
#include "support.hpp"

using namespace milnor;
using namespace testing_support;

namespace {
const char* kDelta3 = "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*x^2*w^2";
}

TEST_CASE("parsing") {
  auto r = ring4();
  CHECK(P(r, "x^2-y^2").size() == 2);
  auto d = P(r, kDelta3);
  CHECK(d.size() == 5);
  CHECK(d.degree() == 4);
  CHECK(d.is_homogeneous());
  CHECK(P(r, "1/2*x + 1/2*x").to_string() == "x");
  CHECK(P(r, "x*x").to_string() == "x^2");
  CHECK(P(r, " - 3 * x ^ 2 * y + y").to_string() == "-3*x^2*y + y");
}

TEST_CASE("parse errors carry a position") {
  auto r = ring4();
  CHECK_THROWS_AS(P(r, "x + q"), ParseError);
  CHECK_THROWS_AS(P(r, "x^"), ParseError);
  CHECK_THROWS_AS(P(r, "x + * y"), ParseError);
  CHECK_THROWS_AS(P(r, "1/0*x"), ParseError);
  try {
    P(r, "x + q");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printer roundtrip") {
  auto r = ring4();
  for (const char* s : {kDelta3, "x^6*z+y^7+x^5*y*w+x^4*y^3", "-x + 1", "3*w^5 - 2*x*y"}) {
    auto f = P(r, s);
    CHECK(P(r, f.to_string()) == f);
  }
  CHECK(P(r, kDelta3).to_string() == "y^2*z^2 - 4*x*z^3 - 4*y^3*w + 18*x*y*z*w - 27*x^2*w^2");
  auto q = qring4();
  auto g = P(q, "1/3*x^2 - 5/7*y*w");
  CHECK(P(q, g.to_string()) == g);
}

TEST_CASE("partial derivatives") {
  auto r = ring4();
  auto fx = partial_derivatives(P(r, "x^5"));
  CHECK(fx[0].to_string() == "5*x^4");
  for (int i = 1; i < 4; ++i) CHECK(fx[static_cast<std::size_t>(i)].is_zero());
  auto d = partial_derivatives(P(r, kDelta3));
  CHECK(d[0] == P(r, "-4*z^3+18*y*z*w-54*x*w^2"));
  auto m = partial_derivatives(P(r, "x*y*z*w"));
  CHECK(m[0] == P(r, "y*z*w"));
  CHECK(m[3] == P(r, "x*y*z"));
}

TEST_CASE("Euler identity") {
  auto r = ring4();
  for (const char* s : {kDelta3, "x^6*z+y^7+x^5*y*w+x^4*y^3", "x^2+y^2+z^2+w^2", "z^3-2*y*z*w+x*w^2"}) {
    auto f = P(r, s);
    CHECK(euler_sum(f) == f.scaled(f.field().from_int(f.degree())));
  }
}

TEST_CASE("distributivity on random triples") {
  auto r = ring4();
  Rng rng(7);
  auto random_poly = [&] {
    std::vector<Term<PrimeField>> t;
    for (int k = 0; k < 6; ++k) {
      int e[4];
      for (auto& x : e) x = static_cast<int>(rng.below(4));
      t.push_back({Monomial::from_exponents(e), static_cast<std::uint32_t>(rng.below(32003))});
    }
    return Polynomial<PrimeField>(r, t);
  };
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(), g = random_poly(), h = random_poly();
    CHECK((f + g) * h == f * h + g * h);
    CHECK(P(r, f.to_string()) == f);
  }
}

TEST_CASE("random linear changes") {
  auto r = ring4();
  auto f = P(r, kDelta3);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto lc = random_linear_change(f, seed);
    CHECK(lc.g.degree() == 4);
    CHECK(lc.g.is_homogeneous());
  }
  auto a = random_linear_change(f, 5);
  auto b = random_linear_change(f, 5);
  CHECK(a.g == b.g);
  auto x = random_linear_change(P(r, "x"), 3);
  CHECK(x.g.size() == 4);
  CHECK(apply_linear_change(f, identity_matrix(f.field(), 4)) == f);
  auto small = ring4(101);
  CHECK_THROWS_AS(random_linear_change(P(small, "x"), 1), PreconditionError);
}

TEST_CASE("Hessian determinant") {
  auto r = ring4();
  auto q = hessian_determinant(P(r, "x^2+y^2+z^2+w^2"));
  CHECK(q.degree() == 0);
  CHECK(!q.is_zero());
  CHECK(hessian_determinant(P(r, "x^2")).is_zero());
  auto h = hessian_determinant(P(r, kDelta3));
  CHECK(!h.is_zero());
  Rng rng(11);
  int nonzero = 0;
  for (int i = 0; i < 5; ++i) {
    std::vector<std::uint32_t> pt;
    for (int k = 0; k < 4; ++k) pt.push_back(static_cast<std::uint32_t>(rng.below(32003)));
    nonzero += h.evaluate(pt) != 0;
  }
  CHECK(nonzero >= 4);
}
