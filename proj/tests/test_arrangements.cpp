#include "doctest.h"

#include "milnor/arrangements.hpp"
#include "milnor/polar.hpp"
#include "milnor/linalg.hpp"
#include "support.hpp"

#include <set>

using namespace milnor;
using namespace testing_support;

namespace {

template <class K>
Arrangement<K> arr(const RingPtr<K>& r, const std::vector<std::string>& forms) {
  std::vector<Polynomial<K>> out;
  for (const auto& f : forms) out.push_back(P(r, f));
  return Arrangement<K>(r, out);
}

const std::vector<std::string> kPappus{"x", "y", "z", "x-y", "y-z", "x-y-z", "2*x+y+z", "2*x+y-z", "-2*x+5*y-z"};
const std::vector<std::string> kPappusPrime{"x", "y", "z", "x+y", "x+3*z", "y+z", "x+2*y+z", "x+2*y+3*z", "4*x+6*y+6*z"};

std::vector<std::string> with(std::vector<std::string> v, const std::string& extra) {
  v.push_back(extra);
  return v;
}

/// Brute force: codimension of every subset of forms, without closures.
std::map<int, std::set<std::vector<int>>> flats_by_subsets(const Arrangement<PrimeField>& a) {
  const int m = a.size();
  const int n = a.ring()->nvars();
  std::map<int, std::set<std::vector<int>>> out;
  auto rank = [&](const std::vector<int>& idx) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (int i : idx) rows.push_back(a.normal(i));
    return static_cast<int>(linalg::dense_rank(rows, a.ring()->field().characteristic()));
  };
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int r = rank(idx);
    // Keep only closed subsets: adding any other form raises the rank.
    bool closed = true;
    for (int j = 0; j < m && closed; ++j) {
      if (mask & (1u << j)) continue;
      auto more = idx;
      more.push_back(j);
      closed = rank(more) > r;
    }
    if (closed && r <= n) out[r].insert(idx);
  }
  return out;
}

}  // namespace

TEST_CASE("lattice of small arrangements") {
  auto r3 = ring3();
  auto lines = build_lattice(arr(r3, {"x", "y", "z"}));
  CHECK(lines.multiplicities(2) == std::map<int, int>{{2, 3}});
  auto pappus = build_lattice(arr(r3, kPappus));
  CHECK(pappus.multiplicities(1) == std::map<int, int>{{1, 9}});
  CHECK(pappus.multiplicities(2) == std::map<int, int>{{2, 9}, {3, 9}});
  CHECK(build_lattice(arr(r3, kPappusPrime)).multiplicities(2) == std::map<int, int>{{2, 9}, {3, 9}});
  for (const auto& h : pappus.flats[1]) CHECK(h.moebius == -1);
  // Moebius values sum to zero over every interval [0, X].
  for (std::size_t k = 1; k < pappus.flats.size(); ++k)
    for (const auto& x : pappus.flats[k]) {
      std::int64_t s = 0;
      for (const auto& level : pappus.flats)
        for (const auto& y : level)
          if (std::includes(x.forms.begin(), x.forms.end(), y.forms.begin(), y.forms.end())) s += y.moebius;
      CHECK(s == 0);
    }
}

TEST_CASE("lattice agrees with brute-force subset ranks") {
  auto r = ring4();
  for (const auto& forms : {std::vector<std::string>{"x", "y", "z", "w", "x+y+z+w"},
                            std::vector<std::string>{"x-y", "x+y", "x-z", "x+z", "y-z", "y+z", "w"},
                            with(kPappus, "w")}) {
    auto a = arr(r, forms);
    auto lattice = build_lattice(a);
    auto brute = flats_by_subsets(a);
    for (int k = 1; k <= lattice.rank(); ++k) {
      std::set<std::vector<int>> got;
      for (const auto& x : lattice.flats[static_cast<std::size_t>(k)]) got.insert(x.forms);
      CHECK(got == brute[k]);
    }
  }
}

TEST_CASE("generic five planes") {
  auto r = ring4();
  auto lattice = build_lattice(arr(r, {"x", "y", "z", "w", "x+y+z+w"}));
  CHECK(lattice.multiplicities(2) == std::map<int, int>{{2, 10}});
  CHECK(lattice.multiplicities(3) == std::map<int, int>{{3, 10}});
  CHECK(is_generic(lattice));
}

TEST_CASE("Betti numbers of complements") {
  auto r = ring4();
  CHECK(betti_complement(arr(r, {"x", "y", "z", "w"})) == std::vector<std::int64_t>{1, 3, 3, 1});
  auto r3 = ring3();
  CHECK(betti_complement(arr(r3, kPappus)) == std::vector<std::int64_t>{1, 8, 19});
  // Generic d planes: 1, d-1, C(d-1,2), C(d,3)-C(d,2)+d-1.
  auto five = betti_complement(arr(r, {"x", "y", "z", "w", "x+y+z+w"}));
  CHECK(five == std::vector<std::int64_t>{1, 4, 6, 10 - 10 + 5 - 1});
  auto six = betti_complement(arr(r, {"x", "y", "z", "w", "x+y+z+w", "x+2*y+3*z+4*w"}));
  CHECK(six == std::vector<std::int64_t>{1, 5, 10, 20 - 15 + 6 - 1});
  // b_1 = number of hyperplanes - 1.
  CHECK(betti_complement(arr(r, with(kPappus, "w")))[1] == 9);
  // The free arrangement: (t+1)(t+2)(t+3).
  CHECK(betti_complement(arr(r, {"x-y", "x+y", "x-z", "x+z", "y-z", "y+z", "w"})) ==
        std::vector<std::int64_t>{1, 6, 11, 6});
}

TEST_CASE("Betti numbers equal mixed multiplicities") {
  auto r = ring4();
  for (const auto& forms : {std::vector<std::string>{"x", "y", "z", "w"},
                            std::vector<std::string>{"x", "y", "z", "w", "x+y+z+w"},
                            std::vector<std::string>{"x-y", "x+y", "x-z", "x+z", "y-z", "y+z", "w"},
                            kPappus, with(kPappus, "w"), with(kPappusPrime, "w")}) {
    auto a = arr(r, forms);
    CHECK(betti_complement(a) == mixed_multiplicities(a.defining_polynomial(), 5).mu);
  }
}

TEST_CASE("Pappus pair: equal Betti numbers, Hilbert constants one apart") {
  auto r = ring4();
  auto w = arr(r, kPappus), wp = arr(r, kPappusPrime);
  CHECK(betti_complement(w) == betti_complement(wp));
  auto hw = milnor_hilbert_data(w.defining_polynomial()).hp;
  auto hwp = milnor_hilbert_data(wp.defining_polynomial()).hp;
  CHECK(hw == std::vector<mpq_class>{-189, 45});
  CHECK(hwp == std::vector<mpq_class>{-190, 45});
  auto cw = arr(r, with(kPappus, "w")), cwp = arr(r, with(kPappusPrime, "w"));
  CHECK(betti_complement(cw) == betti_complement(cwp));
  CHECK(milnor_hilbert_data(cw.defining_polynomial()).hp == std::vector<mpq_class>{-261, 54});
  CHECK(milnor_hilbert_data(cwp.defining_polynomial()).hp == std::vector<mpq_class>{-262, 54});
}

TEST_CASE("formula a holds on every arrangement") {
  auto r = ring4();
  for (const auto& forms : {std::vector<std::string>{"x", "y", "z", "w"},
                            std::vector<std::string>{"x", "y", "z", "w", "x+y+z+w"}, kPappus, with(kPappus, "w"),
                            with(kPappusPrime, "w")}) {
    auto c = check_formula_a(arr(r, forms));
    CHECK(c.holds);
  }
  CHECK(check_formula_a(arr(r, {"x", "y", "z", "w"})).lhs == 6);
  CHECK(check_formula_a(arr(r, with(kPappus, "w"))).lhs == 54);
  CHECK(check_formula_a(arr(r, {"x", "y", "z", "w", "x+y+z+w"})).rhs == 10);
}

TEST_CASE("formula b") {
  auto r = ring4();
  auto free7 = check_formula_b(arr(r, {"x-y", "x+y", "x-z", "x+z", "y-z", "y+z", "w"}));
  CHECK(free7.holds);
  CHECK(free7.lhs == -70);
  auto boolean = check_formula_b(arr(r, {"x", "y", "z", "w"}));
  CHECK(boolean.holds);
  CHECK(boolean.lhs == -2);
  for (const auto& forms : {kPappus, kPappusPrime, with(kPappus, "w"), with(kPappusPrime, "w")})
    CHECK_FALSE(check_formula_b(arr(r, forms)).holds);
}

TEST_CASE("formula for generic arrangements") {
  auto r = ring4();
  CHECK(generic_constant_term(5) == -10);
  auto five = check_formula_b1(arr(r, {"x", "y", "z", "w", "x+y+z+w"}));
  CHECK(five.holds);
  CHECK(five.lhs == -10);
  CHECK(check_formula_b1(arr(r, {"x", "y", "z", "w", "x+y+z+w", "x+2*y+3*z+4*w"})).holds);
  auto four = check_formula_b1(arr(r, {"x", "y", "z", "w"}));
  CHECK(four.holds);
  CHECK_THROWS_AS(check_formula_b1(arr(r, {"x", "y", "x+y", "z", "w"})), NotGeneric);
  CHECK_THROWS_AS(check_formula_b1(arr(r, {"x", "y", "z", "x+y+z", "w"})), NotGeneric);
}

TEST_CASE("arrangement input") {
  auto r = ring4();
  auto a = parse_arrangement<PrimeField>("x\ny  # second\n\nx+y+z+w\n", r);
  CHECK(a.size() == 3);
  CHECK_THROWS_AS(parse_arrangement<PrimeField>("x\nx^2\n", r), ParseError);
  CHECK_THROWS_AS(parse_arrangement<PrimeField>("x\n2*x\n", r), PreconditionError);
  try {
    parse_arrangement<PrimeField>("x\ny + q\n", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}
