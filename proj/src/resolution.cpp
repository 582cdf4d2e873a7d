#include "milnor/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace milnor {

int BettiTable::length() const {
  int len = -1;
  for (std::size_t j = 0; j < columns.size(); ++j)
    if (!columns[j].empty()) len = static_cast<int>(j);
  return len;
}

std::string to_string(FreenessStatus status) {
  switch (status) {
    case FreenessStatus::Free: return "free";
    case FreenessStatus::NearlyFree: return "nearly_free";
    case FreenessStatus::Neither: return "neither";
  }
  return "?";
}

namespace {

template <class K>
std::vector<GradedVector<K>> minimal_jacobian_generators(const Polynomial<K>& f) {
  std::vector<GradedVector<K>> gens;
  for (auto& g : partial_derivatives(f))
    if (!g.is_zero()) gens.push_back({{g}, g.degree()});
  std::vector<GradedVector<K>> out;
  for (auto i : minimal_generator_indices(gens, {0})) out.push_back(gens[i]);
  return out;
}

/// Calls visit(position, generators, shifts, syzygies) for each step.
template <class K, class Visit>
void walk_resolution(const Polynomial<K>& f, Visit&& visit) {
  if (!f.is_homogeneous() || f.degree() < 1) throw PreconditionError("resolution needs a homogeneous nonconstant f");
  std::vector<GradedVector<K>> gens = minimal_jacobian_generators(f);
  std::vector<int> shifts{0};
  const int max_position = f.nvars();
  for (int position = 2; position <= max_position && !gens.empty(); ++position) {
    auto syz = syzygies(gens, shifts, f.ring());
    if (!visit(position, gens, syz)) return;
    shifts.clear();
    for (const auto& g : gens) shifts.push_back(g.degree);
    gens = std::move(syz);
  }
}

}  // namespace

template <class K>
BettiTable betti_table(const Polynomial<K>& f) {
  BettiTable t;
  t.columns.push_back({0});
  auto gens = minimal_jacobian_generators(f);
  std::vector<int> first;
  for (const auto& g : gens) first.push_back(g.degree);
  t.columns.push_back(first);
  walk_resolution(f, [&](int, const auto&, const auto& syz) {
    std::vector<int> col;
    for (const auto& s : syz) col.push_back(s.degree);
    std::sort(col.begin(), col.end());
    t.columns.push_back(col);
    return true;
  });
  while (t.columns.size() > 1 && t.columns.back().empty()) t.columns.pop_back();
  return t;
}

template <class K>
bool resolution_is_sound(const Polynomial<K>& f) {
  bool ok = true;
  walk_resolution(f, [&](int, const auto& gens, const auto& syz) {
    for (const auto& s : syz)
      for (const auto& e : apply_syzygy(s, gens)) ok = ok && e.is_zero();
    return ok;
  });
  return ok;
}

FreenessVerdict classify_from_betti(const BettiTable& table, int degree, int nvars) {
  const int n = nvars - 1;
  FreenessVerdict v;
  const int len = table.length();
  const std::size_t gens = table.rank(1);
  if (gens == 0) return v;
  std::vector<int> syz;
  for (int a : table.rank(2) ? table.columns[2] : std::vector<int>{}) syz.push_back(a - (degree - 1));
  std::sort(syz.begin(), syz.end());

  if (len == 2) {
    // Missing Jacobian generators are derivations of degree zero.
    std::vector<int> e(static_cast<std::size_t>(nvars) - gens, 0);
    e.insert(e.end(), syz.begin(), syz.end());
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) == n && std::accumulate(e.begin(), e.end(), 0) == degree - 1) {
      v.status = FreenessStatus::Free;
      v.exponents = e;
    }
    return v;
  }
  if (len == 3 && gens == static_cast<std::size_t>(nvars) && table.rank(2) == static_cast<std::size_t>(nvars) &&
      table.rank(3) == 1) {
    // Shape 0 -> S(-d-d_n) -> S(-d-d_i+1) (i = 1..n) + S(-d-d_n+1) -> S(-d+1)^(n+1):
    // the extra first syzygy repeats the largest exponent and the single
    // second syzygy sits one degree above it.
    std::vector<int> e(syz.begin(), syz.begin() + n);
    const int top = e.back();
    if (std::accumulate(e.begin(), e.end(), 0) == degree && syz.back() == top &&
        table.columns[3][0] == degree + top) {
      v.status = FreenessStatus::NearlyFree;
      v.exponents = e;
    }
  }
  return v;
}

template <class K>
FreenessVerdict classify_freeness(const Polynomial<K>& f) {
  return classify_from_betti(betti_table(f), f.degree(), f.nvars());
}

namespace {

using QPoly = std::vector<mpq_class>;  // lowest degree first

QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly qadd(QPoly a, const QPoly& b, const mpq_class& scale = 1) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += scale * b[i];
  return a;
}

/// p(x + c)
QPoly qshift(const QPoly& p, const mpq_class& c) {
  QPoly r{0};
  QPoly power{1};
  for (const auto& coef : p) {
    r = qadd(r, power, coef);
    power = qmul(power, {c, 1});
  }
  return r;
}

/// C(x + c, n) as a polynomial in x.
QPoly binomial_poly(const mpq_class& c, int n) {
  QPoly r{1};
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  for (int m = 0; m < n; ++m) r = qmul(r, {c - m, 1});
  for (auto& v : r) v /= fact;
  return r;
}

QPoly derivative(const QPoly& p) {
  QPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
  if (r.empty()) r.push_back(0);
  return r;
}

mpq_class coef(const QPoly& p, std::size_t i) { return i < p.size() ? p[i] : mpq_class(0); }

}  // namespace

std::vector<int> exponents_from_hilbert_polynomial(const std::vector<mpq_class>& hp, int d, int n) {
  if (n < 2 || d < 2) throw PreconditionError("exponent recovery needs n >= 2 and d >= 2");
  if (static_cast<int>(hp.size()) > n) throw PreconditionError("Hilbert polynomial degree exceeds n - 1");
  QPoly h = hp.empty() ? QPoly{0} : QPoly(hp.begin(), hp.end());

  // Q(x) = hp(x - n - 1 + d) - C(x - 1 + d, n) + (n + 1) C(x, n) = sum_j C(x - d_j, n).
  QPoly q = qshift(h, mpq_class(d - n - 1));
  q = qadd(q, binomial_poly(mpq_class(d - 1), n), -1);
  q = qadd(q, binomial_poly(0, n), n + 1);

  // n! Q(x) = sum_i (-1)^i T_i g^(i)(x) / i!, with g the falling factorial
  // x(x-1)...(x-n+1) and T_i the power sums of the exponents; the x^(n-i)
  // coefficient involves T_0..T_i only.
  mpz_class nfact;
  mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
  for (auto& c : q) c *= nfact;
  std::vector<QPoly> gder{binomial_poly(0, n)};
  for (auto& c : gder[0]) c *= nfact;
  for (int i = 1; i <= n; ++i) gder.push_back(derivative(gder.back()));
  std::vector<mpq_class> t(static_cast<std::size_t>(n) + 1, 0);
  t[0] = n;
  mpq_class ifact = 1;
  for (int i = 1; i <= n; ++i) {
    ifact *= i;
    const std::size_t k = static_cast<std::size_t>(n - i);
    mpq_class rest = coef(q, k);
    mpq_class lfact = 1;
    for (int l = 0; l < i; ++l) {
      if (l > 0) lfact *= l;
      mpq_class sign = l % 2 ? -1 : 1;
      rest -= sign * t[static_cast<std::size_t>(l)] / lfact * coef(gder[static_cast<std::size_t>(l)], k);
    }
    mpq_class sign = i % 2 ? -1 : 1;
    t[static_cast<std::size_t>(i)] = rest * ifact / (sign * coef(gder[static_cast<std::size_t>(i)], k));
  }

  // Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) T_i.
  std::vector<mpq_class> e(static_cast<std::size_t>(n) + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpq_class s = 0;
    for (int i = 1; i <= k; ++i)
      s += (i % 2 ? 1 : -1) * e[static_cast<std::size_t>(k - i)] * t[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(k)] = s / k;
  }
  // Monic polynomial prod (y - d_j), highest degree first: sum (-1)^k e_k y^(n-k).
  std::vector<mpq_class> poly;
  for (int k = 0; k <= n; ++k) poly.push_back((k % 2 ? -1 : 1) * e[static_cast<std::size_t>(k)]);
  for (const auto& c : poly)
    if (c.get_den() != 1) throw NotFreeCompatible("exponent polynomial has non-integer coefficients");

  std::vector<int> roots;
  for (int r = 1; r <= d - 1 && poly.size() > 1;) {
    // Horner division by (y - r).
    std::vector<mpq_class> quot;
    mpq_class acc = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      acc = acc * r + poly[i];
      if (i + 1 < poly.size()) quot.push_back(acc);
    }
    if (sgn(acc) == 0) {
      roots.push_back(r);
      poly = std::move(quot);
    } else {
      ++r;
    }
  }
  if (static_cast<int>(roots.size()) != n || std::accumulate(roots.begin(), roots.end(), 0) != d - 1)
    throw NotFreeCompatible("Hilbert polynomial is not that of a free divisor of degree " + std::to_string(d));
  return roots;
}

FreeDictionary free_dictionary(const std::vector<int>& exponents, int d, int n) {
  if (static_cast<int>(exponents.size()) != n) throw PreconditionError("need n exponents");
  if (std::any_of(exponents.begin(), exponents.end(), [](int x) { return x <= 0; }))
    throw PreconditionError("exponents must be positive");
  if (std::accumulate(exponents.begin(), exponents.end(), 0) != d - 1)
    throw PreconditionError("exponents must sum to d - 1");
  FreeDictionary out;
  // prod (t + d_i): elementary symmetric functions, reversed.
  std::vector<std::int64_t> s{1};
  for (int di : exponents) {
    std::vector<std::int64_t> next(s.size() + 1, 0);
    for (std::size_t k = 0; k < s.size(); ++k) {
      next[k] += s[k];
      next[k + 1] += s[k] * di;
    }
    s = std::move(next);
  }
  out.mixed = s;
  out.poincare.assign(s.rbegin(), s.rend());
  if (n == 3) {
    mpq_class a = mpq_class(s[1] * s[1] - s[2]);
    mpq_class b = (mpq_class(static_cast<long>(d - 1) * (d - 1) * (d - 1)) - (3 * d - 7) * a - s[3]) / 2;
    out.hp = {b, a};
  }
  return out;
}

#define MILNOR_INSTANTIATE(K)                                        \
  template BettiTable betti_table(const Polynomial<K>&);             \
  template bool resolution_is_sound(const Polynomial<K>&);           \
  template FreenessVerdict classify_freeness(const Polynomial<K>&);

MILNOR_INSTANTIATE(PrimeField)
MILNOR_INSTANTIATE(RationalField)

}  // namespace milnor
