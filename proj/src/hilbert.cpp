#include "milnor/hilbert.hpp"

#include <algorithm>
#include <unordered_map>

#include "milnor/linalg.hpp"

namespace milnor {

namespace {

mpz_class binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < bottom) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw ResourceLimit("Hilbert function value exceeds 64 bits");
  return z.get_si();
}

/// Divides by (1 - t) as long as the remainder vanishes; returns the count.
int strip_one_minus_t(IntPoly& n, int limit) {
  int j = 0;
  while (j < limit && !n.empty()) {
    std::int64_t total = evaluate_at_one(n);
    if (total != 0) break;
    IntPoly q(n.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      carry += n[k];
      q[k] = carry;
    }
    n = trim(std::move(q));
    ++j;
  }
  return j;
}

std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  std::vector<mpq_class> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

int HilbertData::krull_dimension() const { return static_cast<int>(hp.size()); }

std::int64_t HilbertData::degree() const {
  if (hp.empty()) return 0;
  // Leading coefficient times (dim)!.
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), hp.size() - 1);
  mpq_class d = hp.back() * fact;
  return to_int64(d.get_num());
}

std::int64_t HilbertData::value(int k) const {
  if (k < 0) return 0;
  mpz_class s = 0;
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= k; ++i)
    s += numerator[i] * binomial(k - static_cast<std::int64_t>(i) + nvars - 1, nvars - 1);
  return to_int64(s);
}

mpq_class HilbertData::hp_at(std::int64_t k) const {
  mpq_class s = 0, power = 1;
  for (const auto& c : hp) {
    s += c * power;
    power *= k;
  }
  return s;
}

HilbertData hilbert_data_monomial(const std::vector<Monomial>& gens, int nvars) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = hilbert_numerator(gens, nvars);

  IntPoly q = h.numerator;
  int stripped = strip_one_minus_t(q, nvars);
  const int dim = q.empty() ? 0 : nvars - stripped;
  // P(k) = sum_i q_i C(k - i + dim - 1, dim - 1).
  if (dim > 0) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(dim - 1));
    std::vector<mpq_class> total(1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      std::vector<mpq_class> term{mpq_class(q[i]) / fact};
      for (int m = 1; m <= dim - 1; ++m) term = poly_mul(term, {mpq_class(m - static_cast<long>(i)), 1});
      if (total.size() < term.size()) total.resize(term.size(), 0);
      for (std::size_t j = 0; j < term.size(); ++j) total[j] += term[j];
    }
    while (!total.empty() && sgn(total.back()) == 0) total.pop_back();
    for (auto& c : total) c.canonicalize();
    h.hp = std::move(total);
  }

  // Agreement is guaranteed beyond deg Q - dim; scan down from there.
  int bound = std::max(0, static_cast<int>(q.size()) - 1 - dim + 1);
  if (q.empty()) bound = 0;
  int k0 = bound;
  while (k0 > 0 && mpq_class(h.value(k0 - 1)) == h.hp_at(k0 - 1)) --k0;
  h.k0 = k0;
  for (int k = 0; k <= k0 + 2; ++k) h.prefix.push_back(h.value(k));
  return h;
}

template <class K>
HilbertData hilbert_data(const Ideal<K>& ideal) {
  if (!ideal.is_homogeneous()) throw PreconditionError("Hilbert data needs a homogeneous ideal");
  return hilbert_data_monomial(leading_monomials(ideal), ideal.ring()->nvars());
}

template <class K>
std::int64_t hilbert_function(const Ideal<K>& ideal, int k) {
  if (k < 0) throw PreconditionError("negative degree");
  return hilbert_data(ideal).value(k);
}

template <class K>
HilbertData milnor_hilbert_data(const Polynomial<K>& f) {
  return hilbert_data(Ideal<K>(f.ring(), partial_derivatives(f)));
}

template <class K>
std::int64_t total_tjurina(const Polynomial<K>& f) {
  if (!f.is_homogeneous()) throw PreconditionError("total Tjurina number needs a homogeneous polynomial");
  HilbertData h = milnor_hilbert_data(f);
  if (h.hp.size() > 1) throw NonIsolatedSingularities("Milnor algebra has a Hilbert polynomial of positive degree");
  if (h.hp.empty()) return 0;
  return to_int64(h.hp[0].get_num());
}

template <class K>
DimensionDegree quotient_dimension_degree(const Ideal<K>& ideal) {
  HilbertData h = hilbert_data(ideal);
  return {h.projective_dimension(), h.degree()};
}

std::int64_t monomial_count(int n, int k) {
  if (k < 0) return 0;
  return to_int64(binomial(k + n - 1, n - 1));
}

namespace {

void enumerate_monomials(int n, int k, int var, std::vector<int>& e, std::vector<Monomial>& out) {
  if (var == n - 1) {
    e[static_cast<std::size_t>(var)] = k;
    out.push_back(Monomial::from_exponents(e));
    return;
  }
  for (int a = k; a >= 0; --a) {
    e[static_cast<std::size_t>(var)] = a;
    enumerate_monomials(n, k - a, var + 1, e, out);
  }
}

std::vector<Monomial> monomials_of_degree(int n, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  enumerate_monomials(n, k, 0, e, out);
  return out;
}

}  // namespace

std::int64_t macaulay_hilbert_function(const std::vector<Polynomial<PrimeField>>& gens, int k) {
  if (gens.empty()) throw PreconditionError("Macaulay matrix of an empty generator list");
  const int n = gens.front().nvars();
  const std::uint32_t p = gens.front().field().characteristic();
  auto cols = monomials_of_degree(n, k);
  std::sort(cols.begin(), cols.end(), [](const Monomial& a, const Monomial& b) {
    return MonomialOrder::compare_grevlex(a, b) > 0;
  });
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < cols.size(); ++i) index.emplace(cols[i].exps, i);

  std::vector<linalg::SparseRow> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw PreconditionError("Macaulay matrix needs homogeneous generators");
    for (const auto& m : monomials_of_degree(n, k - g.degree())) {
      linalg::SparseRow row;
      for (const auto& t : g.terms()) row.emplace_back(index.at((t.m * m).exps), t.c);
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(cols.size()) - static_cast<std::int64_t>(linalg::sparse_rank(std::move(rows), p));
}

IntPoly numerator_from_shifts(const std::vector<std::vector<int>>& columns) {
  IntPoly n;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (int s : columns[j]) {
      IntPoly mono = shift(IntPoly{j % 2 == 0 ? 1 : -1}, s);
      n = add(n, mono);
    }
  }
  return n;
}

#define MILNOR_INSTANTIATE(K)                                               \
  template HilbertData hilbert_data(const Ideal<K>&);                       \
  template std::int64_t hilbert_function(const Ideal<K>&, int);             \
  template HilbertData milnor_hilbert_data(const Polynomial<K>&);           \
  template std::int64_t total_tjurina(const Polynomial<K>&);                \
  template DimensionDegree quotient_dimension_degree(const Ideal<K>&);

MILNOR_INSTANTIATE(PrimeField)
MILNOR_INSTANTIATE(RationalField)

}  // namespace milnor
