#include "milnor/arrangements.hpp"

#include <algorithm>
#include <set>

namespace milnor {

namespace {

template <class K>
int rank_of(const K& field, std::vector<std::vector<typename K::Elem>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && field.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& top = rows[static_cast<std::size_t>(rank)];
    auto inv = field.inv(top[c]);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (field.is_zero(rows[r][c])) continue;
      auto factor = field.mul(rows[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = field.sub(rows[r][k], field.mul(factor, top[k]));
    }
    ++rank;
  }
  return rank;
}

template <class K>
int rank_of_forms(const Arrangement<K>& a, const std::vector<int>& idx) {
  std::vector<std::vector<typename K::Elem>> rows;
  for (int i : idx) rows.push_back(a.normal(i));
  return rank_of(a.ring()->field(), std::move(rows));
}

mpq_class binom(int n, int k) {
  mpz_class r;
  if (k < 0 || n < k) return 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(r);
}

}  // namespace

template <class K>
Arrangement<K>::Arrangement(RingPtr<K> ring, std::vector<Polynomial<K>> forms)
    : ring_(std::move(ring)), forms_(std::move(forms)) {
  if (forms_.empty()) throw PreconditionError("an arrangement needs at least one hyperplane");
  const K& field = ring_->field();
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const auto& f = forms_[i];
    if (!(*f.ring() == *ring_)) throw PreconditionError("form lives in another ring");
    if (f.degree() != 1 || !f.is_homogeneous())
      throw PreconditionError("hyperplane " + std::to_string(i) + " is not a linear form");
    std::vector<typename K::Elem> v(static_cast<std::size_t>(ring_->nvars()), field.zero());
    for (const auto& t : f.terms())
      for (int j = 0; j < ring_->nvars(); ++j)
        if (t.m[j] == 1) v[static_cast<std::size_t>(j)] = t.c;
    normals_.push_back(std::move(v));
  }
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (rank_of_forms(*this, {i, j}) < 2)
        throw PreconditionError("hyperplanes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

template <class K>
Polynomial<K> Arrangement<K>::defining_polynomial() const {
  Polynomial<K> f = Polynomial<K>::constant(ring_, ring_->field().one());
  for (const auto& l : forms_) f = f * l;
  return f;
}

template <class K>
Arrangement<K> parse_arrangement(std::string_view text, const RingPtr<K>& ring) {
  std::vector<Polynomial<K>> forms;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        auto f = parse_polynomial(line, ring);
        if (f.degree() != 1 || !f.is_homogeneous()) throw ParseError("expected a linear form", 0);
        forms.push_back(std::move(f));
      } catch (const ParseError& e) {
        std::string what = e.what();
        throw ParseError(what.substr(0, what.rfind(" at position")), start + e.position());
      }
    }
    start = end + 1;
  }
  return Arrangement<K>(ring, std::move(forms));
}

std::map<int, int> IntersectionLattice::multiplicities(int codim) const {
  std::map<int, int> out;
  if (codim < 0 || codim >= static_cast<int>(flats.size())) return out;
  for (const auto& x : flats[static_cast<std::size_t>(codim)]) ++out[static_cast<int>(x.forms.size())];
  return out;
}

std::vector<std::int64_t> IntersectionLattice::central_poincare() const {
  std::vector<std::int64_t> out;
  for (const auto& level : flats) {
    std::int64_t s = 0;
    for (const auto& x : level) s += x.moebius < 0 ? -x.moebius : x.moebius;
    out.push_back(s);
  }
  return out;
}

template <class K>
IntersectionLattice build_lattice(const Arrangement<K>& a) {
  IntersectionLattice lat;
  lat.flats.push_back({Flat{{}, 0, 1}});
  const int m = a.size();
  for (int codim = 1;; ++codim) {
    std::set<std::vector<int>> seen;
    std::vector<Flat> level;
    for (const auto& x : lat.flats.back()) {
      for (int j = 0; j < m; ++j) {
        if (std::binary_search(x.forms.begin(), x.forms.end(), j)) continue;
        // Closure of X + H_j: every form dependent on the enlarged set.
        std::vector<int> base = x.forms;
        base.push_back(j);
        std::vector<int> closed;
        for (int i = 0; i < m; ++i) {
          if (i == j || std::binary_search(x.forms.begin(), x.forms.end(), i)) {
            closed.push_back(i);
            continue;
          }
          std::vector<int> test = base;
          test.push_back(i);
          if (rank_of_forms(a, test) == codim) closed.push_back(i);
        }
        if (seen.insert(closed).second) level.push_back(Flat{closed, codim, 0});
      }
    }
    if (level.empty()) break;
    for (auto& x : level) {
      std::int64_t sum = 0;
      for (const auto& below : lat.flats)
        for (const auto& y : below)
          if (std::includes(x.forms.begin(), x.forms.end(), y.forms.begin(), y.forms.end())) sum += y.moebius;
      x.moebius = -sum;
    }
    lat.flats.push_back(std::move(level));
  }
  return lat;
}

std::vector<std::int64_t> betti_complement(const IntersectionLattice& lattice, int nvars) {
  // The central complement is C^* times the projective one.
  auto c = lattice.central_poincare();
  std::vector<std::int64_t> b;
  std::int64_t prev = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    prev = c[i] - prev;
    b.push_back(prev);
  }
  if (c.empty() || c.back() != prev) throw PreconditionError("central Poincare polynomial is not divisible by 1 + t");
  b.resize(static_cast<std::size_t>(nvars), 0);
  return b;
}

template <class K>
std::vector<std::int64_t> betti_complement(const Arrangement<K>& a) {
  return betti_complement(build_lattice(a), a.ring()->nvars());
}

bool is_generic(const IntersectionLattice& lattice) {
  for (int k = 1; k <= std::min(3, lattice.rank()); ++k)
    for (const auto& x : lattice.flats[static_cast<std::size_t>(k)])
      if (static_cast<int>(x.forms.size()) != k) return false;
  return true;
}

mpq_class generic_constant_term(int d) {
  mpq_class dm1 = d - 1;
  mpq_class r = dm1 * dm1 * dm1 - mpq_class(3 * d - 7) * dm1 * d / 2 - binom(d, 3) + binom(d, 2) - d + 1;
  r /= 2;
  return r;
}

namespace {

template <class K>
std::vector<mpq_class> milnor_hp(const Arrangement<K>& a) {
  if (a.ring()->nvars() != 4) throw PreconditionError("formula checks need an arrangement in P^3");
  auto hp = milnor_hilbert_data(a.defining_polynomial()).hp;
  hp.resize(std::max<std::size_t>(hp.size(), 2), 0);
  return hp;
}

}  // namespace

template <class K>
FormulaCheck check_formula_a(const Arrangement<K>& a) {
  auto hp = milnor_hp(a);
  auto lattice = build_lattice(a);
  FormulaCheck r;
  r.lhs = hp[1];
  r.rhs = 0;
  if (lattice.rank() >= 2)
    for (const auto& e : lattice.flats[2]) {
      const long k = static_cast<long>(e.forms.size());
      r.rhs += (k - 1) * (k - 1);
    }
  r.holds = r.lhs == r.rhs;
  return r;
}

template <class K>
FormulaCheck check_formula_b(const Arrangement<K>& a) {
  auto hp = milnor_hp(a);
  auto b = betti_complement(a);
  const long d = a.size();
  mpq_class alpha = mpq_class((d - 1) * (d - 1)) - b[2];
  FormulaCheck r;
  r.lhs = hp[0];
  r.rhs = (mpq_class((d - 1) * (d - 1) * (d - 1)) - mpq_class(3 * d - 7) * alpha - b[3]) / 2;
  r.holds = r.lhs == r.rhs;
  return r;
}

template <class K>
FormulaCheck check_formula_b1(const Arrangement<K>& a) {
  if (a.ring()->nvars() != 4) throw PreconditionError("formula checks need an arrangement in P^3");
  if (!is_generic(build_lattice(a))) throw NotGeneric("some flat of codimension k lies on more than k planes");
  auto hp = milnor_hp(a);
  FormulaCheck r;
  r.lhs = hp[0];
  r.rhs = generic_constant_term(a.size());
  r.holds = r.lhs == r.rhs;
  return r;
}

template class Arrangement<PrimeField>;
template class Arrangement<RationalField>;

#define MILNOR_INSTANTIATE(K)                                                           \
  template Arrangement<K> parse_arrangement(std::string_view, const RingPtr<K>&);      \
  template IntersectionLattice build_lattice(const Arrangement<K>&);                    \
  template std::vector<std::int64_t> betti_complement(const Arrangement<K>&);           \
  template FormulaCheck check_formula_a(const Arrangement<K>&);                         \
  template FormulaCheck check_formula_b(const Arrangement<K>&);                         \
  template FormulaCheck check_formula_b1(const Arrangement<K>&);

MILNOR_INSTANTIATE(PrimeField)
MILNOR_INSTANTIATE(RationalField)

}  // namespace milnor
