#include "milnor/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "milnor/monomial_ideal.hpp"

namespace milnor {

namespace detail {

template <class K>
Vec<K> to_vec(const Polynomial<K>& p, std::uint32_t comp) {
  Vec<K> v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.m, comp, t.c});
  return v;
}

template <class K>
Polynomial<K> from_vec(const Vec<K>& v, const RingPtr<K>& ring, std::uint32_t comp) {
  std::vector<Term<K>> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.m, t.c});
  return Polynomial<K>(ring, std::move(terms));
}

}  // namespace detail

namespace {

using detail::from_vec;
using detail::ModuleOrder;
using detail::to_vec;
using detail::Vec;

template <class K>
std::vector<Polynomial<K>> compute_basis(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                                         const MonomialOrder& order) {
  std::vector<Vec<K>> in;
  for (const auto& g : gens) in.push_back(to_vec(g));
  auto basis = detail::groebner(ring->field(), ModuleOrder{order, {}, 0}, std::move(in));
  std::vector<Polynomial<K>> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(from_vec(b, ring));
  return out;
}

template <class K>
Vec<K> reduce_by(const std::vector<Polynomial<K>>& basis, const MonomialOrder& order, const Polynomial<K>& g) {
  detail::GroebnerEngine<K> engine(g.field(), ModuleOrder{order, {}, 0});
  std::vector<Vec<K>> v;
  for (const auto& b : basis) v.push_back(to_vec(b));
  engine.adopt_basis(std::move(v));
  return engine.normal_form(to_vec(g));
}

}  // namespace

template <class K>
Ideal<K>::Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!(*g.ring() == *ring_)) throw PreconditionError("generator belongs to a different ring");
    generators_.push_back(std::move(g));
  }
}

template <class K>
bool Ideal<K>::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_homogeneous(); });
}

template <class K>
const std::vector<Polynomial<K>>& Ideal<K>::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (auto it = cache_->bases.find(order); it != cache_->bases.end()) return it->second;
  }
  auto basis = compute_basis(ring_, generators_, order);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.emplace(order, std::move(basis)).first->second;
}

template <class K>
bool Ideal<K>::contains(const Polynomial<K>& g) const {
  return normal_form(g, *this).is_zero();
}

template <class K>
bool Ideal<K>::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const auto& g) { return contains(g); });
}

template <class K>
bool Ideal<K>::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& g, const Ideal<K>& ideal, const MonomialOrder& order) {
  return from_vec(reduce_by(ideal.groebner_basis(order), order, g), ideal.ring());
}

template <class K>
std::vector<Monomial> leading_monomials(const Ideal<K>& ideal, const MonomialOrder& order) {
  std::vector<Monomial> out;
  for (const auto& b : ideal.groebner_basis(order)) {
    // Stored polynomials are sorted by grevlex; find the lead for `order`.
    Monomial lead = b.terms().front().m;
    for (const auto& t : b.terms())
      if (order.compare(t.m, lead) > 0) lead = t.m;
    out.push_back(lead);
  }
  return out;
}

template <class K>
Ideal<K> intersection(const Ideal<K>& a, const Ideal<K>& b) {
  const RingPtr<K>& ring = a.ring();
  const int n = ring->nvars();
  if (n + 1 > kMaxVars) throw ResourceLimit("intersection needs an auxiliary variable beyond 8");
  std::vector<std::string> names{"_t"};
  for (const auto& s : ring->names()) names.push_back(s);
  auto big = make_ring(names, ring->field());
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 1);
  auto t = Polynomial<K>::variable(big, 0);
  auto one_minus_t = Polynomial<K>::constant(big, ring->field().one()) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.remap(big, map));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.remap(big, map));
  auto basis = compute_basis(big, gens, MonomialOrder::elimination(1));
  std::vector<int> back(static_cast<std::size_t>(n + 1), -1);
  for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(i + 1)] = i;
  std::vector<Polynomial<K>> out;
  for (const auto& g : basis)
    if (g.degree_in(0) == 0) out.push_back(g.remap(ring, back));
  return Ideal<K>(ring, std::move(out));
}

template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Polynomial<K>& g) {
  if (g.is_zero()) throw PreconditionError("quotient by the zero polynomial");
  if (g.is_constant()) return ideal;
  Ideal<K> cap = intersection(ideal, Ideal<K>(ideal.ring(), {g}));
  std::vector<Polynomial<K>> out;
  for (const auto& h : cap.generators()) out.push_back(h.divide_exact(g));
  return Ideal<K>(ideal.ring(), std::move(out));
}

template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Ideal<K>& j) {
  if (j.generators().empty()) throw PreconditionError("quotient by the zero ideal");
  std::optional<Ideal<K>> acc;
  for (const auto& g : j.generators()) {
    Ideal<K> q = ideal_quotient(ideal, g);
    acc = acc ? intersection(*acc, q) : q;
  }
  return *acc;
}

template <class K>
Ideal<K> saturation(const Ideal<K>& ideal, const Ideal<K>& j) {
  Ideal<K> current = ideal;
  for (;;) {
    Ideal<K> next = ideal_quotient(current, j);
    // current ⊆ next always; equality is next ⊆ current.
    if (current.contains(next)) return current;
    current = Ideal<K>(ideal.ring(), next.groebner_basis());
  }
}

template <class K>
std::optional<std::int64_t> standard_monomial_count(const Ideal<K>& ideal, const MonomialOrder& order) {
  return standard_monomial_total(leading_monomials(ideal, order), ideal.ring()->nvars());
}

template <class K>
bool satisfies_buchberger_criterion(const std::vector<Polynomial<K>>& basis, const MonomialOrder& order) {
  if (basis.empty()) return true;
  std::vector<Vec<K>> v;
  for (const auto& b : basis) v.push_back(to_vec(b));
  return detail::satisfies_buchberger_criterion(basis.front().field(), ModuleOrder{order, {}, 0}, v);
}

// ---- graded modules -------------------------------------------------------

namespace {

template <class K>
Vec<K> to_module_vec(const GradedVector<K>& g, std::uint32_t offset = 0) {
  Vec<K> v;
  for (std::size_t c = 0; c < g.entries.size(); ++c) {
    Vec<K> part = to_vec(g.entries[c], offset + static_cast<std::uint32_t>(c));
    v.insert(v.end(), part.begin(), part.end());
  }
  return v;
}

}  // namespace

template <class K>
std::vector<std::size_t> minimal_generator_indices(const std::vector<GradedVector<K>>& gens,
                                                   const std::vector<int>& shifts) {
  if (gens.empty()) return {};
  const K& field = gens.front().entries.front().field();
  detail::GroebnerEngine<K> engine(field, ModuleOrder{MonomialOrder::grevlex(), shifts, 0});
  // Inputs of equal degree are processed in submission order.
  std::vector<std::size_t> perm(gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) { return gens[a].degree < gens[b].degree; });
  for (auto i : perm) engine.add_input(to_module_vec(gens[i]));
  engine.run();
  std::vector<std::size_t> out;
  for (auto k : engine.minimal_inputs()) out.push_back(perm[k]);
  std::sort(out.begin(), out.end());
  return out;
}

template <class K>
std::vector<GradedVector<K>> syzygies(const std::vector<GradedVector<K>>& gens, const std::vector<int>& shifts,
                                      const RingPtr<K>& ring) {
  const std::uint32_t rank = static_cast<std::uint32_t>(shifts.size());
  const std::size_t r = gens.size();
  if (r == 0) return {};
  for (const auto& g : gens)
    if (g.entries.size() != rank) throw PreconditionError("module element has the wrong number of entries");

  // Augmented elements (g_i ; e_i); eliminating the ambient components
  // leaves a basis of the syzygy module in the remaining components.
  std::vector<int> aug_shifts = shifts;
  for (const auto& g : gens) aug_shifts.push_back(g.degree);
  ModuleOrder order{MonomialOrder::grevlex(), aug_shifts, rank};
  detail::GroebnerEngine<K> engine(ring->field(), order);
  for (std::size_t i = 0; i < r; ++i) {
    Vec<K> v = to_module_vec(gens[i]);
    v.push_back({Monomial{}, rank + static_cast<std::uint32_t>(i), ring->field().one()});
    engine.add_input(std::move(v));
  }
  engine.run();

  std::vector<GradedVector<K>> candidates;
  for (const auto& b : engine.reduced_basis()) {
    if (b.front().comp < rank) continue;
    GradedVector<K> s;
    s.degree = order.weighted_degree(b.front().m, b.front().comp);
    for (std::size_t i = 0; i < r; ++i) s.entries.push_back(from_vec(b, ring, rank + static_cast<std::uint32_t>(i)));
    candidates.push_back(std::move(s));
  }
  std::vector<int> gen_degrees;
  for (const auto& g : gens) gen_degrees.push_back(g.degree);
  std::vector<GradedVector<K>> out;
  for (auto i : minimal_generator_indices(candidates, gen_degrees)) out.push_back(candidates[i]);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
  return out;
}

template <class K>
std::vector<GradedVector<K>> first_syzygies(const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) return {};
  std::vector<GradedVector<K>> in;
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw PreconditionError("first_syzygies needs homogeneous generators");
    if (g.is_zero()) throw PreconditionError("first_syzygies needs nonzero generators");
    in.push_back({{g}, g.degree()});
  }
  return syzygies(in, {0}, gens.front().ring());
}

template <class K>
std::vector<Polynomial<K>> apply_syzygy(const GradedVector<K>& syz, const std::vector<GradedVector<K>>& gens) {
  if (syz.entries.size() != gens.size() || gens.empty()) throw PreconditionError("syzygy length mismatch");
  const auto& ring = syz.entries.front().ring();
  std::vector<Polynomial<K>> out(gens.front().entries.size(), Polynomial<K>(ring));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (syz.entries[i].is_zero()) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += syz.entries[i] * gens[i].entries[c];
  }
  return out;
}

#define MILNOR_INSTANTIATE(K)                                                                                    \
  template class Ideal<K>;                                                                                       \
  template detail::Vec<K> detail::to_vec(const Polynomial<K>&, std::uint32_t);                                   \
  template Polynomial<K> detail::from_vec(const detail::Vec<K>&, const RingPtr<K>&, std::uint32_t);              \
  template Polynomial<K> normal_form(const Polynomial<K>&, const Ideal<K>&, const MonomialOrder&);               \
  template std::vector<Monomial> leading_monomials(const Ideal<K>&, const MonomialOrder&);                       \
  template Ideal<K> intersection(const Ideal<K>&, const Ideal<K>&);                                              \
  template Ideal<K> ideal_quotient(const Ideal<K>&, const Polynomial<K>&);                                       \
  template Ideal<K> ideal_quotient(const Ideal<K>&, const Ideal<K>&);                                            \
  template Ideal<K> saturation(const Ideal<K>&, const Ideal<K>&);                                                \
  template std::optional<std::int64_t> standard_monomial_count(const Ideal<K>&, const MonomialOrder&);           \
  template bool satisfies_buchberger_criterion(const std::vector<Polynomial<K>>&, const MonomialOrder&);         \
  template std::vector<std::size_t> minimal_generator_indices(const std::vector<GradedVector<K>>&,               \
                                                              const std::vector<int>&);                          \
  template std::vector<GradedVector<K>> syzygies(const std::vector<GradedVector<K>>&, const std::vector<int>&,   \
                                                 const RingPtr<K>&);                                             \
  template std::vector<GradedVector<K>> first_syzygies(const std::vector<Polynomial<K>>&);                       \
  template std::vector<Polynomial<K>> apply_syzygy(const GradedVector<K>&, const std::vector<GradedVector<K>>&);

MILNOR_INSTANTIATE(PrimeField)
MILNOR_INSTANTIATE(RationalField)

}  // namespace milnor
