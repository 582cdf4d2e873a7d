#include "milnor/detail/groebner_engine.hpp"

#include <algorithm>
#include <queue>

#include "milnor/errors.hpp"
#include "milnor/simd/kernels.hpp"

namespace milnor::detail {

namespace {

constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

template <class K>
class Arith {
 public:
  Arith(const K& field, const ModuleOrder& order) : field_(field), order_(order) {}

  int cmp(const VTerm<K>& a, const VTerm<K>& b) const { return order_.compare(a.m, a.comp, b.m, b.comp); }

  /// Merges two ascending sequences, adding coefficients of equal terms.
  Vec<K> merge_ascending(Vec<K>&& a, Vec<K>&& b) const {
    if (a.empty()) return std::move(b);
    if (b.empty()) return std::move(a);
    Vec<K> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = cmp(a[i], b[j]);
      if (c < 0) {
        out.push_back(std::move(a[i++]));
      } else if (c > 0) {
        out.push_back(std::move(b[j++]));
      } else {
        auto s = field_.add(a[i].c, b[j].c);
        if (!field_.is_zero(s)) out.push_back({a[i].m, a[i].comp, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
    return out;
  }

  void canonicalize(Vec<K>& v) const {
    std::sort(v.begin(), v.end(), [&](const VTerm<K>& a, const VTerm<K>& b) { return cmp(a, b) > 0; });
    Vec<K> out;
    out.reserve(v.size());
    for (auto& t : v) {
      if (!out.empty() && cmp(out.back(), t) == 0) {
        out.back().c = field_.add(out.back().c, t.c);
        if (field_.is_zero(out.back().c)) out.pop_back();
      } else if (!field_.is_zero(t.c)) {
        out.push_back(std::move(t));
      }
    }
    v = std::move(out);
  }

  void make_monic(Vec<K>& v) const {
    if (v.empty() || field_.is_one(v.front().c)) return;
    auto inv = field_.inv(v.front().c);
    for (auto& t : v) t.c = field_.mul(t.c, inv);
  }

  int sugar(const Vec<K>& v) const {
    int s = 0;
    for (const auto& t : v) s = std::max(s, order_.weighted_degree(t.m, t.comp));
    return s;
  }

  const K& field() const { return field_; }
  const ModuleOrder& order() const { return order_; }

 private:
  const K& field_;
  const ModuleOrder& order_;
};

/// Geometric bucket accumulator. Each bucket is kept in ascending order so
/// the leading term of a bucket is its last element.
template <class K>
class GeoBucket {
 public:
  explicit GeoBucket(const Arith<K>& arith) : arith_(arith) {}

  void add(Vec<K>&& ascending) {
    std::size_t level = 0;
    while (capacity(level) < ascending.size()) ++level;
    for (;;) {
      if (buckets_.size() <= level) buckets_.resize(level + 1);
      ascending = arith_.merge_ascending(std::move(ascending), std::move(buckets_[level]));
      buckets_[level].clear();
      if (ascending.size() <= capacity(level)) {
        buckets_[level] = std::move(ascending);
        return;
      }
      ++level;
    }
  }

  /// Removes and returns the leading term, or false when empty.
  bool pop_lead(VTerm<K>& out) {
    const K& field = arith_.field();
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || arith_.cmp(buckets_[i].back(), buckets_[static_cast<std::size_t>(best)].back()) > 0)
          best = static_cast<int>(i);
      }
      if (best < 0) return false;
      VTerm<K> lead = std::move(buckets_[static_cast<std::size_t>(best)].back());
      buckets_[static_cast<std::size_t>(best)].pop_back();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (static_cast<int>(i) == best || buckets_[i].empty()) continue;
        if (arith_.cmp(buckets_[i].back(), lead) == 0) {
          lead.c = field.add(lead.c, buckets_[i].back().c);
          buckets_[i].pop_back();
        }
      }
      if (!field.is_zero(lead.c)) {
        out = std::move(lead);
        return true;
      }
    }
  }

 private:
  static std::size_t capacity(std::size_t level) { return std::size_t{8} << (2 * level); }

  const Arith<K>& arith_;
  std::vector<Vec<K>> buckets_;
};

/// Leading monomials grouped by component, for divisor search.
struct LeadIndex {
  std::vector<std::vector<std::uint64_t>> exps;
  std::vector<std::vector<std::size_t>> owner;

  void insert(std::uint32_t comp, const Monomial& m, std::size_t id) {
    if (exps.size() <= comp) {
      exps.resize(comp + 1);
      owner.resize(comp + 1);
    }
    exps[comp].push_back(m.exps);
    owner[comp].push_back(id);
  }

  std::size_t find(std::uint32_t comp, const Monomial& m) const {
    if (comp >= exps.size() || exps[comp].empty()) return kNoIndex;
    std::ptrdiff_t k = simd::kernels().find_divisor(exps[comp].data(), exps[comp].size(), m.exps);
    return k < 0 ? kNoIndex : owner[comp][static_cast<std::size_t>(k)];
  }
};

/// Full reduction of `v` (descending) by monic elements `basis[id]` found
/// through `index`. Tracks the sugar of the result when requested.
template <class K>
Vec<K> reduce_full(const Arith<K>& arith, const std::vector<Vec<K>>& basis, const std::vector<int>& sugars,
                   const LeadIndex& index, Vec<K> v, int* sugar) {
  const K& field = arith.field();
  GeoBucket<K> bucket(arith);
  std::reverse(v.begin(), v.end());
  bucket.add(std::move(v));
  Vec<K> out;
  VTerm<K> lt;
  while (bucket.pop_lead(lt)) {
    std::size_t id = index.find(lt.comp, lt.m);
    if (id == kNoIndex) {
      out.push_back(std::move(lt));
      continue;
    }
    const Vec<K>& g = basis[id];
    Monomial q = quotient(lt.m, g.front().m);
    if (sugar && !sugars.empty()) *sugar = std::max(*sugar, sugars[id] + static_cast<int>(q.deg));
    auto factor = field.neg(lt.c);
    Vec<K> scaled;
    scaled.reserve(g.size() - 1);
    for (std::size_t k = g.size(); k-- > 1;) scaled.push_back({g[k].m * q, g[k].comp, field.mul(factor, g[k].c)});
    bucket.add(std::move(scaled));
  }
  return out;
}

}  // namespace

template <class K>
struct GroebnerEngine<K>::Impl {
  struct Pair {
    std::size_t i, j;  // j == kNoIndex: input pseudo-pair, i is the input index
    Monomial lcm;
    std::uint32_t comp;
    int sugar;
    bool alive = true;
  };

  Arith<K> arith;
  std::vector<Vec<K>> basis;
  std::vector<int> sugar;
  std::vector<bool> redundant;
  LeadIndex index;
  std::vector<Vec<K>> inputs;
  std::vector<Pair> pairs;
  std::size_t alive_pairs = 0;
  bool module_mode = false;

  struct HeapCmp {
    const Impl* self;
    // std::priority_queue pops the largest, so "less" means "later".
    bool operator()(std::size_t a, std::size_t b) const {
      const Pair& p = self->pairs[a];
      const Pair& q = self->pairs[b];
      if (p.sugar != q.sugar) return p.sugar > q.sugar;
      bool pi = p.j == kNoIndex, qi = q.j == kNoIndex;
      if (pi != qi) return pi;
      int c = self->arith.order().compare(p.lcm, p.comp, q.lcm, q.comp);
      if (c != 0) return c > 0;
      return a > b;
    }
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, HeapCmp> heap{HeapCmp{this}};

  Impl(const K& field, const ModuleOrder& order) : arith(field, order) {}

  void push_pair(Pair p, std::size_t max_pairs) {
    pairs.push_back(p);
    ++alive_pairs;
    if (alive_pairs > max_pairs) throw ResourceLimit("Groebner pair queue exceeded " + std::to_string(max_pairs));
    heap.push(pairs.size() - 1);
  }

  Vec<K> spoly(const Pair& p) const {
    const K& field = arith.field();
    const Vec<K>& f = basis[p.i];
    const Vec<K>& g = basis[p.j];
    Monomial qf = quotient(p.lcm, f.front().m), qg = quotient(p.lcm, g.front().m);
    Vec<K> a, b;
    a.reserve(f.size() - 1);
    b.reserve(g.size() - 1);
    for (std::size_t k = f.size(); k-- > 1;) a.push_back({f[k].m * qf, f[k].comp, f[k].c});
    for (std::size_t k = g.size(); k-- > 1;) b.push_back({g[k].m * qg, g[k].comp, field.neg(g[k].c)});
    Vec<K> s = arith.merge_ascending(std::move(a), std::move(b));
    std::reverse(s.begin(), s.end());
    return s;
  }

  void insert(Vec<K> h, int h_sugar, std::size_t max_pairs) {
    const std::size_t t = basis.size();
    const Monomial lm = h.front().m;
    const std::uint32_t comp = h.front().comp;

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      int sugar;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < t; ++i) {
      if (redundant[i] || basis[i].front().comp != comp) continue;
      const Monomial& li = basis[i].front().m;
      Monomial l = lcm(li, lm);
      int s = std::max(sugar[i] + static_cast<int>(l.deg - li.deg), h_sugar + static_cast<int>(l.deg - lm.deg));
      cands.push_back({i, l, !module_mode && coprime(li, lm), s});
    }

    // Gebauer-Moeller: drop a new pair when another surviving new pair has
    // an lcm dividing its own; coprime pairs survive this step and are then
    // discarded together with anything sharing their lcm.
    std::vector<bool> keep(cands.size(), false);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) {
        keep[a] = true;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
        if (b == a || (b < a && !keep[b])) continue;
        dominated = divides(cands[b].lcm, cands[a].lcm);
      }
      keep[a] = !dominated;
    }

    for (auto& p : pairs) {
      if (!p.alive || p.j == kNoIndex || p.comp != comp) continue;
      if (!divides(lm, p.lcm)) continue;
      const Monomial& li = basis[p.i].front().m;
      const Monomial& lj = basis[p.j].front().m;
      if (lcm(li, lm) == p.lcm || lcm(lj, lm) == p.lcm) continue;
      p.alive = false;
      --alive_pairs;
    }

    for (std::size_t i = 0; i < t; ++i)
      if (!redundant[i] && basis[i].front().comp == comp && divides(lm, basis[i].front().m)) redundant[i] = true;

    basis.push_back(std::move(h));
    sugar.push_back(h_sugar);
    redundant.push_back(false);
    index.insert(comp, lm, t);

    for (std::size_t a = 0; a < cands.size(); ++a)
      if (keep[a] && !cands[a].coprime) push_pair({cands[a].i, t, cands[a].lcm, comp, cands[a].sugar}, max_pairs);
  }
};

template <class K>
GroebnerEngine<K>::GroebnerEngine(K field, ModuleOrder order, EngineOptions options)
    : impl_(nullptr), field_(std::move(field)), order_(std::move(order)), options_(options) {
  impl_ = new Impl(field_, order_);
}

template <class K>
GroebnerEngine<K>::~GroebnerEngine() {
  delete impl_;
}

template <class K>
void GroebnerEngine<K>::canonicalize(Vec<K>& v) const {
  impl_->arith.canonicalize(v);
}

template <class K>
void GroebnerEngine<K>::add_input(Vec<K> v) {
  canonicalize(v);
  for (const auto& t : v)
    if (t.comp != 0) impl_->module_mode = true;
  std::size_t id = impl_->inputs.size();
  int s = impl_->arith.sugar(v);
  Monomial lead = v.empty() ? Monomial{} : v.front().m;
  std::uint32_t comp = v.empty() ? 0 : v.front().comp;
  impl_->inputs.push_back(std::move(v));
  impl_->push_pair({id, kNoIndex, lead, comp, s}, options_.max_pairs);
}

template <class K>
void GroebnerEngine<K>::run() {
  Impl& im = *impl_;
  if (order_.block) im.module_mode = true;
  while (!im.heap.empty()) {
    std::size_t id = im.heap.top();
    im.heap.pop();
    typename Impl::Pair p = im.pairs[id];
    if (!p.alive) continue;
    im.pairs[id].alive = false;
    --im.alive_pairs;

    Vec<K> s;
    int s_sugar = p.sugar;
    if (p.j == kNoIndex) {
      s = std::move(im.inputs[p.i]);
    } else {
      s = im.spoly(p);
    }
    ++stats_.pairs_reduced;
    Vec<K> r = reduce_full(im.arith, im.basis, im.sugar, im.index, std::move(s), &s_sugar);
    if (r.empty()) {
      ++stats_.zero_reductions;
      continue;
    }
    if (p.j == kNoIndex) minimal_inputs_.push_back(p.i);
    im.arith.make_monic(r);
    im.insert(std::move(r), s_sugar, options_.max_pairs);
  }
  stats_.basis_size = 0;
  for (std::size_t i = 0; i < im.basis.size(); ++i) stats_.basis_size += !im.redundant[i];
}

template <class K>
void GroebnerEngine<K>::adopt_basis(std::vector<Vec<K>> basis) {
  Impl& im = *impl_;
  for (auto& b : basis) {
    canonicalize(b);
    if (b.empty()) continue;
    im.arith.make_monic(b);
    im.index.insert(b.front().comp, b.front().m, im.basis.size());
    im.sugar.push_back(im.arith.sugar(b));
    im.redundant.push_back(false);
    im.basis.push_back(std::move(b));
  }
}

template <class K>
Vec<K> GroebnerEngine<K>::normal_form(Vec<K> v) const {
  canonicalize(v);
  return reduce_full(impl_->arith, impl_->basis, impl_->sugar, impl_->index, std::move(v), nullptr);
}

template <class K>
std::vector<Vec<K>> GroebnerEngine<K>::reduced_basis() const {
  const Impl& im = *impl_;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < im.basis.size(); ++i)
    if (!im.redundant[i]) keep.push_back(i);
  // Non-redundant leads are pairwise non-divisible, so tails can be reduced
  // against the whole final set without touching the leads.
  std::vector<Vec<K>> final_set;
  LeadIndex index;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    final_set.push_back(im.basis[keep[k]]);
    index.insert(final_set.back().front().comp, final_set.back().front().m, k);
  }
  std::vector<Vec<K>> out;
  out.reserve(final_set.size());
  for (const auto& g : final_set) {
    Vec<K> tail(g.begin() + 1, g.end());
    Vec<K> reduced = reduce_full(im.arith, final_set, {}, index, std::move(tail), nullptr);
    Vec<K> h;
    h.reserve(reduced.size() + 1);
    h.push_back(g.front());
    for (auto& t : reduced) h.push_back(std::move(t));
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [&](const Vec<K>& a, const Vec<K>& b) { return im.arith.cmp(a.front(), b.front()) < 0; });
  return out;
}

template <class K>
std::vector<Vec<K>> groebner(const K& field, const ModuleOrder& order, std::vector<Vec<K>> gens,
                             EngineOptions options) {
  GroebnerEngine<K> engine(field, order, options);
  for (auto& g : gens) engine.add_input(std::move(g));
  engine.run();
  return engine.reduced_basis();
}

template <class K>
bool satisfies_buchberger_criterion(const K& field, const ModuleOrder& order, const std::vector<Vec<K>>& basis) {
  Arith<K> arith(field, order);
  std::vector<Vec<K>> monic;
  LeadIndex index;
  for (const auto& g : basis) {
    if (g.empty()) continue;
    Vec<K> h = g;
    arith.canonicalize(h);
    arith.make_monic(h);
    index.insert(h.front().comp, h.front().m, monic.size());
    monic.push_back(std::move(h));
  }
  for (std::size_t i = 0; i < monic.size(); ++i) {
    for (std::size_t j = i + 1; j < monic.size(); ++j) {
      if (monic[i].front().comp != monic[j].front().comp) continue;
      Monomial l = lcm(monic[i].front().m, monic[j].front().m);
      Monomial qi = quotient(l, monic[i].front().m), qj = quotient(l, monic[j].front().m);
      Vec<K> s;
      for (const auto& t : monic[i]) s.push_back({t.m * qi, t.comp, t.c});
      for (const auto& t : monic[j]) s.push_back({t.m * qj, t.comp, field.neg(t.c)});
      arith.canonicalize(s);
      if (!reduce_full(arith, monic, {}, index, std::move(s), nullptr).empty()) return false;
    }
  }
  return true;
}

template class GroebnerEngine<PrimeField>;
template class GroebnerEngine<RationalField>;

#define MILNOR_INSTANTIATE(K)                                                                          \
  template std::vector<Vec<K>> groebner(const K&, const ModuleOrder&, std::vector<Vec<K>>, EngineOptions); \
  template bool satisfies_buchberger_criterion(const K&, const ModuleOrder&, const std::vector<Vec<K>>&);

MILNOR_INSTANTIATE(PrimeField)
MILNOR_INSTANTIATE(RationalField)

}  // namespace milnor::detail
