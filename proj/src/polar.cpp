#include "milnor/polar.hpp"

#include <algorithm>
#include <unordered_map>

#include "milnor/linalg.hpp"
#include "milnor/simd/kernels.hpp"

namespace milnor {

namespace {

template <class K>
RingPtr<K> prefix_ring(const RingPtr<K>& ring, int count) {
  std::vector<std::string> names(ring->names().begin(), ring->names().begin() + count);
  return make_ring(std::move(names), ring->field());
}

// Gradient targets over Q. Special targets of arrangements fill whole lines
// (images of blown-up multiple points), which a box of +-50 hits too often.
constexpr std::int64_t kTargetBound = 100000;

template <class K>
typename K::Elem nonzero_element(const K& field, Rng& rng) {
  for (;;) {
    auto c = random_element(field, rng, kTargetBound);
    if (!field.is_zero(c)) return c;
  }
}

/// Random linear form in the variables of `ring`.
template <class K>
Polynomial<K> random_linear_form(const RingPtr<K>& ring, Rng& rng) {
  std::vector<Term<K>> terms;
  for (int i = 0; i < ring->nvars(); ++i) terms.push_back({Monomial::variable(i), random_element(ring->field(), rng)});
  return Polynomial<K>(ring, std::move(terms));
}

/// A reduced hypersurface of P^m has a singular locus of dimension <= m - 2.
template <class K>
bool is_reduced_hypersurface(const Polynomial<K>& g) {
  if (g.is_zero() || g.degree() < 1) return false;
  Ideal<K> jac(g.ring(), partial_derivatives(g));
  return hilbert_data(jac).projective_dimension() <= g.nvars() - 3;
}

template <class K>
void require_form(const Polynomial<K>& f, int min_degree, const char* what) {
  if (!f.is_homogeneous() || f.degree() < min_degree)
    throw PreconditionError(std::string(what) + " needs a homogeneous polynomial of degree >= " +
                            std::to_string(min_degree));
}

}  // namespace

template <class K>
Polynomial<K> generic_section(const Polynomial<K>& f, int m, std::uint64_t seed, SectionMode mode) {
  require_form(f, 1, "generic_section");
  const int n = f.nvars() - 1;
  if (m < 1 || m >= n) throw PreconditionError("section dimension must satisfy 1 <= m < n");
  auto target = prefix_ring(f.ring(), m + 1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    Rng rng(s);
    Polynomial<K> source = f;
    std::vector<Polynomial<K>> images;
    if (mode == SectionMode::Dense) source = random_linear_change(f, s).g;
    for (int j = 0; j <= n; ++j) {
      if (j <= m)
        images.push_back(Polynomial<K>::variable(target, j));
      else if (mode == SectionMode::Dense)
        images.emplace_back(target);
      else
        images.push_back(random_linear_form(target, rng));
    }
    Polynomial<K> g = source.substitute(images);
    if (g.degree() == f.degree() && is_reduced_hypersurface(g)) return g;
  }
  throw GenericityFailure("no reduced section to P^" + std::to_string(m) + " in 8 draws");
}

template <class K>
std::int64_t polar_degree(const Polynomial<K>& f, std::uint64_t seed) {
  require_form(f, 2, "polar_degree");
  if (f.nvars() < 2) throw PreconditionError("polar_degree needs at least two variables");
  const auto& ring = f.ring();
  const auto partials = partial_derivatives(f);
  const std::int64_t dm1 = f.degree() - 1;
  Rng rng(seed);
  std::vector<std::int64_t> values;
  for (int attempt = 0; attempt < 8 && values.size() < 2; ++attempt) {
    std::vector<Polynomial<K>> gens;
    for (const auto& fj : partials) gens.push_back(fj - Polynomial<K>::constant(ring, nonzero_element(f.field(), rng)));
    auto count = standard_monomial_count(Ideal<K>(ring, std::move(gens)));
    // A positive-dimensional or non-reduced fiber means q was not generic.
    if (!count || *count % dm1 != 0) continue;
    values.push_back(*count / dm1);
  }
  if (values.size() < 2) throw GenericityFailure("gradient fibers over random targets kept degenerating");
  if (values[0] != values[1])
    throw GenericityFailure("polar degree disagrees between targets: " + std::to_string(values[0]) + " vs " +
                            std::to_string(values[1]));
  return values[0];
}

template <class K>
std::optional<std::int64_t> gradient_fiber_degree(const Polynomial<K>& f, const std::vector<typename K::Elem>& q) {
  require_form(f, 2, "gradient_fiber_degree");
  const auto& ring = f.ring();
  const auto& field = f.field();
  const int n = f.nvars();
  if (static_cast<int>(q.size()) != n) throw PreconditionError("target has the wrong length");
  std::size_t k = 0;
  while (k < q.size() && field.is_zero(q[k])) ++k;
  if (k == q.size()) throw PreconditionError("the zero vector is not a target");
  const auto partials = partial_derivatives(f);
  std::vector<Polynomial<K>> minors;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      minors.push_back(partials[static_cast<std::size_t>(j)].scaled(q[static_cast<std::size_t>(i)]) -
                       partials[static_cast<std::size_t>(i)].scaled(q[static_cast<std::size_t>(j)]));
  // On the fiber every partial is a multiple of q by a nonzero scalar, so f_k
  // with q_k != 0 vanishes nowhere on it; removing V(f_k) removes the base
  // locus V(J_f) and the irrelevant component at once.
  Ideal<K> fiber = saturation(Ideal<K>(ring, std::move(minors)), Ideal<K>(ring, {partials[k]}));
  auto dd = quotient_dimension_degree(fiber);
  if (dd.dimension > 0) return std::nullopt;
  return dd.dimension < 0 ? 0 : dd.degree;
}

template <class K>
std::int64_t polar_degree_by_minors(const Polynomial<K>& f, std::uint64_t seed) {
  require_form(f, 2, "polar_degree_by_minors");
  Rng rng(seed);
  std::vector<std::int64_t> values;
  for (int attempt = 0; attempt < 8 && values.size() < 2; ++attempt) {
    std::vector<typename K::Elem> q;
    for (int i = 0; i < f.nvars(); ++i) q.push_back(nonzero_element(f.field(), rng));
    if (auto deg = gradient_fiber_degree(f, q)) values.push_back(*deg);
  }
  if (values.size() < 2) throw GenericityFailure("minor ideals kept positive-dimensional fibers");
  if (values[0] != values[1]) throw GenericityFailure("polar degree disagrees between targets");
  return values[0];
}

std::int64_t MixedMultSeq::euler() const {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) e += (i % 2 ? -1 : 1) * mu[i];
  return e;
}

template <class K>
MixedMultSeq mixed_multiplicities(const Polynomial<K>& f, std::uint64_t seed) {
  require_form(f, 2, "mixed_multiplicities");
  const int n = f.nvars() - 1;
  if (n < 1) throw PreconditionError("mixed_multiplicities needs at least two variables");
  if (!is_reduced_hypersurface(f)) throw PreconditionError("mixed_multiplicities needs a reduced polynomial");
  MixedMultSeq out;
  out.mu.push_back(1);
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t section_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(i));
    const std::uint64_t target_seed = derive_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1);
    if (i < n) {
      out.mu.push_back(polar_degree(generic_section(f, i, section_seed), target_seed));
      out.seeds.push_back(section_seed);
    } else {
      out.mu.push_back(polar_degree(f, target_seed));
    }
    out.seeds.push_back(target_seed);
  }
  return out;
}

template <class K>
MixedMultSeq mixed_multiplicities_checked(const Polynomial<K>& f, std::uint64_t seed, int trials) {
  if (trials < 1) throw PreconditionError("need at least one trial");
  MixedMultSeq first = mixed_multiplicities(f, seed);
  for (int t = 1; t < trials; ++t) {
    MixedMultSeq again = mixed_multiplicities(f, derive_seed(seed, 1000 + static_cast<std::uint64_t>(t)));
    if (again.mu != first.mu) throw GenericityFailure("mixed multiplicities disagree between independent seeds");
    first.seeds.insert(first.seeds.end(), again.seeds.begin(), again.seeds.end());
  }
  return first;
}

template <class K>
std::int64_t total_milnor_plane_curve(const Polynomial<K>& f, std::uint64_t seed) {
  require_form(f, 1, "total_milnor_plane_curve");
  if (f.nvars() != 3) throw PreconditionError("total_milnor_plane_curve needs a polynomial in 3 variables");
  total_tjurina(f);  // throws NonIsolatedSingularities
  auto chart = prefix_ring(f.ring(), 2);
  const auto one = Polynomial<K>::constant(chart, f.field().one());
  const auto& ring = f.ring();
  for (int attempt = 0; attempt < 8; ++attempt) {
    // Only the line at infinity must be generic, and z -> z + a x + b y reaches
    // every line missing (0:0:1). Keeping x and y fixed keeps h sparse.
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    const auto x = Polynomial<K>::variable(ring, 0), y = Polynomial<K>::variable(ring, 1);
    const auto z = Polynomial<K>::variable(ring, 2) + x.scaled(random_element(f.field(), rng)) +
                   y.scaled(random_element(f.field(), rng));
    Polynomial<K> g = f.substitute({x, y, z});
    // No singular point on the line z = 0.
    auto at_infinity = partial_derivatives(g);
    at_infinity.push_back(Polynomial<K>::variable(ring, 2));
    if (!hilbert_data(Ideal<K>(ring, at_infinity)).hp.empty()) continue;

    Polynomial<K> h = g.substitute({Polynomial<K>::variable(chart, 0), Polynomial<K>::variable(chart, 1), one});
    Ideal<K> critical(chart, {h.derivative(0), h.derivative(1)});
    auto all = standard_monomial_count(critical);
    if (!all) continue;
    auto off = standard_monomial_count(saturation(critical, Ideal<K>(chart, {h})));
    if (!off) continue;
    return *all - *off;
  }
  throw GenericityFailure("no admissible affine chart in 8 draws");
}

template <class K>
HomaloidalWitness is_homaloidal(const Polynomial<K>& f, std::uint64_t seed) {
  require_form(f, 2, "is_homaloidal");
  HomaloidalWitness w;
  w.seed = seed;
  w.dominant = !hessian_determinant(f).is_zero();
  w.polar_degree = w.dominant ? polar_degree(f, seed) : 0;
  w.verdict = w.dominant && w.polar_degree == 1;
  return w;
}

namespace {

/// Standard monomials of a zero-dimensional ideal, found by growing the
/// order ideal outward from 1.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& leads, int nvars) {
  std::vector<Monomial> out;
  auto is_standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, m); });
  };
  std::unordered_map<std::uint64_t, bool> seen;
  std::vector<Monomial> frontier;
  if (is_standard(Monomial{})) frontier.push_back(Monomial{});
  seen[Monomial{}.exps] = true;
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    out.push_back(m);
    for (int v = 0; v < nvars; ++v) {
      Monomial next = m * Monomial::variable(v);
      if (seen.emplace(next.exps, true).second && is_standard(next)) frontier.push_back(next);
    }
  }
  return out;
}

/// Points of P^1 cut out by binary forms, counted without multiplicity:
/// distinct roots of the gcd of g(t, 1 + a t). nullopt when the chart misses
/// part of the scheme of length `length`.
std::optional<std::int64_t> binary_points_reduced_degree(const std::vector<Polynomial<PrimeField>>& forms,
                                                         std::int64_t length, Rng& rng) {
  const auto& field = forms.front().field();
  const std::uint32_t p = field.characteristic();
  const std::uint32_t a = random_element(field, rng);
  linalg::PolyModP g;
  for (const auto& form : forms) {
    linalg::PolyModP u(static_cast<std::size_t>(form.degree()) + 1, 0);
    for (const auto& t : form.terms()) {
      // c t^i (1 + a t)^j
      const int i = t.m[0], j = t.m[1];
      std::uint64_t binom = 1, apow = 1;
      for (int k = 0; k <= j; ++k) {
        auto& slot = u[static_cast<std::size_t>(i + k)];
        slot = static_cast<std::uint32_t>((slot + std::uint64_t{t.c} * (binom * apow % p)) % p);
        binom = binom * static_cast<std::uint64_t>(j - k) % p * linalg::inv_mod(static_cast<std::uint32_t>(k + 1), p) % p;
        apow = apow * a % p;
      }
    }
    while (!u.empty() && u.back() == 0) u.pop_back();
    if (u.empty()) continue;
    g = g.empty() ? u : linalg::poly_gcd(g, u, p);
  }
  if (static_cast<std::int64_t>(g.size()) - 1 != length) return std::nullopt;
  return linalg::squarefree_degree(g, p);
}

}  // namespace

std::int64_t reduced_degree(const Ideal<PrimeField>& ideal, std::uint64_t seed) {
  using P = Polynomial<PrimeField>;
  const auto& ring = ideal.ring();
  const std::uint32_t p = ring->field().characteristic();
  const auto whole = quotient_dimension_degree(ideal);
  if (whole.dimension < 0) return 0;
  const int cut = ring->nvars() - whole.dimension;  // variables left after slicing
  if (cut < 2) throw PreconditionError("reduced_degree needs a proper ideal");

  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    // Slice by a generic linear space of complementary dimension.
    auto plane = prefix_ring(ring, cut);
    std::vector<P> images;
    for (int j = 0; j < ring->nvars(); ++j)
      images.push_back(j < cut ? P::variable(plane, j) : random_linear_form(plane, rng));
    std::vector<P> sliced;
    for (const auto& g : ideal.generators()) sliced.push_back(g.substitute(images));
    Ideal<PrimeField> points(plane, sliced);
    const auto dd = quotient_dimension_degree(points);
    if (dd.dimension != 0 || dd.degree != whole.degree) continue;
    if (cut == 2) {
      auto n = binary_points_reduced_degree(sliced, dd.degree, rng);
      if (!n) continue;
      return *n;
    }

    // Affine chart L = 1 for a generic linear form L; no point may be lost.
    auto chart = prefix_ring(ring, cut - 1);
    std::vector<P> to_chart;
    P last = P::constant(chart, 1);
    for (int j = 0; j + 1 < cut; ++j) {
      to_chart.push_back(P::variable(chart, j));
      last += P::variable(chart, j).scaled(random_element(ring->field(), rng));
    }
    to_chart.push_back(last);
    std::vector<P> affine;
    for (const auto& g : sliced) affine.push_back(g.substitute(to_chart));
    Ideal<PrimeField> algebra(chart, affine);
    auto length = standard_monomial_count(algebra);
    if (!length || *length != dd.degree) continue;

    const auto basis = standard_monomials(leading_monomials(algebra), chart->nvars());
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exps, i);
    auto coordinates = [&](const P& nf) {
      std::vector<std::uint32_t> v(basis.size(), 0);
      for (const auto& t : nf.terms()) v[index.at(t.m.exps)] = t.c;
      return v;
    };

    // Minimal polynomial of a generic linear form: its roots are the values
    // at the points, distinct for a separating form.
    const P ell = random_linear_form(chart, rng);
    linalg::IncrementalBasis krylov(basis.size(), p);
    P power = normal_form(P::constant(chart, 1), algebra);
    for (std::size_t k = 0; k <= basis.size(); ++k) {
      if (auto dep = krylov.insert(coordinates(power))) {
        linalg::PolyModP minpoly(dep->begin(), dep->end());
        return linalg::squarefree_degree(minpoly, p);
      }
      power = normal_form(power * ell, algebra);
    }
    throw ResourceLimit("Krylov sequence did not close");  // unreachable: dimension bound
  }
  throw GenericityFailure("no generic linear section in 8 draws");
}

std::int64_t singular_locus_reduced_degree(const Polynomial<PrimeField>& f, std::uint64_t seed) {
  return reduced_degree(Ideal<PrimeField>(f.ring(), partial_derivatives(f)), seed);
}

// ---- finite-field enumeration --------------------------------------------

FiberCounter::FiberCounter(const Polynomial<PrimeField>& f)
    : p_(f.field().characteristic()), n_(f.nvars()) {
  if (p_ >= 128) throw PreconditionError("fiber enumeration needs p < 128");
  if (n_ < 2 || n_ > 4) throw PreconditionError("fiber enumeration needs 2 to 4 variables");
  std::size_t total = 0, block = 1;
  for (int i = 0; i < n_; ++i, block *= p_) total += block;
  counts_.assign(total, 0);

  const auto partials = partial_derivatives(f);
  const int maxdeg = std::max(0, f.degree() - 1);
  std::vector<std::uint32_t> inv(p_, 0);
  for (std::uint32_t a = 1; a < p_; ++a) inv[a] = linalg::inv_mod(a, p_);
  const auto& kern = simd::kernels();

  // Points as normalized vectors, first nonzero coordinate 1, in index order.
  std::vector<std::vector<std::uint32_t>> coords(static_cast<std::size_t>(n_));
  for (int lead = 0; lead < n_; ++lead) {
    std::size_t free = 1;
    for (int j = lead + 1; j < n_; ++j) free *= p_;
    for (std::size_t r = 0; r < free; ++r) {
      std::size_t rest = r;
      for (int j = n_ - 1; j >= 0; --j) {
        std::uint32_t v = 0;
        if (j == lead) {
          v = 1;
        } else if (j > lead) {
          v = static_cast<std::uint32_t>(rest % p_);
          rest /= p_;
        }
        coords[static_cast<std::size_t>(j)].push_back(v);
      }
    }
  }

  constexpr std::size_t kBlock = 4096;
  std::vector<std::vector<std::vector<std::uint32_t>>> powers(
      static_cast<std::size_t>(n_), std::vector<std::vector<std::uint32_t>>(static_cast<std::size_t>(maxdeg) + 1));
  std::vector<std::vector<std::uint32_t>> grad(static_cast<std::size_t>(n_));
  std::vector<std::uint32_t> term(kBlock), g(static_cast<std::size_t>(n_));
  for (std::size_t start = 0; start < total; start += kBlock) {
    const std::size_t len = std::min(kBlock, total - start);
    for (int v = 0; v < n_; ++v) {
      auto& pw = powers[static_cast<std::size_t>(v)];
      pw[0].assign(len, 1);
      for (int e = 1; e <= maxdeg; ++e) {
        pw[static_cast<std::size_t>(e)].resize(len);
        kern.mul_mod(pw[static_cast<std::size_t>(e)].data(), pw[static_cast<std::size_t>(e) - 1].data(),
                     coords[static_cast<std::size_t>(v)].data() + start, p_, len);
      }
    }
    for (int j = 0; j < n_; ++j) {
      auto& acc = grad[static_cast<std::size_t>(j)];
      acc.assign(len, 0);
      for (const auto& t : partials[static_cast<std::size_t>(j)].terms()) {
        term.assign(len, 1);
        for (int v = 0; v < n_; ++v) {
          int e = t.m[v];
          if (e > 0)
            kern.mul_mod(term.data(), term.data(), powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)].data(),
                         p_, len);
        }
        kern.axpy_mod(acc.data(), term.data(), t.c, p_, len);
      }
    }
    for (std::size_t i = 0; i < len; ++i) {
      for (int j = 0; j < n_; ++j) g[static_cast<std::size_t>(j)] = grad[static_cast<std::size_t>(j)][i];
      if (std::all_of(g.begin(), g.end(), [](std::uint32_t x) { return x == 0; })) continue;
      ++counts_[index_of(g)];
    }
  }
}

std::size_t FiberCounter::index_of(const std::vector<std::uint32_t>& v) const {
  int lead = 0;
  while (lead < n_ && v[static_cast<std::size_t>(lead)] % p_ == 0) ++lead;
  if (lead == n_) throw PreconditionError("the zero vector is not a projective point");
  const std::uint32_t scale = linalg::inv_mod(v[static_cast<std::size_t>(lead)] % p_, p_);
  std::size_t offset = 0;
  // Leading positions before `lead` own p^(n-1-i) points each.
  for (int i = 0; i < lead; ++i) {
    std::size_t b = 1;
    for (int j = i + 1; j < n_; ++j) b *= p_;
    offset += b;
  }
  std::size_t r = 0, weight = 1;
  for (int j = n_ - 1; j > lead; --j) {
    r += weight * (static_cast<std::uint64_t>(v[static_cast<std::size_t>(j)] % p_) * scale % p_);
    weight *= p_;
  }
  return offset + r;
}

std::int64_t FiberCounter::count(const std::vector<std::uint32_t>& q) const {
  if (static_cast<int>(q.size()) != n_) throw PreconditionError("target has the wrong length");
  return counts_[index_of(q)];
}

#define MILNOR_INSTANTIATE(K)                                                                        \
  template Polynomial<K> generic_section(const Polynomial<K>&, int, std::uint64_t, SectionMode);    \
  template std::int64_t polar_degree(const Polynomial<K>&, std::uint64_t);                          \
  template std::int64_t polar_degree_by_minors(const Polynomial<K>&, std::uint64_t);                \
  template std::optional<std::int64_t> gradient_fiber_degree(const Polynomial<K>&,                  \
                                                             const std::vector<typename K::Elem>&); \
  template MixedMultSeq mixed_multiplicities(const Polynomial<K>&, std::uint64_t);                  \
  template MixedMultSeq mixed_multiplicities_checked(const Polynomial<K>&, std::uint64_t, int);     \
  template std::int64_t total_milnor_plane_curve(const Polynomial<K>&, std::uint64_t);              \
  template HomaloidalWitness is_homaloidal(const Polynomial<K>&, std::uint64_t);

MILNOR_INSTANTIATE(PrimeField)
MILNOR_INSTANTIATE(RationalField)

}  // namespace milnor
