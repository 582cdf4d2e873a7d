#include "milnor/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceLimit("Hilbert series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimit("Hilbert series coefficient overflow");
  return r;
}

}  // namespace

IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  return trim(std::move(r));
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  return trim(std::move(r));
}

IntPoly shift(const IntPoly& p, int k) {
  if (p.empty()) return {};
  IntPoly r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

std::int64_t evaluate_at_one(const IntPoly& p) {
  std::int64_t s = 0;
  for (auto c : p) s = checked_add(s, c);
  return s;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.exps < b.exps;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

namespace {

class NumeratorSolver {
 public:
  IntPoly solve(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().deg == 0) return {};

    bool pairwise_coprime = true;
    std::uint64_t support = 0;
    for (const auto& g : gens) {
      std::uint64_t nz = ((g.exps | Monomial::kHigh) - 0x0101010101010101ULL) & Monomial::kHigh;
      if (nz & support) {
        pairwise_coprime = false;
        break;
      }
      support |= nz;
    }
    if (pairwise_coprime) {
      IntPoly r{1};
      for (const auto& g : gens) {
        IntPoly factor(g.deg + 1, 0);
        factor[0] = 1;
        factor[g.deg] = -1;
        r = multiply(r, factor);
      }
      return r;
    }

    std::vector<std::uint64_t> key;
    key.reserve(gens.size());
    for (const auto& g : gens) key.push_back(g.exps);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Pivot: the variable occurring in the most mixed (non pure power)
    // generators, raised to the median of its exponents there. Such an
    // exponent is below any pure power of that variable in the ideal, so
    // the pivot is not in M and both branches shrink.
    auto is_pure = [](const Monomial& g) { return g[std::countr_zero(g.exps) >> 3] == static_cast<int>(g.deg); };
    int best_var = -1, best_count = 0;
    for (int v = 0; v < kMaxVars; ++v) {
      int count = 0;
      for (const auto& g : gens) count += g[v] > 0 && !is_pure(g);
      if (count > best_count) {
        best_count = count;
        best_var = v;
      }
    }
    std::vector<int> exps;
    for (const auto& g : gens)
      if (g[best_var] > 0 && !is_pure(g)) exps.push_back(g[best_var]);
    std::sort(exps.begin(), exps.end());
    int e = exps[exps.size() / 2];
    Monomial pivot = Monomial::variable(best_var, e);

    std::vector<Monomial> with_pivot = gens;
    with_pivot.push_back(pivot);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) colon.push_back(quotient(g, gcd(g, pivot)));

    IntPoly result = add(solve(std::move(with_pivot)), shift(solve(std::move(colon)), e));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::vector<std::uint64_t>, IntPoly> memo_;
};

}  // namespace

IntPoly hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
  (void)nvars;
  NumeratorSolver solver;
  return solver.solve(gens);
}

std::optional<std::int64_t> standard_monomial_total(const std::vector<Monomial>& gens, int nvars) {
  // Finite iff every variable has a pure power among the generators.
  std::vector<Monomial> mins = minimalize(gens);
  for (int v = 0; v < nvars; ++v) {
    bool has_power = false;
    for (const auto& g : mins)
      if (g.deg > 0 && g[v] == static_cast<int>(g.deg)) has_power = true;
    if (!has_power && !(mins.size() == 1 && mins[0].deg == 0)) return std::nullopt;
  }
  // HS(t) = N(t)/(1-t)^n is then a polynomial; its value at 1 is the count.
  IntPoly n = hilbert_numerator(mins, nvars);
  for (int i = 0; i < nvars; ++i) {
    // Divide by (1 - t): synthetic division, remainder must vanish.
    if (n.empty()) break;
    IntPoly q(n.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      carry += n[k];
      q[k] = carry;
    }
    if (carry + n.back() != 0) throw Error("internal: Hilbert numerator not divisible by (1-t)");
    n = trim(std::move(q));
  }
  return evaluate_at_one(n);
}

}  // namespace milnor
