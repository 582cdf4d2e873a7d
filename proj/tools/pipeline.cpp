#include "pipeline.hpp"

#include <chrono>

#include "milnor/arrangements.hpp"
#include "milnor/polar.hpp"
#include "milnor/resolution.hpp"

namespace milnor::cli {

namespace {

// Seed streams, so that each randomized step has its own reproducible seed.
enum Stream : std::uint64_t { kMixed = 1, kHomaloidal, kSection, kSectionMilnor, kReducedDegree };

class Stopwatch {
 public:
  Stopwatch(Report& r, bool on) : r_(r), on_(on), last_(std::chrono::steady_clock::now()) {}
  void lap(const char* stage) {
    auto now = std::chrono::steady_clock::now();
    if (on_) r_["timings_ms"][stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  Report& r_;
  bool on_;
  std::chrono::steady_clock::time_point last_;
};

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string hp_string(const std::vector<mpq_class>& hp) {
  if (hp.empty()) return "0";
  std::string s;
  for (std::size_t i = hp.size(); i-- > 0;) {
    if (sgn(hp[i]) == 0) continue;
    mpq_class c = hp[i];
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (s.empty())
      s = negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty())
      s += c.get_str();
    else
      s += (c == 1 ? "" : c.get_str() + "*") + mono;
  }
  return s;
}

std::string field_name(const PrimeField& k) { return k.descriptor().to_string(); }
std::string field_name(const RationalField& k) { return k.descriptor().to_string(); }

// Random draws over Q come from a small integer box, so they land on special
// loci far more often than draws from F_p; the rational stage gets fresh seeds.
constexpr int kRationalSeedRetries = 3;

template <class Body>
Report with_escalation(const Options& opt, Body&& body) {
  Report failures = Report::array();
  auto attempt = [&](const auto& field, const Options& o) -> std::optional<Report> {
    try {
      Report r = body(field, o);
      r["field"] = field_name(field);
      r["seed"] = o.seed;
      if (!failures.empty()) r["escalations"] = failures;
      return r;
    } catch (const GenericityFailure& e) {
      failures.push_back(field_name(field) + " seed " + std::to_string(o.seed) + ": " + e.what());
      return std::nullopt;
    }
  };
  if (!opt.rational)
    for (auto p : escalation_primes(opt))
      if (auto r = attempt(PrimeField(p), opt)) return *r;
  Options o = opt;
  for (int retry = 0; retry <= kRationalSeedRetries; ++retry) {
    if (retry > 0) o.seed = derive_seed(opt.seed, 1000 + static_cast<std::uint64_t>(retry));
    if (auto r = attempt(RationalField(), o)) return *r;
  }
  throw GenericityFailure("randomized invariants disagreed over every field tried: " + failures.dump());
}

/// Everything computed from f itself, shared by `analyze` and `arrangement`.
template <class K>
void analyze_polynomial(const Polynomial<K>& f, const Options& opt, Report& r) {
  Stopwatch watch(r, opt.timings);
  if (!f.is_homogeneous()) throw PreconditionError("input is not homogeneous");
  const int nv = f.nvars();
  const int n = nv - 1;
  const int d = f.degree();
  r["degree"] = d;
  r["nvars"] = nv;

  HilbertData h = milnor_hilbert_data(f);
  Report& hr = r["hilbert"];
  hr["numerator"] = h.numerator;
  hr["polynomial"] = hp_string(h.hp);
  Report coeffs = Report::array();
  for (const auto& c : h.hp) coeffs.push_back(rational_string(c));
  hr["polynomial_coefficients"] = coeffs;
  hr["regularity_index"] = h.k0;
  hr["values"] = h.prefix;
  if (h.hp.size() <= 1) hr["total_tjurina"] = h.hp.empty() ? 0 : h.hp[0].get_num().get_si();
  watch.lap("hilbert");

  const int sing_dim = h.projective_dimension();
  const bool reduced = sing_dim <= n - 2;
  r["singular_locus"]["dimension"] = sing_dim;
  r["singular_locus"]["scheme_degree"] = h.degree();
  if (sing_dim >= 0 && sing_dim < n) {
    // Reduced degrees are computed modulo a prime; rational input is reduced first.
    const auto s = derive_seed(opt.seed, kReducedDegree);
    if constexpr (std::is_same_v<K, PrimeField>) {
      r["singular_locus"]["reduced_degree"] = singular_locus_reduced_degree(f, s);
    } else {
      const PrimeField gf(opt.prime);
      auto ring = make_ring<PrimeField>(f.ring()->names(), gf);
      r["singular_locus"]["reduced_degree"] = singular_locus_reduced_degree(parse_polynomial(f.to_string(), ring), s);
      r["singular_locus"]["reduced_degree_field"] = gf.descriptor().to_string();
    }
    r["seeds"]["reduced_degree"] = s;
  }
  r["reduced"] = reduced;

  auto betti = betti_table(f);
  r["resolution"]["betti"] = betti.columns;
  r["resolution"]["length"] = betti.length();
  auto verdict = classify_from_betti(betti, d, nv);
  r["freeness"]["status"] = to_string(verdict.status);
  r["freeness"]["exponents"] = verdict.exponents;
  if (verdict.status == FreenessStatus::Free && n >= 2 && sing_dim <= 1) {
    try {
      r["freeness"]["exponents_from_hilbert"] = exponents_from_hilbert_polynomial(h.hp, d, n);
    } catch (const NotFreeCompatible& e) {
      r["freeness"]["exponents_from_hilbert"] = std::string("not free compatible: ") + e.what();
    }
  }
  watch.lap("resolution");

  if (!reduced || d < 2 || nv < 2) {
    r["polar"]["skipped"] = !reduced ? "input is not reduced" : "needs degree >= 2 in at least two variables";
    return;
  }
  const auto mixed_seed = derive_seed(opt.seed, kMixed);
  auto mixed = mixed_multiplicities_checked(f, mixed_seed, opt.trials);
  r["mixed_multiplicities"] = mixed.mu;
  r["euler_complement"] = mixed.euler();
  r["polar_degree"] = mixed.mu.back();
  const auto hom_seed = derive_seed(opt.seed, kHomaloidal);
  auto hom = is_homaloidal(f, hom_seed);
  if (hom.dominant && hom.polar_degree != mixed.mu.back())
    throw GenericityFailure("polar degree differs between the mixed and homaloidal runs");
  r["homaloidal"]["verdict"] = hom.verdict;
  r["homaloidal"]["dominant"] = hom.dominant;
  if (!hom.dominant) r["homaloidal"]["note"] = "gradient map not dominant; polar degree 0 by convention";
  r["seeds"]["mixed"] = mixed.seeds;
  r["seeds"]["homaloidal"] = hom_seed;
  watch.lap("polar");

  // Plane curve data, for f itself or for a generic plane section of a surface.
  auto curve_data = [&](const auto& curve, Report& out) {
    try {
      out["total_tjurina"] = total_tjurina(curve);
    } catch (const NonIsolatedSingularities&) {
      out["isolated"] = false;
      return std::optional<std::int64_t>{};
    }
    const auto s = derive_seed(opt.seed, kSectionMilnor);
    std::int64_t mu = total_milnor_plane_curve(curve, s);
    out["total_milnor"] = mu;
    r["seeds"]["section_milnor"] = s;
    return std::optional<std::int64_t>{mu};
  };
  const std::int64_t dm1 = d - 1;
  if (n == 2) {
    if (auto mu = curve_data(f, r["curve"]))
      r["curve"]["isolated_law_holds"] = mixed.mu[2] == dm1 * dm1 - *mu;
  } else if (n == 3) {
    const auto s = derive_seed(opt.seed, kSection);
    auto c = generic_section(f, 2, s);
    r["seeds"]["section"] = s;
    Report& sr = r["section"];
    sr["degree"] = c.degree();
    if (auto mu = curve_data(c, sr)) {
      sr["mu2_law_holds"] = mixed.mu[2] == dm1 * dm1 - *mu;
      sr["surface_identity_holds"] = mixed.mu[3] == 1 + dm1 * (d - 2) - *mu - mixed.euler();
    }
  }
  watch.lap("sections");
}

template <class K>
Report analyze_in(const PolynomialSource& src, const Options& opt, const K& field) {
  Report r;
  r["input"] = src.label;
  r["polynomial"] = src.text;
  r["variables"] = src.variables;
  auto ring = make_ring<K>(src.variables, field);
  analyze_polynomial(parse_polynomial(src.text, ring), opt, r);
  return r;
}

Report formula_record(const FormulaCheck& c) {
  Report r;
  r["lhs"] = rational_string(c.lhs);
  r["rhs"] = rational_string(c.rhs);
  r["holds"] = c.holds;
  return r;
}

template <class K>
Report arrangement_in(const ArrangementSource& src, const Options& opt, const K& field) {
  Report r;
  r["input"] = src.label;
  r["forms"] = src.forms;
  r["variables"] = src.variables;
  auto ring = make_ring<K>(src.variables, field);
  std::vector<Polynomial<K>> forms;
  for (const auto& t : src.forms) forms.push_back(parse_polynomial(t, ring));
  Arrangement<K> a(ring, forms);

  auto lattice = build_lattice(a);
  for (int k = 1; k <= lattice.rank(); ++k) {
    Report level;
    for (const auto& [mult, count] : lattice.multiplicities(k)) level[std::to_string(mult)] = count;
    r["lattice"]["codim_" + std::to_string(k)] = level;
  }
  auto betti = betti_complement(lattice, ring->nvars());
  r["betti"] = betti;
  r["generic"] = is_generic(lattice);

  Polynomial<K> f = a.defining_polynomial();
  analyze_polynomial(f, opt, r);
  if (r.contains("mixed_multiplicities"))
    r["betti_equals_mixed"] = r["mixed_multiplicities"].template get<std::vector<std::int64_t>>() == betti;

  // Formula checks live in P^3; plane arrangements are read there as
  // non-essential arrangements.
  std::optional<Arrangement<K>> space;
  if (ring->nvars() == 4) {
    space = a;
  } else if (ring->nvars() == 3) {
    std::string extra = "w";
    while (ring->index_of(extra) >= 0) extra = "_" + extra;
    auto names = src.variables;
    names.push_back(extra);
    auto lifted = make_ring<K>(names, field);
    std::vector<Polynomial<K>> lifted_forms;
    for (const auto& t : src.forms) lifted_forms.push_back(parse_polynomial(t, lifted));
    space.emplace(lifted, lifted_forms);
    r["formulas_in"] = "non-essential lift to P^3";
    r["lift"]["hilbert_polynomial"] = hp_string(milnor_hilbert_data(space->defining_polynomial()).hp);
  }
  if (space) {
    r["formula_a"] = formula_record(check_formula_a(*space));
    r["formula_b"] = formula_record(check_formula_b(*space));
    try {
      auto b1 = check_formula_b1(*space);
      r["formula_b1"] = formula_record(b1);
      r["conjecture_b1_evidence"]["d"] = space->size();
      r["conjecture_b1_evidence"]["holds"] = b1.holds;
    } catch (const NotGeneric&) {
      r["formula_b1"]["status"] = "not generic";
    }
  }
  return r;
}

}  // namespace

std::vector<std::uint32_t> escalation_primes(const Options& opt) {
  if (!is_prime(opt.prime)) throw PreconditionError(std::to_string(opt.prime) + " is not prime");
  if (opt.prime < 32003 || opt.prime >= PrimeField::kMaxPrime)
    throw PreconditionError("the working prime must lie in [32003, 2^26)");
  return {opt.prime, opt.prime == 65521 ? 32003u : 65521u};
}

PolynomialSource family_source(const FamilyId& id) {
  return {to_string(id), family_polynomial(id, RationalField()).to_string(), family_variables(id)};
}

ArrangementSource family_arrangement_source(const FamilyId& id) {
  ArrangementSource src{to_string(id), {}, family_variables(id)};
  const auto a = family_arrangement(id, RationalField());
  for (const auto& l : a.forms()) src.forms.push_back(l.to_string());
  return src;
}

Report analyze(const PolynomialSource& source, const Options& opt) {
  return with_escalation(opt, [&](const auto& field, const Options& o) { return analyze_in(source, o, field); });
}

Report analyze_arrangement(const ArrangementSource& source, const Options& opt) {
  return with_escalation(opt, [&](const auto& field, const Options& o) { return arrangement_in(source, o, field); });
}

}  // namespace milnor::cli
