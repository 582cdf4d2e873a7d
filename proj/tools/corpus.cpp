#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "milnor/atlas.hpp"
#include "pipeline.hpp"

namespace milnor::cli {

namespace {

struct Row {
  std::string key;
  Report expected;
  Report computed;
  bool ok() const { return expected == computed; }
};

struct Entry {
  std::string module;
  std::string name;
  std::function<std::vector<Row>(const Options&)> run;
};

using Extract = std::function<Report(const Report&)>;

struct Expect {
  std::string key;
  Report expected;
  Extract extract;
};

Extract at(const std::string& pointer) {
  return [pointer](const Report& r) -> Report {
    const Report::json_pointer p(pointer);
    return r.contains(p) ? r.at(p) : Report("<missing>");
  };
}

Expect eq(const std::string& pointer, Report expected) { return {pointer, std::move(expected), at(pointer)}; }

std::vector<Row> rows(const Report& report, const std::vector<Expect>& expects) {
  std::vector<Row> out;
  for (const auto& e : expects) out.push_back({e.key, e.expected, e.extract(report)});
  return out;
}

/// Several entries read the same analysis; each input is analyzed once per run.
class ReportCache {
 public:
  template <class Compute>
  Report get(const std::string& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = done_.find(key); it != done_.end()) return it->second;
    }
    Report r = compute();
    std::lock_guard lock(mutex_);
    return done_.emplace(key, std::move(r)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::string, Report> done_;
};

std::string options_key(const Options& o) {
  return (o.rational ? std::string("QQ") : std::to_string(o.prime)) + "/" + std::to_string(o.seed) + "/" +
         std::to_string(o.trials) + "/" + (o.timings ? "t" : "");
}

ReportCache& cache() {
  static ReportCache c;
  return c;
}

Entry polynomial_entry(std::string module, const PolynomialSource& src, std::vector<Expect> expects) {
  return {std::move(module), src.label, [src, expects](const Options& opt) {
            return rows(cache().get(options_key(opt) + " polynomial " + src.label, [&] { return analyze(src, opt); }), expects);
          }};
}

Entry arrangement_entry(std::string module, const ArrangementSource& src, std::vector<Expect> expects) {
  return {std::move(module), src.label, [src, expects](const Options& opt) {
            return rows(cache().get(options_key(opt) + " arrangement " + src.label, [&] { return analyze_arrangement(src, opt); }), expects);
          }};
}

template <class Body>
auto in_field(const Options& opt, Body&& body) {
  if (opt.rational) return body(RationalField());
  return body(PrimeField(opt.prime));
}

std::vector<FamilyId> family_range(FamilyKind kind, int lo, int hi) {
  std::vector<FamilyId> out;
  for (int d = lo; d <= hi; ++d) out.push_back(family(kind, d));
  return out;
}

std::vector<FamilyId> all_family_members() {
  std::vector<FamilyId> out;
  for (auto [kind, lo, hi] : {std::tuple{FamilyKind::D, 4, 11}, std::tuple{FamilyKind::Dp, 6, 13},
                              std::tuple{FamilyKind::Dpp, 4, 13}, std::tuple{FamilyKind::Dppp, 5, 13}})
    for (const auto& id : family_range(kind, lo, hi)) out.push_back(id);
  return out;
}

Report exponent_sum(const Report& r) {
  int s = 0;
  for (const auto& e : r.at("freeness").at("exponents")) s += e.get<int>();
  return s;
}

std::vector<Expect> schedule(const FamilyId& id) {
  const int d = id.d;
  std::vector<Expect> out;
  std::string status = "nearly_free";
  std::vector<int> exponents;
  switch (id.kind) {
    case FamilyKind::D:
      if (d == 7 || d == 8) status = "free";
      break;
    case FamilyKind::Dp:
      if (d >= 10) {
        status = "free";
        exponents = {1, 4, d - 6};
      }
      break;
    case FamilyKind::Dpp: exponents = {1, 1, d - 2}; break;
    case FamilyKind::Dppp: exponents = {1, 2, d - 3}; break;
    default: break;
  }
  out.push_back(eq("/freeness/status", status));
  if (!exponents.empty()) out.push_back(eq("/freeness/exponents", exponents));
  if (status == "free") {
    out.push_back({"exponent sum", d - 1, exponent_sum});
    out.push_back({"exponents_from_hilbert = exponents", true, [](const Report& r) -> Report {
                     const auto& fr = r.at("freeness");
                     return fr.contains("exponents_from_hilbert") && fr.at("exponents_from_hilbert") == fr.at("exponents");
                   }});
  }
  return out;
}

std::vector<Entry> build_corpus() {
  using FK = FamilyKind;
  std::vector<Entry> c;
  auto poly = [](FK k, int d = 0) { return family_source(family(k, d)); };
  auto arr = [](FK k, int d = 0) { return family_arrangement_source(family(k, d)); };
  const PolynomialSource quadric{"smooth quadric", "x^2+y^2+z^2+w^2", {"x", "y", "z", "w"}};
  const PolynomialSource cubic{"Fermat cubic", "x^3+y^3+z^3+w^3", {"x", "y", "z", "w"}};
  const ArrangementSource xyzw{"xyzw", {"x", "y", "z", "w"}, {"x", "y", "z", "w"}};

  // hilbert
  c.push_back(arrangement_entry("hilbert", arr(FK::PappusW), {eq("/lift/hilbert_polynomial", "45*t - 189")}));
  c.push_back(arrangement_entry("hilbert", arr(FK::PappusWp), {eq("/lift/hilbert_polynomial", "45*t - 190")}));
  c.push_back(arrangement_entry("hilbert", arr(FK::PappusConeW), {eq("/hilbert/polynomial", "54*t - 261")}));
  c.push_back(arrangement_entry("hilbert", arr(FK::PappusConeWp), {eq("/hilbert/polynomial", "54*t - 262")}));
  c.push_back({"hilbert", "Ex33 pair H(k), k <= 25", [](const Options& opt) {
                 return in_field(opt, [](const auto& field) {
                   auto a = family_polynomial(family(FK::Ex33Arrangement), field);
                   auto s = family_polynomial(family(FK::Ex33Surface), field);
                   using K = std::decay_t<decltype(field)>;
                   Ideal<K> ja(a.ring(), partial_derivatives(a)), js(s.ring(), partial_derivatives(s));
                   std::vector<std::int64_t> ha, hs;
                   for (int k = 0; k <= 25; ++k) {
                     ha.push_back(hilbert_function(ja, k));
                     hs.push_back(hilbert_function(js, k));
                   }
                   return std::vector<Row>{{"H(k) equal", true, ha == hs}};
                 });
               }});
  c.push_back(polynomial_entry("hilbert", poly(FK::Delta3), {eq("/singular_locus/dimension", 1)}));

  // resolution
  for (const auto& id : all_family_members()) c.push_back(polynomial_entry("resolution", family_source(id), schedule(id)));
  c.push_back(polynomial_entry("resolution", poly(FK::CubicY12), {eq("/freeness/status", "neither")}));
  c.push_back(polynomial_entry("resolution", quadric, {eq("/freeness/status", "neither")}));
  c.push_back(arrangement_entry("resolution", xyzw,
                                {eq("/freeness/status", "free"), eq("/freeness/exponents", {1, 1, 1}),
                                 eq("/freeness/exponents_from_hilbert", {1, 1, 1})}));
  c.push_back({"resolution", "Pappus Hilbert polynomials are not free compatible", [](const Options&) {
                 std::vector<Row> out;
                 for (auto [label, c0] : {std::pair{"45*t - 189", -189}, std::pair{"45*t - 190", -190}}) {
                   Report computed = "accepted";
                   try {
                     exponents_from_hilbert_polynomial({mpq_class(c0), mpq_class(45)}, 9, 3);
                   } catch (const NotFreeCompatible&) {
                     computed = "not free compatible";
                   }
                   out.push_back({label, "not free compatible", computed});
                 }
                 return out;
               }});

  // polar
  for (const auto& id : all_family_members()) {
    const std::int64_t d = id.d;
    c.push_back(polynomial_entry("polar", family_source(id),
                                 {eq("/mixed_multiplicities", {1, d - 1, d, 1}), eq("/homaloidal/verdict", true)}));
  }
  c.push_back(polynomial_entry("polar", poly(FK::Delta3),
                               {eq("/mixed_multiplicities/3", 1), eq("/euler_complement", 0),
                                eq("/homaloidal/verdict", true), eq("/singular_locus/reduced_degree", 3),
                                eq("/section/total_milnor", 6), eq("/section/total_tjurina", 6)}));
  c.push_back(polynomial_entry("polar", poly(FK::CubicY12), {eq("/homaloidal/verdict", true)}));
  c.push_back(polynomial_entry("polar", poly(FK::Ex33Surface), {eq("/mixed_multiplicities", {1, 6, 7, 1})}));
  c.push_back(polynomial_entry("polar", quadric,
                               {eq("/mixed_multiplicities", {1, 1, 1, 1}), eq("/homaloidal/verdict", true)}));
  c.push_back(polynomial_entry("polar", cubic, {eq("/polar_degree", 8), eq("/homaloidal/verdict", false)}));

  // arrangements
  const std::vector<Expect> equal_betti{eq("/betti_equals_mixed", true), eq("/formula_a/holds", true)};
  auto with = [](std::vector<Expect> base, std::vector<Expect> more) {
    base.insert(base.end(), more.begin(), more.end());
    return base;
  };
  c.push_back(arrangement_entry("arrangements", xyzw, with(equal_betti, {eq("/betti", {1, 3, 3, 1})})));
  c.push_back(arrangement_entry("arrangements", arr(FK::PappusW), with(equal_betti, {eq("/betti", {1, 8, 19})})));
  c.push_back(arrangement_entry("arrangements", arr(FK::PappusWp), with(equal_betti, {eq("/betti", {1, 8, 19})})));
  for (auto k : {FK::PappusConeW, FK::PappusConeWp})
    c.push_back(arrangement_entry("arrangements", arr(k), with(equal_betti, {eq("/formula_b/holds", false)})));
  for (int d = 4; d <= 6; ++d)
    c.push_back(arrangement_entry("arrangements", arr(FK::GenericArr, d),
                                  with(equal_betti, {eq("/generic", true), eq("/formula_b1/holds", true)})));
  c.push_back(arrangement_entry("arrangements", arr(FK::Ex33Arrangement),
                                with(equal_betti, {eq("/mixed_multiplicities", {1, 6, 11, 6})})));

  // atlas
  c.push_back({"atlas", "overlap table", [](const Options& opt) {
                 std::vector<Row> out;
                 for (const auto& e : overlap_table(opt.seed)) {
                   std::string key;
                   for (const auto& id : e.members) key += (key.empty() ? "" : (e.asserted_equal ? " = " : " vs ")) + to_string(id);
                   out.push_back({key, true, e.consistent});
                 }
                 return out;
               }});
  c.push_back({"atlas", "preimage witnesses", [](const Options& opt) {
                 return in_field(opt, [&](const auto& field) {
                   std::vector<Row> out;
                   for (auto [k, d] : {std::pair{FK::D, 5}, std::pair{FK::Dp, 6}, std::pair{FK::Dpp, 4}, std::pair{FK::Dppp, 5}}) {
                     auto id = family(k, d);
                     out.push_back({to_string(id) + " unique preimage", true, preimage_witness(id, field, opt.seed).unique()});
                   }
                   return out;
                 });
               }});
  return c;
}

std::string cell(const Report& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

int run_corpus(const Options& opt, const std::string& only, Report& out, std::ostream& progress) {
  std::vector<Entry> entries;
  for (auto& e : build_corpus())
    if (only.empty() || e.module == only) entries.push_back(std::move(e));
  if (entries.empty()) throw PreconditionError("no corpus module named '" + only + "'");

  // Entries are independent; results land in fixed slots so output order is stable.
  std::vector<std::vector<Row>> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      try {
        results[i] = entries[i].run(opt);
      } catch (const std::exception& ex) {
        results[i] = {{"error", "none", std::string(ex.what())}};
      }
    }
  };
  const std::size_t n = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, entries.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int mismatches = 0;
  out = Report::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& row : results[i]) {
      const bool ok = row.ok();
      mismatches += ok ? 0 : 1;
      progress << (ok ? "ok   " : "FAIL ") << entries[i].module << " | " << entries[i].name << " | " << row.key
               << " | expected " << cell(row.expected) << " | computed " << cell(row.computed) << "\n";
      Report r;
      r["module"] = entries[i].module;
      r["entry"] = entries[i].name;
      r["key"] = row.key;
      r["expected"] = row.expected;
      r["computed"] = row.computed;
      r["ok"] = ok;
      out.push_back(std::move(r));
    }
  }
  progress << (mismatches == 0 ? "all " : std::to_string(mismatches) + " mismatches among ")
           << out.size() << " corpus checks\n";
  return mismatches;
}

}  // namespace milnor::cli
