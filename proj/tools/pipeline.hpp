#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/atlas.hpp"
#include "report.hpp"

namespace milnor::cli {

struct Options {
  std::uint32_t prime = 32003;
  /// Independent seeds every randomized value must agree across.
  int trials = 2;
  std::uint64_t seed = 1;
  bool rational = false;
  bool timings = false;
};

/// Primes tried in order before falling back to exact rationals.
std::vector<std::uint32_t> escalation_primes(const Options& opt);

struct PolynomialSource {
  std::string label;
  std::string text;
  std::vector<std::string> variables;
};

Report analyze(const PolynomialSource& source, const Options& opt);

struct ArrangementSource {
  std::string label;
  std::vector<std::string> forms;
  std::vector<std::string> variables;
};

Report analyze_arrangement(const ArrangementSource& source, const Options& opt);

PolynomialSource family_source(const FamilyId& id);
ArrangementSource family_arrangement_source(const FamilyId& id);

/// Runs the regression corpus; returns the number of mismatches.
int run_corpus(const Options& opt, const std::string& only, Report& out, std::ostream& progress);

}  // namespace milnor::cli
