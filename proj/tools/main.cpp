#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "milnor/atlas.hpp"
#include "pipeline.hpp"

namespace {

using namespace milnor;
using namespace milnor::cli;

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kPrecondition = 3, kResource = 4, kGenericity = 5 };

/// File I/O and usage problems share the parse-error exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "Dp(7)", "Dp 7" split over two arguments, or a fixed name like "Delta3".
std::optional<FamilyId> family_from_text(const std::string& text, int d) {
  std::string name = text;
  if (auto open = text.find('('); open != std::string::npos && text.back() == ')') {
    name = text.substr(0, open);
    try {
      d = std::stoi(text.substr(open + 1, text.size() - open - 2));
    } catch (const std::exception&) {
      throw InputError("bad degree in " + text);
    }
  }
  auto kind = kind_from_name(name);
  if (!kind) return std::nullopt;
  return family(*kind, d);
}

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string v; std::getline(ss, v, ',');)
    if (!v.empty()) out.push_back(v);
  return out;
}

std::string strip(std::string s) {
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

PolynomialSource polynomial_from(const std::string& input, const std::string& vars) {
  if (!std::filesystem::exists(input))
    if (auto id = family_from_text(input, 0)) return family_source(*id);
  std::string text;
  for (std::stringstream ss(read_file(input)); !ss.eof();) {
    std::string line;
    std::getline(ss, line);
    text += " " + strip(line);
  }
  text = strip(text);
  if (text.empty()) throw ParseError("empty input", 0);
  auto names = vars.empty() ? infer_variables(text) : split_vars(vars);
  // Validate once so parse errors surface before any field is chosen.
  parse_polynomial(text, make_ring<RationalField>(names, RationalField()));
  return {input, text, names};
}

ArrangementSource arrangement_from(const std::string& input, const std::string& vars) {
  if (!std::filesystem::exists(input)) {
    if (auto id = family_from_text(input, 0)) {
      if (!is_arrangement(id->kind)) throw PreconditionError(to_string(*id) + " is not an arrangement");
      return family_arrangement_source(*id);
    }
  }
  const std::string text = read_file(input);
  ArrangementSource src{input, {}, {}};
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);)
    if (auto form = strip(line); !form.empty()) src.forms.push_back(form);
  if (vars.empty()) {
    std::string all;
    for (const auto& f : src.forms) all += f + "+";
    src.variables = infer_variables(all);
  } else {
    src.variables = split_vars(vars);
  }
  parse_arrangement(text, make_ring<RationalField>(src.variables, RationalField()));
  return src;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact invariants of Milnor algebras of projective hypersurfaces"};
  app.require_subcommand(1);
  Options opt;
  bool machine = false;
  app.add_option("--prime", opt.prime, "working prime, at least 32003")->capture_default_str();
  app.add_option("--trials", opt.trials, "independent seeds randomized values must agree across")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "base seed")->capture_default_str();
  app.add_flag("--rational", opt.rational, "compute over Q instead of a prime field");
  app.add_flag("--machine", machine, "emit the report as one JSON document");
  app.add_flag("--timings", opt.timings, "add wall-clock timings (reports stop being reproducible)");

  std::string input, vars;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a homogeneous polynomial (file or family name)");
  analyze_cmd->add_option("input", input, "file or family such as Delta3, D(7)")->required();
  analyze_cmd->add_option("--vars", vars, "comma separated variable order");

  auto* arrangement_cmd = app.add_subcommand("arrangement", "analyze a hyperplane arrangement, one form per line");
  arrangement_cmd->add_option("input", input, "file or arrangement family such as PappusW")->required();
  arrangement_cmd->add_option("--vars", vars, "comma separated variable order");

  std::string family_name;
  int family_degree = 0;
  bool analyze_family = false;
  auto* family_cmd = app.add_subcommand("family", "print a member of the built-in families");
  family_cmd->add_option("id", family_name, "family name")->required();
  family_cmd->add_option("d", family_degree, "degree for D, Dp, Dpp, Dppp, GenericArr");
  family_cmd->add_flag("--analyze", analyze_family, "append the full analysis");

  std::string only;
  auto* corpus_cmd = app.add_subcommand("corpus", "run the regression corpus");
  corpus_cmd->add_option("--only", only, "hilbert, resolution, polar, arrangements or atlas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  Report report;
  if (analyze_cmd->parsed()) {
    report = analyze(polynomial_from(input, vars), opt);
  } else if (arrangement_cmd->parsed()) {
    report = analyze_arrangement(arrangement_from(input, vars), opt);
  } else if (family_cmd->parsed()) {
    auto id = family_from_text(family_name, family_degree);
    if (!id) throw InputError("unknown family " + family_name);
    report["id"] = to_string(*id);
    report["variables"] = family_variables(*id);
    report["polynomial"] = family_source(*id).text;
    if (is_arrangement(id->kind)) report["forms"] = family_arrangement_source(*id).forms;
    if (analyze_family)
      report["analysis"] = is_arrangement(id->kind) ? analyze_arrangement(family_arrangement_source(*id), opt)
                                                    : analyze(family_source(*id), opt);
  } else if (corpus_cmd->parsed()) {
    escalation_primes(opt);  // validates --prime
    Report rows;
    int mismatches = run_corpus(opt, only, rows, machine ? std::cerr : std::cout);
    if (machine) emit(std::cout, rows, true);
    return mismatches == 0 ? kOk : kMismatch;
  }
  emit(std::cout, report, machine);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const milnor::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const milnor::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const milnor::GenericityFailure& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return kGenericity;
  } catch (const milnor::Error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  }
}
