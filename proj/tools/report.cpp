#include "report.hpp"

namespace milnor::cli {

namespace {

bool is_scalar_array(const Report& r) {
  if (!r.is_array()) return false;
  for (const auto& e : r)
    if (e.is_structured()) return false;
  return true;
}

void flatten(std::ostream& out, const std::string& prefix, const Report& r) {
  if (r.is_object()) {
    for (const auto& [key, value] : r.items()) flatten(out, prefix.empty() ? key : prefix + "." + key, value);
    return;
  }
  if (r.is_array() && !is_scalar_array(r)) {
    for (std::size_t i = 0; i < r.size(); ++i) flatten(out, prefix + "." + std::to_string(i), r[i]);
    return;
  }
  out << prefix << ": ";
  if (r.is_string())
    out << r.get<std::string>();
  else
    out << r.dump();
  out << '\n';
}

}  // namespace

void emit(std::ostream& out, const Report& report, bool machine) {
  if (machine)
    out << report.dump(2) << '\n';
  else
    flatten(out, "", report);
}

}  // namespace milnor::cli
