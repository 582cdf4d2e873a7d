#pragma once

#include <ostream>

#include "json.hpp"

namespace milnor::cli {

/// Nested report; insertion order is kept so that output is stable.
using Report = nlohmann::ordered_json;

/// Text mode prints one `dotted.key: value` line per leaf, with arrays of
/// scalars inlined. Machine mode prints the whole map as JSON.
void emit(std::ostream& out, const Report& report, bool machine);

}  // namespace milnor::cli
