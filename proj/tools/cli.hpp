#pragma once

#include <iosfwd>

namespace ginibre::cli {

/// Runs one `ginibre-lab` invocation. Returns 0 on success, 2 on usage or
/// argument errors (usage message on `err`), 1 on runtime errors (JSON
/// message on `err`).
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ginibre::cli
