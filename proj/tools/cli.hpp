#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trace_census::cli {

/// Entry point behind the trace-census executable. `args` excludes the
/// program name. Returns 0 on success, 1 on runtime failure, 2 on usage
/// errors; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trace_census::cli
