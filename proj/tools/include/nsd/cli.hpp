#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsd::cli {

/// Runs the nsd workbench on `args` (program name excluded). The report goes
/// to `out`, diagnostics to `err`. Returns the process exit code: 0 on
/// success, 2 for parse errors, 3 for validation errors, 4 for unsupported
/// inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsd::cli
