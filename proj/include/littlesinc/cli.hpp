#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsf::cli {

// Run the command-line front end on the given arguments (program name NOT
// included). Writes table data to --out (default: `out`), diagnostics to
// `err`. Returns 0 on success, 1 on domain/convergence/singularity errors,
// 2 on usage errors. In-process callable so tests can drive it directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lsf::cli
