#pragma once

// The peakfn command line. Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 expansion not in the Schur Q span.

#include <iosfwd>
#include <string>
#include <vector>

namespace peakfn {

enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2, exit_not_in_span = 3 };

/// `args` excludes the program name. PEAKFN_CACHE_DIR and PEAKFN_JOBS
/// supply defaults for --cache-dir and --jobs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peakfn
