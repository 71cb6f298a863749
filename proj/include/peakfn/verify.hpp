#pragma once

// Verification suites behind `verify`: each check is one labelled
// comparison of a brute-force computation against a stated value.

#include "peakfn/pattern_peak.hpp"

#include <string>
#include <vector>

namespace peakfn {

struct CheckResult {
  std::string suite;
  std::string label;
  bool pass = false;
  std::string detail;  // both sides, on failure
};

/// Printed appendix values for R_n(iota_k), k in {4,5}, n = 1..9.
const std::vector<SchurQExpansion>& appendix_table(int k);

/// Every listed pattern set of every row, 3 <= n <= max_n.
std::vector<CheckResult> verify_table1(int max_n, const HistogramSource& source, int jobs = 1);
/// Both appendix tables for n <= min(max_n, 9).
std::vector<CheckResult> verify_appendix(int max_n, const HistogramSource& source, int jobs = 1);
/// Insertion peak characterizations, reversal, and counting identities.
std::vector<CheckResult> verify_identities(int max_n, const HistogramSource& source, int jobs = 1);
/// Shuffle formula and the shuffle-product sets.
std::vector<CheckResult> verify_shuffle(int max_n, const HistogramSource& source, int jobs = 1);

}  // namespace peakfn
