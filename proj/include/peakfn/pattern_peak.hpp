#pragma once

// Pattern-avoiding peak functions R_n(P) = sum of K_{Peak(p)} over Av_n(P),
// the closed forms they satisfy, and search tooling around them.

#include "peakfn/permutation.hpp"
#include "peakfn/qsym.hpp"
#include "peakfn/schurq.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace peakfn {

/// Peak-set histogram of Av_n(P): peak mask -> number of avoiders.
using PeakHistogram = std::map<std::uint64_t, std::uint64_t>;

/// Produces the histogram for (P, n). The default enumerates Av_n(P); the
/// CLI substitutes an on-disk cache.
using HistogramSource = std::function<PeakHistogram(const PatternSet&, int)>;

HistogramSource enumerating_source(int jobs = 1);

/// Converts a histogram into a K-expression, one term per distinct peak set.
QsymExpr histogram_to_k(const PeakHistogram& h, int n);

QsymExpr r_n(const PatternSet& patterns, int n, int jobs = 1);
QsymExpr r_n(const HistogramSource& source, const PatternSet& patterns, int n);

/// Sum of F_{Des(p)} over Av_n(P).
QsymExpr pattern_fundamental(const PatternSet& patterns, int n);

/// Which closed form: a row of the classification table (1-8) or the
/// {132,312,delta_j} family.
struct ClosedFormId {
  enum class Kind { table_row, include_delta };
  Kind kind = Kind::table_row;
  int value = 1;  // row number, or j

  static ClosedFormId row(int r);
  static ClosedFormId include_delta(int j);
  /// "row3", "3", "r321", "r132_312", "shuffle_case", "includedelta(4)".
  static ClosedFormId parse(const std::string& text);
  std::string name() const;

  bool operator==(const ClosedFormId&) const = default;
};

struct TableRow {
  int row;
  std::vector<PatternSet> pattern_sets;
  std::string formula;  // LaTeX
};

/// The eight rows, each with every pattern set it lists.
const std::vector<TableRow>& table1();

/// Rejects n < 3.
SchurQExpansion closed_form(const ClosedFormId& id, int n);

/// R_n(P2) + sum_{k<n} R_k(P) [K_{empty,1} R_{n-k-1}(P2) - R_{n-k}(P2)].
QsymExpr shuffle_formula_rhs(const PatternSet& p, const PatternSet& p2, int n);

/// Sum over strict (n-k,k) of min(n-2k, j-1-k) Q_{(n-k,k)}, positive terms only.
SchurQExpansion include_delta_formula(int j, int n);

/// The printed form: sum_{k=0}^{j-2} (j-1-k) Q_{(n-k,k)} over strict shapes.
SchurQExpansion include_delta_printed(int j, int n);

/// {132, 312, delta_j}.
PatternSet include_delta_patterns(int j);

struct ConjectureReport {
  int k = 0;
  int n = 0;
  bool symmetric = false;
  bool q_positive = false;
  ExpandResult expansion;
  double elapsed_ms = 0;
};

/// Evaluates R_n({iota_k}): symmetry, expansion, positivity.
ConjectureReport conjecture_check(int k, int n, const HistogramSource& source = enumerating_source());

/// Smallest n in 1..n_max with R_n(P) not symmetric.
std::optional<int> find_nonsymmetric_witness(const PatternSet& patterns, int n_max,
                                             const HistogramSource& source = enumerating_source());

}  // namespace peakfn
