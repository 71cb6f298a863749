#pragma once

// Schur Q-functions as sums of peak functions, and exact expansion of
// peak-algebra elements in the Schur Q basis.

#include "peakfn/arith.hpp"
#include "peakfn/qsym.hpp"
#include "peakfn/tableau.hpp"

#include <map>
#include <variant>

namespace peakfn {

/// Display order for strict partitions: shorter first, then reverse
/// lexicographic, e.g. (9), (8,1), ..., (5,4), (6,2,1), ..., (4,3,2).
struct StrictPartitionOrder {
  bool operator()(const StrictPartition& a, const StrictPartition& b) const;
};

class SchurQExpansion {
 public:
  using Terms = std::map<StrictPartition, Rational, StrictPartitionOrder>;

  explicit SchurQExpansion(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const StrictPartition& l) const;
  void add(const StrictPartition& l, const Rational& c);

  bool operator==(const SchurQExpansion&) const = default;

 private:
  int degree_;
  Terms terms_;
};

/// The expansion could not be solved: `witness` is the first peak set (in
/// canonical order) whose equation fails, with the value the input demands
/// and the value the best Schur Q combination produces.
struct NotInSpan {
  int degree = 0;
  IndexSet witness;
  Rational expected;
  Rational achieved;
};

using ExpandResult = std::variant<SchurQExpansion, NotInSpan>;

/// Sum of K_{Peak(T)} over standard shifted tableaux T of shape l.
QsymExpr schur_q(const StrictPartition& l);

ExpandResult expand_in_schurq(const QsymExpr& e);

bool is_schurq_positive(const SchurQExpansion& x);

/// 2^{length}: Q_l = 2^{length} P_l.
Integer q_over_p_scalar(const StrictPartition& l);

/// Coefficients in the Schur P basis.
SchurQExpansion to_p_coefficients(const SchurQExpansion& x);

/// Back to K: sum of c_l * Q_l. Rejects non-integral coefficients.
QsymExpr schurq_to_k(const SchurQExpansion& x);

}  // namespace peakfn
