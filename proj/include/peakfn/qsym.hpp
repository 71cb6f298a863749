#pragma once

// Homogeneous quasisymmetric functions in the monomial (M), fundamental (F)
// and peak (K) bases, with exact integer coefficients.

#include "peakfn/arith.hpp"
#include "peakfn/permutation.hpp"

#include <map>
#include <string>
#include <vector>

namespace peakfn {

/// Positive parts; the empty composition has weight 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// The composition beta of n with set(beta) = s.
  static Composition from_set(const IndexSet& s);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  Composition reversed() const;

  auto operator<=>(const Composition&) const = default;
  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Partial sums excluding the total.
IndexSet comp_set(const Composition& c);

/// Every composition of n, lexicographic.
std::vector<Composition> compositions(int n);

/// Every peak set inside [n-1], by size then lexicographic.
std::vector<IndexSet> peak_sets(int n);

enum class Basis { M, F, K };

char basis_letter(Basis b);
Basis parse_basis(const std::string& s);

/// Index order: lexicographic for compositions, size-then-lexicographic for
/// peak sets.
struct IndexOrder {
  Basis basis = Basis::M;
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// A homogeneous linear combination over one basis. Indices are stored as
/// raw integer vectors: composition parts for M/F, peak-set elements for K.
class QsymExpr {
 public:
  using Terms = std::map<std::vector<int>, Integer, IndexOrder>;

  QsymExpr(Basis basis, int degree);

  /// The constant 1, in degree 0.
  static QsymExpr one(Basis basis);
  static QsymExpr monomial(const Composition& c, const Integer& coeff = 1);
  static QsymExpr fundamental(const Composition& c, const Integer& coeff = 1);
  static QsymExpr peak(const IndexSet& s, const Integer& coeff = 1);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of an index (0 when absent).
  Integer coeff(const std::vector<int>& index) const;

  /// Adds c to the coefficient of index, validating the index.
  void add(const std::vector<int>& index, const Integer& c);

  QsymExpr& operator+=(const QsymExpr& other);
  QsymExpr& operator-=(const QsymExpr& other);
  QsymExpr& operator*=(const Integer& c);
  friend QsymExpr operator+(QsymExpr a, const QsymExpr& b) { return a += b; }
  friend QsymExpr operator-(QsymExpr a, const QsymExpr& b) { return a -= b; }
  friend QsymExpr operator*(QsymExpr a, const Integer& c) { return a *= c; }

  bool operator==(const QsymExpr& other) const;

 private:
  void check_compatible(const QsymExpr& other) const;

  Basis basis_;
  int degree_;
  Terms terms_;
};

QsymExpr k_to_f(const QsymExpr& e);
QsymExpr f_to_m(const QsymExpr& e);
/// Converts any basis to M.
QsymExpr to_m(const QsymExpr& e);

/// True iff the M-coefficients are constant on rearrangement classes.
bool is_symmetric(const QsymExpr& e);

QsymExpr reverse_m(const QsymExpr& e);

/// Canonical permutation with peak set s: the identity with positions s, s+1
/// swapped for every s in s. Rejects non-peak sets.
Permutation representative_perm(const IndexSet& s);

/// Sum of K_{Peak(rho)} over rho in p shuffle q.
QsymExpr shuffle_peak_product(const Permutation& p, const Permutation& q);

/// Product of K-expressions via the shuffle rule on representative permutations.
QsymExpr peak_product(const QsymExpr& a, const QsymExpr& b);

/// Overlapping-shuffle product of M-expressions.
QsymExpr quasi_shuffle_product(const QsymExpr& a, const QsymExpr& b);

/// Polynomial in finitely many variables: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Integer>;

/// Evaluates at x_1..x_m (x_{m+1} = ... = 0).
Polynomial specialize(const QsymExpr& e, int variables);

/// True iff the polynomial is unchanged by every permutation of its variables.
bool is_invariant_under_variable_permutations(const Polynomial& p, int variables);

}  // namespace peakfn
