#pragma once

// Young and shifted diagrams and their standard fillings. Rows are stored
// bottom-up (French convention): rows[0] is the longest, lowest row.

#include "peakfn/arith.hpp"
#include "peakfn/permutation.hpp"

#include <optional>
#include <set>
#include <vector>

namespace peakfn {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool is_strict() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing positive parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  Partition as_partition() const { return Partition(parts_); }

  auto operator<=>(const StrictPartition&) const = default;
  bool operator==(const StrictPartition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All strict partitions of n in reverse lexicographic order: (6), (5,1), (4,2), (3,2,1).
std::vector<StrictPartition> strict_partitions(int n);

/// Row-major filling, rows bottom-up. Used for both plain and shifted shapes;
/// in a shifted tableau row r (0-based) begins at absolute column r.
using Rows = std::vector<std::vector<int>>;

class YoungTableau {
 public:
  YoungTableau() = default;
  /// Throws std::invalid_argument unless rows form a standard Young tableau.
  explicit YoungTableau(Rows rows);

  const Rows& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  int height() const { return static_cast<int>(rows_.size()); }
  /// 0-based row containing value v.
  int row_of(int v) const;

  auto operator<=>(const YoungTableau&) const = default;
  bool operator==(const YoungTableau&) const = default;

 private:
  Rows rows_;
};

class ShiftedTableau {
 public:
  ShiftedTableau() = default;
  /// Throws std::invalid_argument unless rows form a standard shifted tableau.
  explicit ShiftedTableau(Rows rows);

  const Rows& rows() const { return rows_; }
  StrictPartition shape() const;
  int size() const;
  int height() const { return static_cast<int>(rows_.size()); }
  int row_of(int v) const;

  auto operator<=>(const ShiftedTableau&) const = default;
  bool operator==(const ShiftedTableau&) const = default;

 private:
  Rows rows_;
};

class MarkedShiftedTableau {
 public:
  MarkedShiftedTableau() = default;
  /// Rejects marks on main-diagonal entries.
  MarkedShiftedTableau(ShiftedTableau base, std::set<int> marks);

  const ShiftedTableau& base() const { return base_; }
  const std::set<int>& marks() const { return marks_; }
  bool is_marked(int v) const { return marks_.count(v) != 0; }

  auto operator<=>(const MarkedShiftedTableau&) const = default;
  bool operator==(const MarkedShiftedTableau&) const = default;

 private:
  ShiftedTableau base_;
  std::set<int> marks_;
};

/// True if rows form a standard filling of a (shifted) diagram.
bool is_standard_young(const Rows& rows);
bool is_standard_shifted(const Rows& rows);

std::vector<YoungTableau> enumerate_syt(const Partition& shape);
std::vector<ShiftedTableau> enumerate_ssht(const StrictPartition& shape);

/// {i : i+1 lies in a strictly higher row than i}.
IndexSet tableau_descents(const YoungTableau& t);
IndexSet tableau_descents(const ShiftedTableau& t);
IndexSet tableau_peaks(const YoungTableau& t);
IndexSet tableau_peaks(const ShiftedTableau& t);

/// |SYT(a,b)| = C(a+b,b) - C(a+b,b-1); rejects a < b.
Integer count_two_row_syt(int a, int b);

/// |SShT(n-k,k)| = C(n-1,k) - C(n-1,k-1); rejects non-strict shapes.
Integer count_two_row_ssht(int n, int k);

/// Rows left to right, top row first.
Permutation reading_word(const YoungTableau& t);

struct SPair {
  YoungTableau s;
  std::optional<YoungTableau> s_prime;
  /// The entry moved up to build S'; 0 when S' is absent.
  int shifted_entry = 0;
};

/// S is T with its second row slid one cell left; S' (present iff n > 2k+1)
/// moves the largest bottom entry S[1][j+2] exceeding S[2][j] into the top
/// row, or 2 when no such entry exists.
SPair build_s_sprime(const ShiftedTableau& t);

struct AbcLabels {
  std::vector<int> a;  // top row, ascending
  std::vector<int> b;  // b[i] sits below and left of a[i]
  std::vector<int> c;  // the rest, ascending
};

AbcLabels label_abc(const ShiftedTableau& t);

/// The n-2k V-shaped permutations whose decreasing arm holds every a_i and
/// c_1..c_j, for j = 1..n-2k.
std::vector<Permutation> labeled_permutations(const ShiftedTableau& t);

/// All marked tableaux over a fixed base (every subset of off-diagonal entries).
std::vector<MarkedShiftedTableau> all_markings(const ShiftedTableau& t);

}  // namespace peakfn
