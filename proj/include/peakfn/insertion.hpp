#pragma once

// RSK row insertion, Sagan-Worley shifted insertion, and the map
// phi(p) = R(rw(Q(p))) from permutations to standard shifted tableaux.

#include "peakfn/permutation.hpp"
#include "peakfn/tableau.hpp"

#include <set>
#include <string>
#include <vector>

namespace peakfn {

/// One step of an insertion. Coordinates are 1-based (row from the bottom,
/// absolute column from the left, so shifted rows include their indent).
struct BumpEvent {
  enum class Kind { row_bump, col_bump, place };
  Kind kind;
  int bumped = 0;    // entry displaced (unused for place)
  int inserted = 0;  // entry written into the cell
  int row = 0;
  int col = 0;

  bool operator==(const BumpEvent&) const = default;
};

/// "row-bump y←x @(r,c)", "col-bump z←y @(r,c)" or "place x @(r,c)".
std::string format_event(const BumpEvent& e);

using Trace = std::vector<BumpEvent>;

struct RskResult {
  YoungTableau insertion;  // P
  YoungTableau recording;  // Q
};

struct SwResult {
  ShiftedTableau insertion;        // R
  MarkedShiftedTableau recording;  // S
};

RskResult rsk(const Permutation& p, Trace* trace = nullptr);

/// Inverse of rsk on a pair of standard tableaux of equal shape.
Permutation rsk_inverse(const YoungTableau& insertion, const YoungTableau& recording);

SwResult sagan_worley(const Permutation& p, Trace* trace = nullptr);

ShiftedTableau phi(const Permutation& p);

/// {p in Av_n(321) : phi(p) = t} for a shifted tableau with at most two rows,
/// built as every RSK preimage whose recording tableau is S or S'.
std::set<Permutation> phi_preimage(const ShiftedTableau& t);

}  // namespace peakfn
