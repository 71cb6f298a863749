#include "peakfn/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace peakfn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw std::invalid_argument("strict partition parts must be strictly decreasing");
  }
}

int StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<StrictPartition> strict_partitions(int n) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p - 1);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

namespace {

int count_cells(const Rows& rows) {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

bool entries_are_one_to_n(const Rows& rows) {
  const int n = count_cells(rows);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& r : rows)
    for (int v : r) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  return true;
}

// `indent` is 0 for Young diagrams and 1 for shifted ones: row r starts at
// absolute column indent*r.
bool is_standard(const Rows& rows, int indent) {
  if (!entries_are_one_to_n(rows)) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (!std::is_sorted(rows[r].begin(), rows[r].end())) return false;
    if (r == 0) continue;
    const auto& below = rows[r - 1];
    for (std::size_t j = 0; j < rows[r].size(); ++j) {
      // Same absolute column in the row below.
      const std::size_t jb = j + static_cast<std::size_t>(indent);
      if (jb >= below.size() || below[jb] >= rows[r][j]) return false;
    }
  }
  return true;
}

int find_row(const Rows& rows, int v) {
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (std::find(rows[r].begin(), rows[r].end(), v) != rows[r].end()) return static_cast<int>(r);
  throw std::out_of_range("value not in tableau");
}

std::vector<int> row_lengths(const Rows& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
  return out;
}

// Place 1..n one at a time into addable cells, trying rows bottom to top.
void fill(const std::vector<int>& shape, int indent, std::vector<Rows>& out) {
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  Rows cur(shape.size());
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
      const int len = static_cast<int>(cur[r].size());
      if (len >= shape[r]) continue;
      if (r > 0 && static_cast<int>(cur[r - 1].size()) < len + indent + 1) continue;
      cur[r].push_back(v);
      rec(v + 1);
      cur[r].pop_back();
    }
  };
  rec(1);
}

IndexSet descents_of(const Rows& rows) {
  const int n = count_cells(rows);
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int v : rows[r]) pos[static_cast<std::size_t>(v)] = static_cast<int>(r);
  std::vector<int> d;
  for (int i = 1; i < n; ++i)
    if (pos[static_cast<std::size_t>(i + 1)] > pos[static_cast<std::size_t>(i)]) d.push_back(i);
  return IndexSet(std::move(d), n);
}

}  // namespace

bool is_standard_young(const Rows& rows) { return is_standard(rows, 0); }
bool is_standard_shifted(const Rows& rows) {
  if (!is_standard(rows, 1)) return false;
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].size() >= rows[r - 1].size()) return false;
  return true;
}

YoungTableau::YoungTableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_standard_young(rows_)) throw std::invalid_argument("not a standard Young tableau");
}

Partition YoungTableau::shape() const { return Partition(row_lengths(rows_)); }
int YoungTableau::size() const { return count_cells(rows_); }
int YoungTableau::row_of(int v) const { return find_row(rows_, v); }

ShiftedTableau::ShiftedTableau(Rows rows) : rows_(std::move(rows)) {
  if (!is_standard_shifted(rows_)) throw std::invalid_argument("not a standard shifted tableau");
}

StrictPartition ShiftedTableau::shape() const { return StrictPartition(row_lengths(rows_)); }
int ShiftedTableau::size() const { return count_cells(rows_); }
int ShiftedTableau::row_of(int v) const { return find_row(rows_, v); }

MarkedShiftedTableau::MarkedShiftedTableau(ShiftedTableau base, std::set<int> marks)
    : base_(std::move(base)), marks_(std::move(marks)) {
  for (const auto& row : base_.rows())
    if (marks_.count(row.front()))
      throw std::invalid_argument("main-diagonal entry " + std::to_string(row.front()) +
                                  " cannot be marked");
  for (int m : marks_)
    if (m < 1 || m > base_.size()) throw std::invalid_argument("mark outside tableau");
}

std::vector<YoungTableau> enumerate_syt(const Partition& shape) {
  std::vector<Rows> raw;
  fill(shape.parts(), 0, raw);
  std::vector<YoungTableau> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<ShiftedTableau> enumerate_ssht(const StrictPartition& shape) {
  std::vector<Rows> raw;
  fill(shape.parts(), 1, raw);
  std::vector<ShiftedTableau> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

IndexSet tableau_descents(const YoungTableau& t) { return descents_of(t.rows()); }
IndexSet tableau_descents(const ShiftedTableau& t) { return descents_of(t.rows()); }
IndexSet tableau_peaks(const YoungTableau& t) { return peak_set_of(tableau_descents(t)); }
IndexSet tableau_peaks(const ShiftedTableau& t) { return peak_set_of(tableau_descents(t)); }

Integer count_two_row_syt(int a, int b) {
  if (b < 0 || a < b) throw std::invalid_argument("two-row shape (a,b) needs a >= b >= 0");
  return binomial(a + b, b) - binomial(a + b, b - 1);
}

Integer count_two_row_ssht(int n, int k) {
  if (k < 0 || n < 0) throw std::invalid_argument("negative size");
  if (k > 0 && n - k <= k)
    throw std::invalid_argument("(" + std::to_string(n - k) + "," + std::to_string(k) +
                                ") is not a strict partition");
  if (n == 0) return 1;
  return binomial(n - 1, k) - binomial(n - 1, k - 1);
}

Permutation reading_word(const YoungTableau& t) {
  std::vector<int> w;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
    w.insert(w.end(), it->begin(), it->end());
  return Permutation(std::move(w));
}

namespace {

void require_two_rows(const ShiftedTableau& t) {
  if (t.height() > 2) throw std::invalid_argument("tableau has more than two rows");
}

}  // namespace

SPair build_s_sprime(const ShiftedTableau& t) {
  require_two_rows(t);
  const int n = t.size();
  std::vector<int> bottom = t.rows().empty() ? std::vector<int>{} : t.rows()[0];
  std::vector<int> top = t.height() > 1 ? t.rows()[1] : std::vector<int>{};
  const int k = static_cast<int>(top.size());

  Rows s_rows{bottom};
  if (k > 0) s_rows.push_back(top);
  SPair out{YoungTableau(s_rows), std::nullopt, 0};
  if (n <= 2 * k + 1) return out;

  // 0-based: the largest bottom[j+2] with bottom[j+2] > top[j].
  int s = 0;
  for (int j = 0; j < k && j + 2 < static_cast<int>(bottom.size()); ++j)
    if (bottom[j + 2] > top[j]) s = std::max(s, bottom[j + 2]);
  if (s == 0) s = 2;

  bottom.erase(std::find(bottom.begin(), bottom.end(), s));
  top.insert(std::upper_bound(top.begin(), top.end(), s), s);
  out.s_prime = YoungTableau(Rows{bottom, top});
  out.shifted_entry = s;
  return out;
}

AbcLabels label_abc(const ShiftedTableau& t) {
  require_two_rows(t);
  AbcLabels out;
  const std::vector<int> bottom = t.rows().empty() ? std::vector<int>{} : t.rows()[0];
  if (t.height() > 1) out.a = t.rows()[1];
  const std::size_t k = out.a.size();
  out.b.assign(k, 0);
  int bound = t.size() + 1;
  for (std::size_t i = k; i-- > 0;) {
    bound = std::min(bound, out.a[i]);
    auto it = std::lower_bound(bottom.begin(), bottom.end(), bound);
    // Guaranteed to exist for a standard shifted filling.
    assert(it != bottom.begin());
    if (it == bottom.begin()) throw std::logic_error("label_abc: no entry available for b");
    out.b[i] = *std::prev(it);
    bound = out.b[i];
  }
  for (int v : bottom)
    if (std::find(out.b.begin(), out.b.end(), v) == out.b.end()) out.c.push_back(v);
  return out;
}

std::vector<Permutation> labeled_permutations(const ShiftedTableau& t) {
  const AbcLabels lab = label_abc(t);
  std::vector<Permutation> out;
  for (std::size_t j = 1; j <= lab.c.size(); ++j) {
    std::vector<int> left(lab.a);
    left.insert(left.end(), lab.c.begin(), lab.c.begin() + static_cast<long>(j));
    std::vector<int> right(lab.b);
    right.insert(right.end(), lab.c.begin() + static_cast<long>(j), lab.c.end());
    std::sort(left.rbegin(), left.rend());
    std::sort(right.begin(), right.end());
    left.insert(left.end(), right.begin(), right.end());
    out.emplace_back(std::move(left));
  }
  return out;
}

std::vector<MarkedShiftedTableau> all_markings(const ShiftedTableau& t) {
  std::vector<int> off;
  for (const auto& row : t.rows()) off.insert(off.end(), row.begin() + 1, row.end());
  std::vector<MarkedShiftedTableau> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    std::set<int> marks;
    for (std::size_t i = 0; i < off.size(); ++i)
      if (bits >> i & 1u) marks.insert(off[i]);
    out.emplace_back(t, std::move(marks));
  }
  return out;
}

}  // namespace peakfn
