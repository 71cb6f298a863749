#pragma once

// Permutations in one-line notation, their descent/peak/valley statistics,
// classical pattern containment and avoidance-class enumeration.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace peakfn {

class Permutation {
 public:
  Permutation() = default;

  /// Takes ownership of a one-line word; throws std::invalid_argument unless
  /// the entries are a rearrangement of 1..n.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);    // iota_n
  static Permutation decreasing(int n);  // delta_n

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// 1-based access, matching the usual pi_i notation.
  int at(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& word() const { return entries_; }

  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// A strictly increasing subset of [n-1] together with its ambient degree n.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::vector<int> elements, int degree);

  static IndexSet from_mask(std::uint64_t mask, int degree);

  const std::vector<int>& elements() const { return elements_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  bool contains(int i) const;

  /// Bit i set iff i is an element.
  std::uint64_t mask() const;

  /// 1 is absent and no two consecutive integers are both present.
  bool is_peak_set() const;

  auto operator<=>(const IndexSet&) const = default;
  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<int> elements_;
  int degree_ = 0;
};

/// Peak(S) = {s in S : s != 1, s-1 not in S}.
IndexSet peak_set_of(const IndexSet& s);
std::uint64_t peak_mask_of(std::uint64_t descent_mask);

bool is_peak_set(std::span<const int> elements);

IndexSet descent_set(const Permutation& p);
IndexSet peak_set(const Permutation& p);
IndexSet valley_set(const Permutation& p);

std::uint64_t descent_mask(std::span<const int> word);
std::uint64_t peak_mask(std::span<const int> word);

enum class Symmetry { reverse, complement, reverse_complement, inverse };

Permutation apply_symmetry(const Permutation& p, Symmetry which);

/// Replaces the smallest entry by 1, the next by 2, and so on.
Permutation standardize(std::span<const int> word);

/// True iff some subsequence of `word` (distinct values) standardizes to
/// `pattern`. Requires a nonempty pattern.
bool contains_pattern(std::span<const int> word, const Permutation& pattern);
bool contains_pattern(const Permutation& p, const Permutation& pattern);

/// Like contains_pattern but only reports occurrences whose last entry is
/// the last letter of `word`.
bool contains_pattern_ending_at_last(std::span<const int> word, const Permutation& pattern);

/// A finite set of nonempty patterns; duplicates collapse.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Permutation> patterns);
  explicit PatternSet(std::vector<Permutation> patterns);

  void insert(Permutation p);

  const std::set<Permutation>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  int size() const { return static_cast<int>(patterns_.size()); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

  PatternSet transformed(Symmetry which) const;

  bool operator==(const PatternSet&) const = default;
  auto operator<=>(const PatternSet&) const = default;

 private:
  std::set<Permutation> patterns_;
};

bool avoids(std::span<const int> word, const PatternSet& patterns);

/// Visits Av_n(P) in lexicographic order. The word passed to the visitor
/// is only valid for the duration of the call.
void for_each_avoider(int n, const PatternSet& patterns,
                      const std::function<void(std::span<const int>)>& visit);

/// Av_n(P) in lexicographic order; Av_0(P) = {empty}. `jobs` > 1 splits the
/// work by first letter and merges in order.
std::vector<Permutation> enumerate_av(int n, const PatternSet& patterns, int jobs = 1);

/// Histogram of peak masks over Av_n(P).
std::map<std::uint64_t, std::uint64_t> peak_mask_histogram(int n, const PatternSet& patterns,
                                                           int jobs = 1);

/// All interleavings of p with q shifted up by |p|.
std::set<Permutation> shuffle_perms(const Permutation& p, const Permutation& q);

/// Union of shuffle_perms over all pairs.
PatternSet shuffle_pattern_sets(const PatternSet& a, const PatternSet& b);

bool peak_equivalent(const PatternSet& a, const PatternSet& b, int n);

/// Every subset of S_k, in increasing bitmask order over lexicographic S_k.
std::vector<PatternSet> all_subsets_of_sk(int k);

}  // namespace peakfn
