#include "peakfn/permutation.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>

namespace peakfn {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    inv[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

IndexSet::IndexSet(std::vector<int> elements, int degree)
    : elements_(std::move(elements)), degree_(degree) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (int e : elements_)
    if (e < 1 || e > degree_ - 1)
      throw std::invalid_argument("index " + std::to_string(e) + " outside [1, " +
                                  std::to_string(degree_ - 1) + "]");
}

IndexSet IndexSet::from_mask(std::uint64_t mask, int degree) {
  std::vector<int> e;
  for (int i = 1; i < 64; ++i)
    if (mask >> i & 1u) e.push_back(i);
  return IndexSet(std::move(e), degree);
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

std::uint64_t IndexSet::mask() const {
  std::uint64_t m = 0;
  for (int e : elements_) m |= std::uint64_t{1} << e;
  return m;
}

bool is_peak_set(std::span<const int> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == 1) return false;
    if (i > 0 && elements[i - 1] + 1 == elements[i]) return false;
  }
  return true;
}

bool IndexSet::is_peak_set() const { return peakfn::is_peak_set(elements_); }

std::uint64_t peak_mask_of(std::uint64_t d) { return d & ~(d << 1) & ~std::uint64_t{2}; }

IndexSet peak_set_of(const IndexSet& s) {
  return IndexSet::from_mask(peak_mask_of(s.mask()), s.degree());
}

std::uint64_t descent_mask(std::span<const int> w) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m |= std::uint64_t{1} << (i + 1);
  return m;
}

std::uint64_t peak_mask(std::span<const int> w) { return peak_mask_of(descent_mask(w)); }

IndexSet descent_set(const Permutation& p) {
  return IndexSet::from_mask(descent_mask(p.entries()), p.size());
}

IndexSet peak_set(const Permutation& p) {
  return IndexSet::from_mask(peak_mask(p.entries()), p.size());
}

IndexSet valley_set(const Permutation& p) {
  std::vector<int> v;
  for (int i = 2; i <= p.size() - 1; ++i)
    if (p.at(i - 1) > p.at(i) && p.at(i) < p.at(i + 1)) v.push_back(i);
  return IndexSet(std::move(v), p.size());
}

Permutation apply_symmetry(const Permutation& p, Symmetry which) {
  const int n = p.size();
  std::vector<int> w(p.word());
  switch (which) {
    case Symmetry::reverse:
      std::reverse(w.begin(), w.end());
      break;
    case Symmetry::complement:
      for (int& x : w) x = n + 1 - x;
      break;
    case Symmetry::reverse_complement:
      std::reverse(w.begin(), w.end());
      for (int& x : w) x = n + 1 - x;
      break;
    case Symmetry::inverse:
      return p.inverse();
  }
  return Permutation(std::move(w));
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> st(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    st[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
  return Permutation(std::move(st));
}

namespace {

// For each pattern position j, the earlier positions holding the nearest
// smaller and nearest larger pattern values. A candidate value fitting
// strictly between the letters matched there is order-consistent with every
// earlier match.
struct PatternWindows {
  std::vector<int> below;
  std::vector<int> above;

  explicit PatternWindows(const Permutation& t) {
    const int k = t.size();
    below.assign(static_cast<std::size_t>(k), -1);
    above.assign(static_cast<std::size_t>(k), -1);
    for (int j = 0; j < k; ++j) {
      const int tj = t.at(j + 1);
      for (int l = 0; l < j; ++l) {
        const int tl = t.at(l + 1);
        if (tl < tj && (below[j] < 0 || tl > t.at(below[j] + 1))) below[j] = l;
        if (tl > tj && (above[j] < 0 || tl < t.at(above[j] + 1))) above[j] = l;
      }
    }
  }

  bool fits(int j, int value, const std::vector<int>& chosen) const {
    if (below[j] >= 0 && chosen[below[j]] >= value) return false;
    if (above[j] >= 0 && chosen[above[j]] <= value) return false;
    return true;
  }
};

bool search(std::span<const int> word, const PatternWindows& win, int k, int j,
            std::size_t start, std::size_t stop, std::vector<int>& chosen) {
  if (j == k) return true;
  for (std::size_t i = start; i + static_cast<std::size_t>(k - j) <= stop; ++i) {
    if (!win.fits(j, word[i], chosen)) continue;
    chosen[j] = word[i];
    if (search(word, win, k, j + 1, i + 1, stop, chosen)) return true;
  }
  return false;
}

}  // namespace

bool contains_pattern(std::span<const int> word, const Permutation& pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  const int k = pattern.size();
  if (static_cast<int>(word.size()) < k) return false;
  PatternWindows win(pattern);
  std::vector<int> chosen(static_cast<std::size_t>(k));
  return search(word, win, k, 0, 0, word.size(), chosen);
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  return contains_pattern(p.entries(), pattern);
}

namespace {

bool ends_at_last(std::span<const int> word, const PatternWindows& win, int k, int j,
                  std::size_t start, std::vector<int>& chosen) {
  const std::size_t m = word.size();
  if (j == k - 1) return win.fits(j, word[m - 1], chosen);
  for (std::size_t i = start; i + static_cast<std::size_t>(k - j) <= m; ++i) {
    if (!win.fits(j, word[i], chosen)) continue;
    chosen[j] = word[i];
    if (ends_at_last(word, win, k, j + 1, i + 1, chosen)) return true;
  }
  return false;
}

}  // namespace

bool contains_pattern_ending_at_last(std::span<const int> word, const Permutation& pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  const int k = pattern.size();
  if (word.size() < static_cast<std::size_t>(k)) return false;
  PatternWindows win(pattern);
  std::vector<int> chosen(static_cast<std::size_t>(k));
  return ends_at_last(word, win, k, 0, 0, chosen);
}

PatternSet::PatternSet(std::initializer_list<Permutation> patterns) {
  for (const auto& p : patterns) insert(p);
}

PatternSet::PatternSet(std::vector<Permutation> patterns) {
  for (auto& p : patterns) insert(std::move(p));
}

void PatternSet::insert(Permutation p) {
  if (p.empty()) throw std::invalid_argument("pattern sets may not contain the empty permutation");
  patterns_.insert(std::move(p));
}

PatternSet PatternSet::transformed(Symmetry which) const {
  PatternSet out;
  for (const auto& p : patterns_) out.insert(apply_symmetry(p, which));
  return out;
}

bool avoids(std::span<const int> word, const PatternSet& patterns) {
  for (const auto& t : patterns)
    if (contains_pattern(word, t)) return false;
  return true;
}

namespace {

// Prefix-extension DFS. A prefix containing a pattern can never be extended
// to an avoider, so each new letter only needs the occurrences that end at it.
class AvoiderWalk {
 public:
  AvoiderWalk(int n, const PatternSet& patterns) : n_(n) {
    for (const auto& t : patterns) {
      sizes_.push_back(t.size());
      windows_.emplace_back(t);
    }
    chosen_.assign(static_cast<std::size_t>(n) + 1, 0);
    word_.reserve(static_cast<std::size_t>(n));
    used_.assign(static_cast<std::size_t>(n) + 1, false);
  }

  void run(const std::function<void(std::span<const int>)>& visit, int first_lo, int first_hi) {
    if (n_ == 0) {
      visit(word_);
      return;
    }
    for (int v = first_lo; v <= first_hi; ++v) {
      if (!push(v)) continue;
      extend(visit);
      pop();
    }
  }

 private:
  bool push(int v) {
    word_.push_back(v);
    for (std::size_t p = 0; p < windows_.size(); ++p) {
      if (sizes_[p] <= static_cast<int>(word_.size()) &&
          ends_at_last(word_, windows_[p], sizes_[p], 0, 0, chosen_)) {
        word_.pop_back();
        return false;
      }
    }
    used_[static_cast<std::size_t>(v)] = true;
    return true;
  }

  void pop() {
    used_[static_cast<std::size_t>(word_.back())] = false;
    word_.pop_back();
  }

  void extend(const std::function<void(std::span<const int>)>& visit) {
    if (static_cast<int>(word_.size()) == n_) {
      visit(word_);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (!push(v)) continue;
      extend(visit);
      pop();
    }
  }

  int n_;
  std::vector<int> sizes_;
  std::vector<PatternWindows> windows_;
  std::vector<int> chosen_;
  std::vector<int> word_;
  std::vector<bool> used_;
};

template <typename Result, typename Collect>
std::vector<Result> split_by_first_letter(int n, const PatternSet& patterns, int jobs,
                                          Collect collect) {
  // One slot per first letter, merged in letter order so the output matches
  // the sequential run exactly.
  std::vector<Result> slots(static_cast<std::size_t>(n));
  auto worker = [&](int offset) {
    for (int v = 1 + offset; v <= n; v += jobs) {
      AvoiderWalk walk(n, patterns);
      Result& slot = slots[static_cast<std::size_t>(v - 1)];
      walk.run([&](std::span<const int> w) { collect(slot, w); }, v, v);
    }
  };
  std::vector<std::future<void>> running;
  for (int t = 0; t < jobs; ++t) running.push_back(std::async(std::launch::async, worker, t));
  for (auto& f : running) f.get();
  return slots;
}

}  // namespace

void for_each_avoider(int n, const PatternSet& patterns,
                      const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) throw std::invalid_argument("negative size");
  AvoiderWalk walk(n, patterns);
  walk.run(visit, 1, n);
}

std::vector<Permutation> enumerate_av(int n, const PatternSet& patterns, int jobs) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Permutation> out;
  if (jobs <= 1 || n < 2) {
    for_each_avoider(n, patterns,
                     [&](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); });
    return out;
  }
  auto slots = split_by_first_letter<std::vector<Permutation>>(
      n, patterns, jobs, [](std::vector<Permutation>& slot, std::span<const int> w) {
        slot.emplace_back(std::vector<int>(w.begin(), w.end()));
      });
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

std::map<std::uint64_t, std::uint64_t> peak_mask_histogram(int n, const PatternSet& patterns,
                                                           int jobs) {
  if (n < 0) throw std::invalid_argument("negative size");
  using Hist = std::map<std::uint64_t, std::uint64_t>;
  Hist hist;
  if (jobs <= 1 || n < 2) {
    for_each_avoider(n, patterns, [&](std::span<const int> w) { ++hist[peak_mask(w)]; });
    return hist;
  }
  auto slots = split_by_first_letter<Hist>(
      n, patterns, jobs, [](Hist& slot, std::span<const int> w) { ++slot[peak_mask(w)]; });
  for (const auto& s : slots)
    for (const auto& [m, c] : s) hist[m] += c;
  return hist;
}

std::set<Permutation> shuffle_perms(const Permutation& p, const Permutation& q) {
  const int m = p.size();
  const int k = q.size();
  std::set<Permutation> out;
  std::vector<int> buf;
  buf.reserve(static_cast<std::size_t>(m + k));
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == m && j == k) {
      out.insert(Permutation(buf));
      return;
    }
    if (i < m) {
      buf.push_back(p.at(i + 1));
      rec(i + 1, j);
      buf.pop_back();
    }
    if (j < k) {
      buf.push_back(q.at(j + 1) + m);
      rec(i, j + 1);
      buf.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

PatternSet shuffle_pattern_sets(const PatternSet& a, const PatternSet& b) {
  PatternSet out;
  for (const auto& p : a)
    for (const auto& q : b)
      for (const auto& r : shuffle_perms(p, q)) out.insert(r);
  return out;
}

bool peak_equivalent(const PatternSet& a, const PatternSet& b, int n) {
  return peak_mask_histogram(n, a) == peak_mask_histogram(n, b);
}

std::vector<PatternSet> all_subsets_of_sk(int k) {
  const auto all = enumerate_av(k, {});
  const std::size_t m = all.size();
  if (m >= 63) throw std::invalid_argument("too many permutations to take all subsets");
  std::vector<PatternSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    PatternSet s;
    for (std::size_t i = 0; i < m; ++i)
      if (bits >> i & 1u) s.insert(all[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace peakfn
