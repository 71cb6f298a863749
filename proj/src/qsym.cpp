#include "peakfn/qsym.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace peakfn {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::from_set(const IndexSet& s) {
  std::vector<int> parts;
  int prev = 0;
  for (int e : s.elements()) {
    parts.push_back(e - prev);
    prev = e;
  }
  if (s.degree() > 0) parts.push_back(s.degree() - prev);
  return Composition(std::move(parts));
}

int Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

IndexSet comp_set(const Composition& c) {
  std::vector<int> s;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < c.parts().size(); ++i) s.push_back(sum += c.parts()[i]);
  return IndexSet(std::move(s), c.weight());
}

namespace {

std::uint64_t set_mask_of_parts(const std::vector<int>& parts) {
  std::uint64_t m = 0;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) m |= std::uint64_t{1} << (sum += parts[i]);
  return m;
}

std::vector<int> parts_of_mask(std::uint64_t mask, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i < n; ++i)
    if (mask >> i & 1u) {
      parts.push_back(i - prev);
      prev = i;
    }
  if (n > 0) parts.push_back(n - prev);
  return parts;
}

std::uint64_t full_mask(int n) { return n <= 1 ? 0 : ((std::uint64_t{1} << n) - 2); }

}  // namespace

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition()};
  for (std::uint64_t d = 0; d <= full_mask(n); d += 2) out.emplace_back(parts_of_mask(d, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndexSet> peak_sets(int n) {
  std::vector<IndexSet> out;
  for (std::uint64_t d = 0; d <= full_mask(n); d += 2)
    if (peak_mask_of(d) == d) out.push_back(IndexSet::from_mask(d, std::max(n, 0)));
  const IndexOrder order{Basis::K};
  std::sort(out.begin(), out.end(),
            [&](const IndexSet& a, const IndexSet& b) { return order(a.elements(), b.elements()); });
  return out;
}

char basis_letter(Basis b) {
  switch (b) {
    case Basis::M: return 'M';
    case Basis::F: return 'F';
    case Basis::K: return 'K';
  }
  return '?';
}

Basis parse_basis(const std::string& s) {
  if (s == "M") return Basis::M;
  if (s == "F") return Basis::F;
  if (s == "K") return Basis::K;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

bool IndexOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  if (basis == Basis::K && a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

QsymExpr::QsymExpr(Basis basis, int degree)
    : basis_(basis), degree_(degree), terms_(IndexOrder{basis}) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

QsymExpr QsymExpr::one(Basis basis) {
  QsymExpr e(basis, 0);
  e.add({}, 1);
  return e;
}

QsymExpr QsymExpr::monomial(const Composition& c, const Integer& coeff) {
  QsymExpr e(Basis::M, c.weight());
  e.add(c.parts(), coeff);
  return e;
}

QsymExpr QsymExpr::fundamental(const Composition& c, const Integer& coeff) {
  QsymExpr e(Basis::F, c.weight());
  e.add(c.parts(), coeff);
  return e;
}

QsymExpr QsymExpr::peak(const IndexSet& s, const Integer& coeff) {
  QsymExpr e(Basis::K, s.degree());
  e.add(s.elements(), coeff);
  return e;
}

Integer QsymExpr::coeff(const std::vector<int>& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Integer(0) : it->second;
}

void QsymExpr::add(const std::vector<int>& index, const Integer& c) {
  if (basis_ == Basis::K) {
    for (int e : index)
      if (e < 1 || e > degree_ - 1) throw std::invalid_argument("peak index outside [n-1]");
    if (!std::is_sorted(index.begin(), index.end()) || !is_peak_set(index))
      throw std::invalid_argument("K index is not a peak set");
  } else {
    int sum = 0;
    for (int p : index) {
      if (p < 1) throw std::invalid_argument("composition parts must be positive");
      sum += p;
    }
    if (sum != degree_) throw std::invalid_argument("composition weight differs from degree");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QsymExpr::check_compatible(const QsymExpr& other) const {
  if (basis_ != other.basis_) throw std::invalid_argument("basis mismatch");
  if (degree_ != other.degree_ && !is_zero() && !other.is_zero())
    throw std::invalid_argument("degree mismatch");
}

QsymExpr& QsymExpr::operator+=(const QsymExpr& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

QsymExpr& QsymExpr::operator-=(const QsymExpr& other) {
  check_compatible(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [idx, c] : other.terms_) add(idx, -c);
  return *this;
}

QsymExpr& QsymExpr::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

bool QsymExpr::operator==(const QsymExpr& other) const {
  if (basis_ != other.basis_) return false;
  if (is_zero() && other.is_zero()) return true;
  return degree_ == other.degree_ && terms_ == other.terms_;
}

QsymExpr k_to_f(const QsymExpr& e) {
  if (e.basis() != Basis::K) throw std::invalid_argument("k_to_f expects a K-expression");
  const int n = e.degree();
  QsymExpr out(Basis::F, n);
  for (const auto& [idx, c] : e.terms()) {
    if (n == 0) {
      // K_{empty,0} = 1.
      out.add({}, c);
      continue;
    }
    std::uint64_t s = 0;
    for (int x : idx) s |= std::uint64_t{1} << x;
    const Integer scale = pow2(static_cast<unsigned>(idx.size()) + 1) * c;
    for (std::uint64_t d = 0; d <= full_mask(n); d += 2) {
      const std::uint64_t sym = d ^ (d << 1);
      if ((s & ~sym) == 0) out.add(parts_of_mask(d, n), scale);
    }
  }
  return out;
}

QsymExpr f_to_m(const QsymExpr& e) {
  if (e.basis() != Basis::F) throw std::invalid_argument("f_to_m expects an F-expression");
  const int n = e.degree();
  QsymExpr out(Basis::M, n);
  const std::uint64_t full = full_mask(n);
  for (const auto& [idx, c] : e.terms()) {
    const std::uint64_t base = set_mask_of_parts(idx);
    // Refinements are exactly the supersets of set(alpha).
    const std::uint64_t free = full & ~base;
    for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
      out.add(parts_of_mask(base | sub, n), c);
      if (sub == 0) break;
    }
  }
  return out;
}

QsymExpr to_m(const QsymExpr& e) {
  switch (e.basis()) {
    case Basis::M: return e;
    case Basis::F: return f_to_m(e);
    case Basis::K: return f_to_m(k_to_f(e));
  }
  return e;
}

bool is_symmetric(const QsymExpr& e) {
  const QsymExpr m = to_m(e);
  for (const auto& [idx, c] : m.terms()) {
    std::vector<int> parts(idx);
    std::sort(parts.begin(), parts.end());
    do {
      if (m.coeff(parts) != c) return false;
    } while (std::next_permutation(parts.begin(), parts.end()));
  }
  return true;
}

QsymExpr reverse_m(const QsymExpr& e) {
  if (e.basis() != Basis::M) throw std::invalid_argument("reverse_m expects an M-expression");
  QsymExpr out(Basis::M, e.degree());
  for (const auto& [idx, c] : e.terms()) out.add(std::vector<int>(idx.rbegin(), idx.rend()), c);
  return out;
}

Permutation representative_perm(const IndexSet& s) {
  if (!s.is_peak_set()) throw std::invalid_argument("not a peak set");
  Permutation id = Permutation::identity(s.degree());
  std::vector<int> w(id.word());
  for (int x : s.elements()) std::swap(w[static_cast<std::size_t>(x - 1)], w[static_cast<std::size_t>(x)]);
  return Permutation(std::move(w));
}

QsymExpr shuffle_peak_product(const Permutation& p, const Permutation& q) {
  QsymExpr out(Basis::K, p.size() + q.size());
  for (const auto& r : shuffle_perms(p, q)) out.add(peak_set(r).elements(), 1);
  return out;
}

QsymExpr peak_product(const QsymExpr& a, const QsymExpr& b) {
  if (a.basis() != Basis::K || b.basis() != Basis::K)
    throw std::invalid_argument("peak_product expects K-expressions");
  QsymExpr out(Basis::K, a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms()) {
    const Permutation pa = representative_perm(IndexSet(ia, a.degree()));
    for (const auto& [ib, cb] : b.terms()) {
      const Permutation pb = representative_perm(IndexSet(ib, b.degree()));
      out += shuffle_peak_product(pa, pb) * (ca * cb);
    }
  }
  return out;
}

namespace {

using CompCounts = std::map<std::vector<int>, Integer>;

void quasi_shuffle(const std::vector<int>& a, std::size_t i, const std::vector<int>& b,
                   std::size_t j, std::vector<int>& prefix, CompCounts& out) {
  if (i == a.size() && j == b.size()) {
    ++out[prefix];
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    quasi_shuffle(a, i + 1, b, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    quasi_shuffle(a, i, b, j + 1, prefix, out);
    prefix.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    prefix.push_back(a[i] + b[j]);
    quasi_shuffle(a, i + 1, b, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

QsymExpr quasi_shuffle_product(const QsymExpr& a, const QsymExpr& b) {
  if (a.basis() != Basis::M || b.basis() != Basis::M)
    throw std::invalid_argument("quasi_shuffle_product expects M-expressions");
  QsymExpr out(Basis::M, a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      CompCounts counts;
      std::vector<int> prefix;
      quasi_shuffle(ia, 0, ib, 0, prefix, counts);
      for (const auto& [comp, mult] : counts) out.add(comp, mult * ca * cb);
    }
  return out;
}

Polynomial specialize(const QsymExpr& e, int variables) {
  if (variables < 1) throw std::invalid_argument("need at least one variable");
  const QsymExpr m = to_m(e);
  Polynomial out;
  const auto mv = static_cast<std::size_t>(variables);
  for (const auto& [idx, c] : m.terms()) {
    const std::size_t k = idx.size();
    if (k > mv) continue;
    // Increasing index choices i_1 < ... < i_k, via a selection mask.
    std::vector<bool> pick(mv, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<int> exps(mv, 0);
      std::size_t part = 0;
      for (std::size_t v = 0; v < mv; ++v)
        if (pick[v]) exps[v] = idx[part++];
      out[exps] += c;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool is_invariant_under_variable_permutations(const Polynomial& p, int variables) {
  std::vector<int> sigma(static_cast<std::size_t>(variables));
  std::iota(sigma.begin(), sigma.end(), 0);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    Polynomial image;
    for (const auto& [exps, c] : p) {
      std::vector<int> moved(exps.size());
      for (std::size_t v = 0; v < exps.size(); ++v) moved[static_cast<std::size_t>(sigma[v])] = exps[v];
      image[moved] = c;
    }
    if (image != p) return false;
  }
  return true;
}

}  // namespace peakfn
