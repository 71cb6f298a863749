#include "peakfn/schurq.hpp"

#include <mutex>
#include <stdexcept>

namespace peakfn {

bool StrictPartitionOrder::operator()(const StrictPartition& a, const StrictPartition& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.parts() > b.parts();
}

Rational SchurQExpansion::coeff(const StrictPartition& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SchurQExpansion::add(const StrictPartition& l, const Rational& c) {
  if (l.weight() != degree_) throw std::invalid_argument("partition weight differs from degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QsymExpr schur_q(const StrictPartition& l) {
  QsymExpr out(Basis::K, l.weight());
  for (const auto& t : enumerate_ssht(l)) out.add(tableau_peaks(t).elements(), 1);
  return out;
}

namespace {

// Peak-set multiplicities of Q_lambda for every strict lambda of n. Rows are
// strict partitions in reverse lexicographic order, columns follow peak_sets(n).
struct PeakSystem {
  std::vector<StrictPartition> partitions;
  std::vector<IndexSet> sets;
  std::vector<std::vector<Integer>> counts;  // counts[lambda][set]
};

const PeakSystem& peak_system(int n) {
  static std::mutex mu;
  static std::map<int, PeakSystem> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PeakSystem sys;
  sys.partitions = strict_partitions(n);
  sys.sets = peak_sets(n);
  for (const auto& l : sys.partitions) {
    const QsymExpr q = schur_q(l);
    std::vector<Integer> row;
    for (const auto& s : sys.sets) row.push_back(q.coeff(s.elements()));
    sys.counts.push_back(std::move(row));
  }
  return cache.emplace(n, std::move(sys)).first->second;
}

}  // namespace

ExpandResult expand_in_schurq(const QsymExpr& e) {
  if (e.basis() != Basis::K) throw std::invalid_argument("expand_in_schurq expects a K-expression");
  const int n = e.degree();
  const PeakSystem& sys = peak_system(n);
  const std::size_t unknowns = sys.partitions.size();
  const std::size_t equations = sys.sets.size();

  // Augmented system: one equation per peak set, one unknown per partition.
  std::vector<std::vector<Rational>> a(equations, std::vector<Rational>(unknowns + 1));
  for (std::size_t s = 0; s < equations; ++s) {
    for (std::size_t l = 0; l < unknowns; ++l) a[s][l] = Rational(sys.counts[l][s]);
    a[s][unknowns] = Rational(e.coeff(sys.sets[s].elements()));
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_row(unknowns);
  for (std::size_t col = 0; col < unknowns; ++col) {
    std::size_t pr = rank;
    while (pr < equations && a[pr][col] == 0) ++pr;
    if (pr == equations) continue;
    std::swap(a[pr], a[rank]);
    const Rational inv = 1 / a[rank][col];
    for (auto& v : a[rank]) v *= inv;
    for (std::size_t r = 0; r < equations; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) a[r][c] -= f * a[rank][c];
    }
    pivot_row[col] = rank++;
  }
  // The Schur Q-functions of a fixed degree are linearly independent.
  if (rank != unknowns) throw std::logic_error("Schur Q peak system is rank deficient");

  SchurQExpansion x(n);
  std::vector<Rational> sol(unknowns);
  for (std::size_t l = 0; l < unknowns; ++l) {
    sol[l] = a[pivot_row[l]][unknowns];
    x.add(sys.partitions[l], sol[l]);
  }

  for (std::size_t s = 0; s < equations; ++s) {
    Rational achieved = 0;
    for (std::size_t l = 0; l < unknowns; ++l) achieved += sol[l] * Rational(sys.counts[l][s]);
    const Rational expected(e.coeff(sys.sets[s].elements()));
    if (achieved != expected) return NotInSpan{n, sys.sets[s], expected, achieved};
  }
  return x;
}

bool is_schurq_positive(const SchurQExpansion& x) {
  for (const auto& [l, c] : x.terms())
    if (c < 0) return false;
  return true;
}

Integer q_over_p_scalar(const StrictPartition& l) { return pow2(static_cast<unsigned>(l.length())); }

SchurQExpansion to_p_coefficients(const SchurQExpansion& x) {
  SchurQExpansion out(x.degree());
  for (const auto& [l, c] : x.terms()) out.add(l, c * Rational(q_over_p_scalar(l)));
  return out;
}

QsymExpr schurq_to_k(const SchurQExpansion& x) {
  QsymExpr out(Basis::K, x.degree());
  for (const auto& [l, c] : x.terms()) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::invalid_argument("non-integral Schur Q coefficient");
    out += schur_q(l) * boost::multiprecision::numerator(c);
  }
  return out;
}

}  // namespace peakfn
