#include "peakfn/verify.hpp"

#include "peakfn/insertion.hpp"
#include "peakfn/text.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <thread>

namespace peakfn {

namespace {

// Runs tasks on up to `jobs` threads; results keep task order.
std::vector<CheckResult> run_tasks(const std::vector<std::function<CheckResult()>>& tasks, int jobs) {
  std::vector<CheckResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  if (threads == 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return out;
}

std::string expansion_text(const ExpandResult& r) {
  return std::visit([](const auto& v) { return format_text(v); }, r);
}

CheckResult compare(std::string suite, std::string label, const ExpandResult& got,
                    const SchurQExpansion& expected) {
  CheckResult c{std::move(suite), std::move(label), false, {}};
  const auto* x = std::get_if<SchurQExpansion>(&got);
  c.pass = x && *x == expected;
  if (!c.pass) c.detail = "expected " + format_text(expected) + ", got " + expansion_text(got);
  return c;
}

CheckResult boolean_check(std::string suite, std::string label, bool pass, std::string detail = {}) {
  return {std::move(suite), std::move(label), pass, pass ? std::string() : std::move(detail)};
}

SchurQExpansion q_terms(int n, std::initializer_list<std::pair<std::vector<int>, int>> terms) {
  SchurQExpansion x(n);
  for (const auto& [parts, c] : terms) x.add(StrictPartition(parts), c);
  return x;
}

}  // namespace

const std::vector<SchurQExpansion>& appendix_table(int k) {
  static const std::vector<SchurQExpansion> four = {
      q_terms(1, {{{1}, 1}}),
      q_terms(2, {{{2}, 2}}),
      q_terms(3, {{{3}, 4}, {{2, 1}, 2}}),
      q_terms(4, {{{4}, 7}, {{3, 1}, 8}}),
      q_terms(5, {{{5}, 11}, {{4, 1}, 20}, {{3, 2}, 16}}),
      q_terms(6, {{{6}, 16}, {{5, 1}, 40}, {{4, 2}, 61}, {{3, 2, 1}, 15}}),
      q_terms(7, {{{7}, 22}, {{6, 1}, 70}, {{5, 2}, 155}, {{4, 3}, 91}, {{4, 2, 1}, 77}}),
      q_terms(8, {{{8}, 29}, {{7, 1}, 112}, {{6, 2}, 323}, {{5, 3}, 344}, {{5, 2, 1}, 232},
                  {{4, 3, 1}, 168}}),
      q_terms(9, {{{9}, 37}, {{8, 1}, 168}, {{7, 2}, 595}, {{6, 3}, 891}, {{5, 4}, 456},
                  {{6, 2, 1}, 555}, {{5, 3, 1}, 744}, {{4, 3, 2}, 168}}),
  };
  static const std::vector<SchurQExpansion> five = {
      q_terms(1, {{{1}, 1}}),
      q_terms(2, {{{2}, 2}}),
      q_terms(3, {{{3}, 4}, {{2, 1}, 1}}),
      q_terms(4, {{{4}, 8}, {{3, 1}, 8}}),
      q_terms(5, {{{5}, 15}, {{4, 1}, 24}, {{3, 2}, 16}}),
      q_terms(6, {{{6}, 26}, {{5, 1}, 59}, {{4, 2}, 80}, {{3, 2, 1}, 16}}),
      q_terms(7, {{{7}, 42}, {{6, 1}, 125}, {{5, 2}, 259}, {{4, 3}, 160}, {{4, 2, 1}, 112}}),
      q_terms(8, {{{8}, 64}, {{7, 1}, 237}, {{6, 2}, 664}, {{5, 3}, 769}, {{5, 2, 1}, 448},
                  {{4, 3, 1}, 384}}),
      q_terms(9, {{{9}, 93}, {{8, 1}, 413}, {{7, 2}, 1461}, {{6, 3}, 2441}, {{5, 4}, 1329},
                  {{6, 2, 1}, 1344}, {{5, 3, 1}, 2217}, {{4, 3, 2}, 768}}),
  };
  if (k == 4) return four;
  if (k == 5) return five;
  throw std::invalid_argument("appendix tables exist for k = 4 and k = 5");
}

std::vector<CheckResult> verify_table1(int max_n, const HistogramSource& source, int jobs) {
  std::vector<std::function<CheckResult()>> tasks;
  for (const auto& row : table1()) {
    for (const auto& p : row.pattern_sets) {
      for (int n = 3; n <= max_n; ++n) {
        tasks.push_back([&source, &row, p, n] {
          const std::string label =
              "row" + std::to_string(row.row) + " " + format_pattern_set(p) + " n=" + std::to_string(n);
          return compare("table1", label, expand_in_schurq(r_n(source, p, n)),
                         closed_form(ClosedFormId::row(row.row), n));
        });
      }
    }
  }
  return run_tasks(tasks, jobs);
}

std::vector<CheckResult> verify_appendix(int max_n, const HistogramSource& source, int jobs) {
  std::vector<std::function<CheckResult()>> tasks;
  for (int k : {4, 5}) {
    const auto& table = appendix_table(k);
    for (int n = 1; n <= std::min(max_n, 9); ++n) {
      tasks.push_back([&source, &table, k, n] {
        const PatternSet p{Permutation::identity(k)};
        const std::string label = format_pattern_set(p) + " n=" + std::to_string(n);
        return compare("appendix", label, expand_in_schurq(r_n(source, p, n)),
                       table[static_cast<std::size_t>(n - 1)]);
      });
    }
  }
  return run_tasks(tasks, jobs);
}

namespace {

IndexSet left_neighbour_peaks(const Permutation& p) {
  const int n = p.size();
  const Permutation pos = p.inverse();
  std::vector<int> out;
  for (int v = 2; v < n; ++v)
    if (pos.at(v - 1) < pos.at(v) && pos.at(v + 1) < pos.at(v)) out.push_back(v);
  return IndexSet(out, n);
}

CheckResult for_all_perms(const std::string& label, int n,
                          const std::function<bool(const Permutation&)>& holds) {
  for (const auto& p : enumerate_av(n, {}))
    if (!holds(p)) return boolean_check("identities", label, false, "fails at " + format_permutation(p));
  return boolean_check("identities", label, true);
}

QsymExpr peak_k(const Permutation& p) { return QsymExpr::peak(peak_set(p)); }

}  // namespace

std::vector<CheckResult> verify_identities(int max_n, const HistogramSource& source, int jobs) {
  std::vector<std::function<CheckResult()>> tasks;
  const auto subsets = std::make_shared<std::vector<PatternSet>>(all_subsets_of_sk(3));
  for (int n = 1; n <= max_n; ++n) {
    const std::string at = " n=" + std::to_string(n);
    tasks.push_back([n, at] {
      return for_all_perms("sw-insertion-peaks" + at, n, [](const Permutation& p) {
        return tableau_peaks(sagan_worley(p).insertion) == left_neighbour_peaks(p);
      });
    });
    tasks.push_back([n, at] {
      return for_all_perms("peak-of-inverse-insertion" + at, n, [](const Permutation& p) {
        return peak_set(p) == tableau_peaks(sagan_worley(p.inverse()).insertion);
      });
    });
    tasks.push_back([n, at] {
      return for_all_perms("rsk-descents" + at, n, [](const Permutation& p) {
        return descent_set(p) == tableau_descents(rsk(p).recording);
      });
    });
    tasks.push_back([n, at] {
      return for_all_perms("m-reversal" + at, n, [](const Permutation& p) {
        return reverse_m(to_m(peak_k(p))) == to_m(peak_k(apply_symmetry(p, Symmetry::reverse)));
      });
    });
    tasks.push_back([n, at, &source, subsets] {
      for (const auto& p : *subsets) {
        const QsymExpr r = r_n(source, p, n);
        if (is_symmetric(r) && !(r == r_n(source, p.transformed(Symmetry::reverse), n)))
          return boolean_check("identities", "symmetric-implies-reverse-equal" + at, false,
                               "fails for " + format_pattern_set(p));
      }
      return boolean_check("identities", "symmetric-implies-reverse-equal" + at, true);
    });
    tasks.push_back([n, at] {
      bool ok = true;
      for (const auto& p : enumerate_av(n, {Permutation({3, 2, 1})}))
        ok = ok && tableau_peaks(phi(p)) == peak_set(p);
      return boolean_check("identities", "phi-peaks" + at, ok);
    });
    tasks.push_back([n, at, &source] {
      Integer sum = 0;
      for (int k = 0; 2 * k < n; ++k) sum += (n - 2 * k) * count_two_row_ssht(n, k);
      Integer av = 0;
      for (const auto& [mask, c] : source(PatternSet{Permutation({1, 3, 2}), Permutation({2, 3, 1})}, n))
        av += c;
      const Integer want = pow2(static_cast<unsigned>(n - 1));
      return boolean_check("identities", "two-power" + at, sum == want && av == want,
                           "sum=" + to_string(sum) + " |Av|=" + to_string(av) + " want " +
                               to_string(want));
    });
  }
  return run_tasks(tasks, jobs);
}

std::vector<CheckResult> verify_shuffle(int max_n, const HistogramSource& source, int jobs) {
  std::vector<std::function<CheckResult()>> tasks;
  const std::vector<std::pair<PatternSet, PatternSet>> pairs = {
      {PatternSet{Permutation({1, 2})}, PatternSet{Permutation({1})}},
      {PatternSet{Permutation({2, 1})}, PatternSet{Permutation({1})}},
      {PatternSet{Permutation({1})}, PatternSet{Permutation({1, 2})}},
  };
  for (const auto& [a, b] : pairs) {
    for (int n = 0; n <= max_n; ++n) {
      tasks.push_back([&source, a, b, n] {
        const std::string label = "formula " + format_pattern_set(a) + " x " + format_pattern_set(b) +
                                  " n=" + std::to_string(n);
        const QsymExpr lhs = r_n(source, shuffle_pattern_sets(a, b), n);
        const QsymExpr rhs = shuffle_formula_rhs(a, b, n);
        return boolean_check("shuffle", label, lhs == rhs,
                             "direct " + format_text(lhs) + ", formula " + format_text(rhs));
      });
    }
  }
  for (const char* text : {"123,132,312", "123,213,231", "321,312,132", "213,231,321"}) {
    const PatternSet p = parse_pattern_set(text);
    for (int n = 2; n <= max_n; ++n) {
      tasks.push_back([&source, p, n] {
        SchurQExpansion want(n);
        want.add(StrictPartition({n}), 2);
        if (n - 1 > 1) want.add(StrictPartition({n - 1, 1}), 1);
        return compare("shuffle", "shuffle-set " + format_pattern_set(p) + " n=" + std::to_string(n),
                       expand_in_schurq(r_n(source, p, n)), want);
      });
    }
  }
  return run_tasks(tasks, jobs);
}

}  // namespace peakfn
