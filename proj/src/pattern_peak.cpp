#include "peakfn/pattern_peak.hpp"

#include "peakfn/text.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace peakfn {

HistogramSource enumerating_source(int jobs) {
  return [jobs](const PatternSet& p, int n) { return peak_mask_histogram(n, p, jobs); };
}

QsymExpr histogram_to_k(const PeakHistogram& h, int n) {
  QsymExpr out(Basis::K, n);
  for (const auto& [mask, count] : h) out.add(IndexSet::from_mask(mask, n).elements(), Integer(count));
  return out;
}

QsymExpr r_n(const PatternSet& patterns, int n, int jobs) {
  return histogram_to_k(peak_mask_histogram(n, patterns, jobs), n);
}

QsymExpr r_n(const HistogramSource& source, const PatternSet& patterns, int n) {
  return histogram_to_k(source(patterns, n), n);
}

QsymExpr pattern_fundamental(const PatternSet& patterns, int n) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for_each_avoider(n, patterns, [&](std::span<const int> w) { ++hist[descent_mask(w)]; });
  QsymExpr out(Basis::F, n);
  for (const auto& [mask, count] : hist)
    out.add(Composition::from_set(IndexSet::from_mask(mask, n)).parts(), Integer(count));
  return out;
}

ClosedFormId ClosedFormId::row(int r) {
  if (r < 1 || r > 8) throw std::invalid_argument("table rows are numbered 1-8");
  return {Kind::table_row, r};
}

ClosedFormId ClosedFormId::include_delta(int j) {
  if (j < 2) throw std::invalid_argument("include-delta needs j >= 2");
  return {Kind::include_delta, j};
}

ClosedFormId ClosedFormId::parse(const std::string& text) {
  if (text == "r321") return row(2);
  if (text == "r132_312") return row(3);
  if (text == "shuffle_case") return row(5);
  const std::string prefix = "includedelta(";
  try {
    if (text.rfind(prefix, 0) == 0 && text.back() == ')')
      return include_delta(std::stoi(text.substr(prefix.size(), text.size() - prefix.size() - 1)));
    if (text.rfind("row", 0) == 0) return row(std::stoi(text.substr(3)));
    std::size_t used = 0;
    const int r = std::stoi(text, &used);
    if (used == text.size()) return row(r);
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("unknown closed form '" + text + "'");
}

std::string ClosedFormId::name() const {
  if (kind == Kind::include_delta) return "includedelta(" + std::to_string(value) + ")";
  return "row" + std::to_string(value);
}

namespace {

PatternSet patterns_of(std::initializer_list<const char*> words) {
  PatternSet out;
  for (const char* w : words) out.insert(parse_permutation(w));
  return out;
}

}  // namespace

const std::vector<TableRow>& table1() {
  static const std::vector<TableRow> rows = {
      {1, {PatternSet{}}, R"(\sum_{\lambda\vdash n} 2^{n-\ell(\lambda)}|\mathsf{SShT}(\lambda)|Q_\lambda)"},
      {2,
       {patterns_of({"123"}), patterns_of({"213"}), patterns_of({"312"}), patterns_of({"321"})},
       R"(\sum_{k=0}^{\lfloor n/2\rfloor}\left(\binom{n}{k+1}-\binom{n}{k-1}\right)Q_{(n-k,k)})"},
      {3,
       {patterns_of({"213", "132"}), patterns_of({"231", "312"}), patterns_of({"123", "132"}),
        patterns_of({"132", "312"}), patterns_of({"213", "231"}), patterns_of({"231", "321"})},
       R"(\sum_{k=0}^{\lfloor n/2\rfloor}(n-2k)Q_{(n-k,k)})"},
      {4, {patterns_of({"132", "231"})}, R"(2^{n-1}Q_{(n)})"},
      {5,
       {patterns_of({"123", "132", "312"}), patterns_of({"123", "213", "231"}),
        patterns_of({"132", "312", "321"}), patterns_of({"132", "213", "321"}),
        patterns_of({"132", "213", "312"}), patterns_of({"123", "231", "312"}),
        patterns_of({"213", "231", "321"}), patterns_of({"213", "231", "312"})},
       R"(2Q_{(n)}+Q_{(n-1,1)})"},
      {6,
       {patterns_of({"123", "132", "231"}), patterns_of({"132", "213", "231"}),
        patterns_of({"132", "231", "312"}), patterns_of({"132", "231", "321"})},
       R"(nQ_{(n)})"},
      {7,
       {patterns_of({"123", "132", "213", "231"}), patterns_of({"123", "132", "231", "312"}),
        patterns_of({"132", "213", "231", "312"}), patterns_of({"132", "213", "231", "321"}),
        patterns_of({"132", "231", "312", "321"})},
       R"(2Q_{(n)})"},
      {8,
       {patterns_of({"123", "132", "213", "231", "312"}),
        patterns_of({"132", "213", "231", "312", "321"})},
       R"(Q_{(n)})"},
  };
  return rows;
}

namespace {

void add_two_row(SchurQExpansion& x, int n, int k, const Integer& c) {
  if (c == 0) return;
  if (k == 0) {
    x.add(StrictPartition({n}), Rational(c));
  } else if (n - k > k) {
    x.add(StrictPartition({n - k, k}), Rational(c));
  }
}

}  // namespace

SchurQExpansion include_delta_formula(int j, int n) {
  if (j < 2) throw std::invalid_argument("include-delta needs j >= 2");
  if (n < 1) throw std::invalid_argument("include-delta needs n >= 1");
  SchurQExpansion x(n);
  for (int k = 0; n - k > k || k == 0; ++k) {
    const int c = std::min(n - 2 * k, j - 1 - k);
    if (c > 0) add_two_row(x, n, k, c);
    if (k == 0 && n == 0) break;
  }
  return x;
}

SchurQExpansion include_delta_printed(int j, int n) {
  if (j < 2) throw std::invalid_argument("include-delta needs j >= 2");
  SchurQExpansion x(n);
  for (int k = 0; k <= j - 2; ++k)
    if (k == 0 || n - k > k) add_two_row(x, n, k, j - 1 - k);
  return x;
}

PatternSet include_delta_patterns(int j) {
  PatternSet p = patterns_of({"132", "312"});
  p.insert(Permutation::decreasing(j));
  return p;
}

SchurQExpansion closed_form(const ClosedFormId& id, int n) {
  if (n < 3) throw std::invalid_argument("closed forms are stated for n >= 3");
  if (id.kind == ClosedFormId::Kind::include_delta) return include_delta_formula(id.value, n);

  SchurQExpansion x(n);
  const StrictPartition row_shape({n});
  switch (id.value) {
    case 1:
      for (const auto& l : strict_partitions(n)) {
        const Integer c = pow2(static_cast<unsigned>(n - l.length())) *
                          Integer(enumerate_ssht(l).size());
        x.add(l, Rational(c));
      }
      break;
    case 2:
      for (int k = 0; 2 * k <= n; ++k) add_two_row(x, n, k, binomial(n, k + 1) - binomial(n, k - 1));
      break;
    case 3:
      for (int k = 0; 2 * k <= n; ++k) add_two_row(x, n, k, n - 2 * k);
      break;
    case 4:
      x.add(row_shape, Rational(pow2(static_cast<unsigned>(n - 1))));
      break;
    case 5:
      x.add(row_shape, 2);
      x.add(StrictPartition({n - 1, 1}), 1);
      break;
    case 6:
      x.add(row_shape, n);
      break;
    case 7:
      x.add(row_shape, 2);
      break;
    case 8:
      x.add(row_shape, 1);
      break;
    default:
      throw std::invalid_argument("table rows are numbered 1-8");
  }
  return x;
}

QsymExpr shuffle_formula_rhs(const PatternSet& p, const PatternSet& p2, int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<QsymExpr> r1;
  std::vector<QsymExpr> r2;
  for (int k = 0; k <= n; ++k) {
    r1.push_back(r_n(p, k));
    r2.push_back(r_n(p2, k));
  }
  const QsymExpr k1 = QsymExpr::peak(IndexSet({}, 1));
  QsymExpr out = r2[static_cast<std::size_t>(n)];
  for (int k = 0; k < n; ++k) {
    QsymExpr bracket = peak_product(k1, r2[static_cast<std::size_t>(n - k - 1)]);
    bracket -= r2[static_cast<std::size_t>(n - k)];
    out += peak_product(r1[static_cast<std::size_t>(k)], bracket);
  }
  return out;
}

ConjectureReport conjecture_check(int k, int n, const HistogramSource& source) {
  if (k < 2) throw std::invalid_argument("conjecture_check needs k >= 2");
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport report;
  report.k = k;
  report.n = n;
  const QsymExpr r = r_n(source, PatternSet{Permutation::identity(k)}, n);
  report.symmetric = is_symmetric(r);
  report.expansion = expand_in_schurq(r);
  if (const auto* x = std::get_if<SchurQExpansion>(&report.expansion))
    report.q_positive = is_schurq_positive(*x);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<int> find_nonsymmetric_witness(const PatternSet& patterns, int n_max,
                                             const HistogramSource& source) {
  for (int n = 1; n <= n_max; ++n)
    if (!is_symmetric(r_n(source, patterns, n))) return n;
  return std::nullopt;
}

}  // namespace peakfn
