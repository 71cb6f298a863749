#include "oracles.hpp"
#include "peakfn/pattern_peak.hpp"
#include "peakfn/tableau.hpp"
#include "peakfn/text.hpp"

#include <gtest/gtest.h>

using namespace peakfn;

namespace {

StrictPartition SP(std::vector<int> parts) { return StrictPartition(std::move(parts)); }
PatternSet PS(const char* text) { return parse_pattern_set(text); }

std::vector<oracle::Word> words(const PatternSet& p) {
  std::vector<oracle::Word> out;
  for (const auto& q : p) out.push_back(q.word());
  return out;
}

QsymExpr brute_r_n(const PatternSet& p, int n) {
  QsymExpr out(Basis::K, n);
  for (const auto& [peaks, count] : oracle::peak_histogram(oracle::av(n, words(p))))
    out.add(peaks, static_cast<long>(count));
  return out;
}

SchurQExpansion expand(const QsymExpr& e) {
  const ExpandResult r = expand_in_schurq(e);
  if (!std::holds_alternative<SchurQExpansion>(r)) throw std::runtime_error("not in span");
  return std::get<SchurQExpansion>(r);
}

SchurQExpansion two_row(int n, const std::function<long(int)>& coeff) {
  SchurQExpansion x(n);
  for (int k = 0; 2 * k < n; ++k) {
    const long c = coeff(k);
    if (c) x.add(k ? SP({n - k, k}) : SP({n}), c);
  }
  return x;
}

}  // namespace

TEST(RN, SmallSizes) {
  for (const auto& p : all_subsets_of_sk(3)) {
    EXPECT_EQ(r_n(p, 0), QsymExpr::one(Basis::K));
    for (int n = 1; n <= 2; ++n) {
      SchurQExpansion want(n);
      want.add(SP({n}), n);
      EXPECT_EQ(expand(r_n(p, n)), want) << format_pattern_set(p);
    }
  }
  SchurQExpansion want(3);
  want.add(SP({3}), 4);
  want.add(SP({2, 1}), 2);
  EXPECT_EQ(expand(r_n(PatternSet{}, 3)), want);
  EXPECT_EQ(expand(r_n(PatternSet{parse_permutation("1234")}, 3)), want);
}

TEST(RN, MatchesBruteForce) {
  for (const auto& p : all_subsets_of_sk(3))
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(r_n(p, n), brute_r_n(p, n)) << format_pattern_set(p) << " n=" << n;
  for (const char* text : {"1234", "2413,3142", "1324,4231"})
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(r_n(PS(text), n, 3), brute_r_n(PS(text), n)) << text << " n=" << n;
}

TEST(RN, OneTermPerPeakSet) {
  const QsymExpr e = r_n(PatternSet{}, 6);
  EXPECT_EQ(e.terms().size(), peak_sets(6).size());
  Integer total = 0;
  for (const auto& [idx, c] : e.terms()) total += c;
  EXPECT_EQ(total, 720);
}

TEST(RN, CachedSourceIsUsed) {
  int calls = 0;
  HistogramSource src = [&](const PatternSet& p, int n) {
    ++calls;
    return enumerating_source()(p, n);
  };
  EXPECT_EQ(r_n(src, PS("321"), 5), r_n(PS("321"), 5));
  EXPECT_EQ(calls, 1);
}

TEST(PatternFundamental, WorkedExamples) {
  for (const auto& p : all_subsets_of_sk(3)) EXPECT_EQ(pattern_fundamental(p, 1), QsymExpr::fundamental(Composition({1})));
  EXPECT_EQ(pattern_fundamental(PatternSet{}, 2),
            QsymExpr::fundamental(Composition({2})) + QsymExpr::fundamental(Composition({1, 1})));
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(pattern_fundamental(PS("213,231"), n), pattern_fundamental(PS("213,132"), n));
}

TEST(PatternFundamental, PeakFunctionIsTheImageUnderDescentsToPeaks) {
  for (const auto& p : all_subsets_of_sk(3))
    for (int n = 0; n <= 6; ++n) {
      const QsymExpr f = pattern_fundamental(p, n);
      QsymExpr want(Basis::K, n);
      for (const auto& [idx, c] : f.terms())
        want.add(peak_set_of(comp_set(Composition(idx))).elements(), c);
      EXPECT_EQ(r_n(p, n), want);
    }
}

TEST(ClosedFormId, Parsing) {
  EXPECT_EQ(ClosedFormId::parse("row3"), ClosedFormId::row(3));
  EXPECT_EQ(ClosedFormId::parse("7"), ClosedFormId::row(7));
  EXPECT_EQ(ClosedFormId::parse("r321"), ClosedFormId::row(2));
  EXPECT_EQ(ClosedFormId::parse("r132_312"), ClosedFormId::row(3));
  EXPECT_EQ(ClosedFormId::parse("shuffle_case"), ClosedFormId::row(5));
  EXPECT_EQ(ClosedFormId::parse("includedelta(4)"), ClosedFormId::include_delta(4));
  EXPECT_THROW(ClosedFormId::parse("row9"), std::invalid_argument);
  EXPECT_THROW(ClosedFormId::parse("includedelta(1)"), std::invalid_argument);
  EXPECT_THROW(ClosedFormId::parse("bogus"), std::invalid_argument);
  EXPECT_EQ(ClosedFormId::parse(ClosedFormId::include_delta(5).name()), ClosedFormId::include_delta(5));
}

TEST(ClosedForm, WorkedExamples) {
  SchurQExpansion r2(4);
  r2.add(SP({4}), 4);
  r2.add(SP({3, 1}), 5);
  EXPECT_EQ(closed_form(ClosedFormId::row(2), 4), r2);
  for (int n = 3; n <= 10; ++n) {
    SchurQExpansion r4(n);
    r4.add(SP({n}), pow2(static_cast<unsigned>(n - 1)));
    EXPECT_EQ(closed_form(ClosedFormId::row(4), n), r4);
    SchurQExpansion r8(n);
    r8.add(SP({n}), 1);
    EXPECT_EQ(closed_form(ClosedFormId::row(8), n), r8);
  }
  EXPECT_THROW(closed_form(ClosedFormId::row(1), 2), std::invalid_argument);
}

TEST(ClosedForm, FormulasFromDefinitions) {
  for (int n = 3; n <= 10; ++n) {
    SchurQExpansion r1(n);
    for (const auto& l : strict_partitions(n))
      r1.add(l, pow2(static_cast<unsigned>(n - l.length())) * Integer(enumerate_ssht(l).size()));
    EXPECT_EQ(closed_form(ClosedFormId::row(1), n), r1);
    EXPECT_EQ(closed_form(ClosedFormId::row(2), n),
              two_row(n, [&](int k) { return oracle::binom(n, k + 1) - oracle::binom(n, k - 1); }));
    EXPECT_EQ(closed_form(ClosedFormId::row(3), n), two_row(n, [&](int k) { return n - 2 * k; }));
    EXPECT_EQ(closed_form(ClosedFormId::row(5), n), two_row(n, [](int k) { return k == 0 ? 2 : k == 1 ? 1 : 0; }));
    EXPECT_EQ(closed_form(ClosedFormId::row(6), n), two_row(n, [&](int k) { return k == 0 ? n : 0; }));
    EXPECT_EQ(closed_form(ClosedFormId::row(7), n), two_row(n, [](int k) { return k == 0 ? 2 : 0; }));
  }
}

TEST(ClassificationTable, ThirtyOnePatternSetsInEightRows) {
  std::size_t sets = 0;
  std::set<PatternSet> distinct;
  for (const auto& row : table1()) {
    sets += row.pattern_sets.size();
    for (const auto& p : row.pattern_sets) distinct.insert(p);
    EXPECT_FALSE(row.formula.empty());
  }
  EXPECT_EQ(table1().size(), 8u);
  EXPECT_EQ(sets, 31u);
  EXPECT_EQ(distinct.size(), 31u);
}

TEST(ClassificationTable, BruteForceMatchesClosedForms) {
  for (const auto& row : table1())
    for (const auto& p : row.pattern_sets)
      for (int n = 3; n <= 7; ++n)
        EXPECT_EQ(expand(brute_r_n(p, n)), closed_form(ClosedFormId::row(row.row), n))
            << "row " << row.row << " " << format_pattern_set(p) << " n=" << n;
}

// Symmetric for every n up to the bound iff listed, among subsets that do not
// contain both 123 and 321 (those are empty from n = 5 on).
TEST(ClassificationTable, ListsExactlyTheSymmetricSubsets) {
  std::set<PatternSet> listed;
  for (const auto& row : table1())
    for (const auto& p : row.pattern_sets) listed.insert(p);
  const Permutation up = parse_permutation("123");
  const Permutation down = parse_permutation("321");
  for (const auto& p : all_subsets_of_sk(3)) {
    if (p.patterns().count(up) && p.patterns().count(down)) continue;
    const bool symmetric = !find_nonsymmetric_witness(p, 7).has_value();
    EXPECT_EQ(symmetric, listed.count(p) == 1) << format_pattern_set(p);
  }
}

TEST(Symmetry, SymmetricImpliesReverseEqual) {
  for (const auto& p : all_subsets_of_sk(3))
    for (int n = 0; n <= 6; ++n) {
      const QsymExpr e = r_n(p, n);
      if (is_symmetric(e)) EXPECT_EQ(e, r_n(p.transformed(Symmetry::reverse), n)) << format_pattern_set(p);
    }
}

TEST(EmptyClass, ShiftedTableauxFormula) {
  for (int n = 1; n <= 8; ++n) {
    SchurQExpansion want(n);
    for (const auto& l : strict_partitions(n))
      want.add(l, pow2(static_cast<unsigned>(n - l.length())) * Integer(enumerate_ssht(l).size()));
    EXPECT_EQ(expand(r_n(PatternSet{}, n)), want);
  }
}

TEST(Shuffle, FormulaMatchesDirectComputation) {
  const std::vector<std::pair<PatternSet, PatternSet>> pairs = {
      {PS("12"), PS("1")}, {PS("21"), PS("1")}, {PS("1"), PS("12")}};
  for (const auto& [a, b] : pairs)
    for (int n = 0; n <= 7; ++n)
      EXPECT_EQ(shuffle_formula_rhs(a, b, n), brute_r_n(shuffle_pattern_sets(a, b), n))
          << format_pattern_set(a) << " " << format_pattern_set(b) << " n=" << n;
  EXPECT_EQ(shuffle_formula_rhs(PS("12"), PS("1"), 8), r_n(shuffle_pattern_sets(PS("12"), PS("1")), 8));
}

TEST(Shuffle, CollapseWithSingleLetter) {
  EXPECT_EQ(shuffle_formula_rhs(PS("12"), PS("1"), 0), QsymExpr::one(Basis::K));
  const QsymExpr k1 = QsymExpr::peak(IndexSet({}, 1));
  for (int n = 2; n <= 8; ++n)
    EXPECT_EQ(shuffle_formula_rhs(PS("12"), PS("1"), n), peak_product(QsymExpr::peak(IndexSet({}, n - 1)), k1));
}

TEST(Shuffle, ListedShuffleSets) {
  for (const char* text : {"123,132,312", "123,213,231", "321,312,132", "213,231,321"})
    for (int n = 3; n <= 7; ++n)
      EXPECT_EQ(expand(r_n(PS(text), n)), two_row(n, [](int k) { return k == 0 ? 2 : k == 1 ? 1 : 0; }))
          << text << " n=" << n;
}

TEST(IncludeDelta, WorkedExamples) {
  EXPECT_EQ(include_delta_patterns(4), PS("132,312,4321"));
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(include_delta_formula(3, n), two_row(n, [](int k) { return k == 0 ? 2 : k == 1 ? 1 : 0; }));
    EXPECT_EQ(include_delta_formula(2, n), two_row(n, [](int k) { return k == 0 ? 1 : 0; }));
  }
}

TEST(IncludeDelta, ClippedFormulaMatchesBruteForce) {
  for (int j = 2; j <= 5; ++j)
    for (int n = 1; n <= 8; ++n) {
      EXPECT_EQ(expand(r_n(include_delta_patterns(j), n)), include_delta_formula(j, n)) << "j=" << j << " n=" << n;
      if (n >= 2 * j - 3) EXPECT_EQ(include_delta_printed(j, n), include_delta_formula(j, n)) << "j=" << j << " n=" << n;
    }
}

TEST(IncludeDelta, PrintedFormDivergesForSmallN) {
  EXPECT_NE(include_delta_printed(5, 4), include_delta_formula(5, 4));
}

TEST(Witness, WorkedExamples) {
  EXPECT_EQ(find_nonsymmetric_witness(PS("132"), 8), 5);
  EXPECT_FALSE(find_nonsymmetric_witness(PatternSet{}, 8).has_value());
  const auto w = find_nonsymmetric_witness(PS("123,312"), 8);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(is_symmetric(r_n(PS("123,312"), *w)));
  for (int n = 1; n < *w; ++n) EXPECT_TRUE(is_symmetric(r_n(PS("123,312"), n)));
}

TEST(Conjecture, WorkedExamples) {
  const ConjectureReport a = conjecture_check(5, 6);
  EXPECT_TRUE(a.symmetric);
  EXPECT_TRUE(a.q_positive);
  SchurQExpansion want(6);
  want.add(SP({6}), 26);
  want.add(SP({5, 1}), 59);
  want.add(SP({4, 2}), 80);
  want.add(SP({3, 2, 1}), 16);
  EXPECT_EQ(std::get<SchurQExpansion>(a.expansion), want);
  for (int n = 3; n <= 8; ++n)
    EXPECT_EQ(std::get<SchurQExpansion>(conjecture_check(3, n).expansion), closed_form(ClosedFormId::row(2), n));
}
