#include "oracles.hpp"
#include "peakfn/tableau.hpp"
#include "peakfn/text.hpp"

#include <gtest/gtest.h>

using namespace peakfn;

namespace {

std::vector<int> E(const IndexSet& s) { return s.elements(); }

// Every standard filling of a (shifted) shape, by testing all n! words
// laid out row by row.
template <class Tab>
std::set<Rows> brute_fillings(const std::vector<int>& shape, bool shifted) {
  int n = 0;
  for (int p : shape) n += p;
  std::set<Rows> out;
  for (const auto& w : oracle::all_perms(n)) {
    Rows rows;
    std::size_t at = 0;
    for (int len : shape) {
      rows.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(at),
                        w.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(len)));
      at += static_cast<std::size_t>(len);
    }
    if (shifted ? is_standard_shifted(rows) : is_standard_young(rows)) out.insert(rows);
  }
  return out;
}

std::set<Rows> rows_of(const std::vector<ShiftedTableau>& ts) {
  std::set<Rows> out;
  for (const auto& t : ts) out.insert(t.rows());
  return out;
}

std::set<Rows> rows_of(const std::vector<YoungTableau>& ts) {
  std::set<Rows> out;
  for (const auto& t : ts) out.insert(t.rows());
  return out;
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(StrictPartition({2, 2}), std::invalid_argument);
  EXPECT_TRUE(Partition({3, 1}).is_strict());
  EXPECT_FALSE(Partition({2, 2}).is_strict());
  EXPECT_EQ(StrictPartition({4, 2, 1}).weight(), 7);
}

TEST(Partition, StrictPartitionsInReverseLexOrder) {
  std::vector<std::vector<int>> got;
  for (const auto& l : strict_partitions(6)) got.push_back(l.parts());
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{6}, {5, 1}, {4, 2}, {3, 2, 1}}));
  EXPECT_EQ(strict_partitions(9).size(), 8u);
  EXPECT_EQ(strict_partitions(0).size(), 1u);
}

TEST(Tableau, Validation) {
  EXPECT_NO_THROW(YoungTableau({{1, 2, 4}, {3}}));
  EXPECT_THROW(YoungTableau({{1, 3}, {2, 4, 5}}), std::invalid_argument);
  EXPECT_THROW(YoungTableau({{1, 2}, {4}, {3}}), std::invalid_argument);
  EXPECT_NO_THROW(ShiftedTableau({{1, 2, 3}, {4, 5}, {6}}));
  // Row 2 starts at column 2, above the 2.
  EXPECT_THROW(ShiftedTableau({{1, 3, 4}, {2}}), std::invalid_argument);
  EXPECT_THROW(ShiftedTableau({{1, 2}, {3, 4}}), std::invalid_argument);
}

TEST(Tableau, MarksOnlyOffDiagonal) {
  const ShiftedTableau t({{1, 2, 3}, {4, 5}});
  EXPECT_NO_THROW(MarkedShiftedTableau(t, {2, 5}));
  EXPECT_THROW(MarkedShiftedTableau(t, {1}), std::invalid_argument);
  EXPECT_THROW(MarkedShiftedTableau(t, {4}), std::invalid_argument);
}

TEST(Enumerate, ShiftedWorkedExamples) {
  const auto t = enumerate_ssht(StrictPartition({3, 2, 1}));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(enumerate_ssht(StrictPartition({5})).size(), 1u);
  EXPECT_EQ(enumerate_ssht(StrictPartition({4, 2})).size(), 5u);
}

TEST(Enumerate, YoungWorkedExamples) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(enumerate_syt(Partition({n - 1, 1})).size(), static_cast<std::size_t>(n - 1));
  EXPECT_EQ(enumerate_syt(Partition({4})).size(), 1u);
  EXPECT_EQ(enumerate_syt(Partition({3, 1})).size(), 3u);
}

TEST(Enumerate, AgreesWithBruteForceFillings) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& l : strict_partitions(n)) {
      EXPECT_EQ(rows_of(enumerate_ssht(l)), brute_fillings<ShiftedTableau>(l.parts(), true));
      EXPECT_EQ(rows_of(enumerate_syt(l.as_partition())), brute_fillings<YoungTableau>(l.parts(), false));
    }
  }
  EXPECT_EQ(rows_of(enumerate_syt(Partition({2, 2, 1}))), brute_fillings<YoungTableau>({2, 2, 1}, false));
  EXPECT_EQ(rows_of(enumerate_syt(Partition({3, 3}))), brute_fillings<YoungTableau>({3, 3}, false));
}

TEST(Descents, ShiftedWorkedExamples) {
  const ShiftedTableau a({{1, 2, 3}, {4, 5}, {6}});
  const ShiftedTableau b({{1, 2, 4}, {3, 5}, {6}});
  EXPECT_EQ(E(tableau_descents(a)), (std::vector<int>{3, 5}));
  EXPECT_EQ(E(tableau_peaks(a)), (std::vector<int>{3, 5}));
  EXPECT_EQ(E(tableau_descents(b)), (std::vector<int>{2, 4, 5}));
  EXPECT_EQ(E(tableau_peaks(b)), (std::vector<int>{2, 4}));
  EXPECT_TRUE(tableau_descents(ShiftedTableau({{1, 2, 3, 4}})).empty());
}

TEST(Counts, TwoRowWorkedExamples) {
  EXPECT_EQ(count_two_row_syt(3, 1), 3);
  EXPECT_EQ(count_two_row_syt(7, 0), 1);
  EXPECT_EQ(count_two_row_syt(5, 4), 42);
  EXPECT_THROW(count_two_row_syt(1, 2), std::invalid_argument);
  EXPECT_EQ(count_two_row_ssht(6, 2), 5);
  EXPECT_EQ(count_two_row_ssht(9, 0), 1);
  EXPECT_EQ(count_two_row_ssht(9, 4), 14);
  EXPECT_THROW(count_two_row_ssht(4, 2), std::invalid_argument);
}

TEST(Counts, TwoRowFormulasMatchEnumeration) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; 2 * k < n; ++k) {
      const std::vector<int> parts = k ? std::vector<int>{n - k, k} : std::vector<int>{n};
      EXPECT_EQ(count_two_row_ssht(n, k), Integer(enumerate_ssht(StrictPartition(parts)).size()));
    }
    for (int b = 0; 2 * b <= n; ++b) {
      const std::vector<int> parts = b ? std::vector<int>{n - b, b} : std::vector<int>{n};
      EXPECT_EQ(count_two_row_syt(n - b, b), Integer(enumerate_syt(Partition(parts)).size()));
    }
  }
}

TEST(Counts, WeightedTwoRowSumIsPowerOfTwo) {
  for (int n = 1; n <= 20; ++n) {
    Integer sum = 0;
    for (int k = 0; 2 * k < n; ++k) sum += (n - 2 * k) * count_two_row_ssht(n, k);
    EXPECT_EQ(sum, pow2(static_cast<unsigned>(n - 1))) << n;
  }
}

TEST(ReadingWord, WorkedExamples) {
  EXPECT_EQ(reading_word(YoungTableau({{1, 2, 3, 6, 7, 9}, {4, 5, 8}})), parse_permutation("458123679"));
  EXPECT_EQ(reading_word(YoungTableau({{1, 2, 3, 7, 9}, {4, 5, 6, 8}})), parse_permutation("456812379"));
  EXPECT_EQ(reading_word(YoungTableau({{1, 2, 3, 4}})), Permutation::identity(4));
}

TEST(SPair, WorkedExample) {
  const SPair sp = build_s_sprime(ShiftedTableau({{1, 2, 3, 6, 7, 9}, {4, 5, 8}}));
  EXPECT_EQ(sp.s, YoungTableau({{1, 2, 3, 6, 7, 9}, {4, 5, 8}}));
  ASSERT_TRUE(sp.s_prime.has_value());
  EXPECT_EQ(*sp.s_prime, YoungTableau({{1, 2, 3, 7, 9}, {4, 5, 6, 8}}));
  EXPECT_EQ(sp.shifted_entry, 6);
}

TEST(SPair, BalancedShapeHasNoSPrime) {
  const SPair sp = build_s_sprime(ShiftedTableau({{1, 2, 4}, {3, 5}}));
  EXPECT_FALSE(sp.s_prime.has_value());
  EXPECT_EQ(sp.shifted_entry, 0);
}

TEST(SPair, SingleRowFallsBackToTwo) {
  const SPair sp = build_s_sprime(ShiftedTableau({{1, 2, 3, 4, 5}}));
  EXPECT_EQ(sp.s, YoungTableau({{1, 2, 3, 4, 5}}));
  ASSERT_TRUE(sp.s_prime.has_value());
  EXPECT_EQ(*sp.s_prime, YoungTableau({{1, 3, 4, 5}, {2}}));
  EXPECT_EQ(sp.shifted_entry, 2);
}

TEST(SPair, OutputsAreStandardForEveryTwoRowTableau) {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; 2 * k < n; ++k) {
      const std::vector<int> parts = k ? std::vector<int>{n - k, k} : std::vector<int>{n};
      for (const auto& t : enumerate_ssht(StrictPartition(parts))) {
        const SPair sp = build_s_sprime(t);
        EXPECT_TRUE(is_standard_young(sp.s.rows()));
        EXPECT_EQ(sp.s_prime.has_value(), n > 2 * k + 1);
        if (sp.s_prime) EXPECT_TRUE(is_standard_young(sp.s_prime->rows()));
      }
    }
  }
  EXPECT_THROW(build_s_sprime(ShiftedTableau({{1, 2, 3}, {4, 5}, {6}})), std::invalid_argument);
}

TEST(Labels, WorkedExample) {
  const ShiftedTableau t({{1, 2, 3, 5, 6, 9}, {4, 7, 8}});
  const AbcLabels l = label_abc(t);
  EXPECT_EQ(l.a, (std::vector<int>{4, 7, 8}));
  EXPECT_EQ(l.b, (std::vector<int>{3, 5, 6}));
  EXPECT_EQ(l.c, (std::vector<int>{1, 2, 9}));
  const auto perms = labeled_permutations(t);
  const std::set<Permutation> got(perms.begin(), perms.end());
  EXPECT_EQ(got, (std::set<Permutation>{parse_permutation("874123569"), parse_permutation("874213569"),
                                        parse_permutation("987421356")}));
}

TEST(Labels, SingleRow) {
  const AbcLabels l = label_abc(ShiftedTableau({{1, 2, 3, 4}}));
  EXPECT_TRUE(l.a.empty());
  EXPECT_TRUE(l.b.empty());
  EXPECT_EQ(l.c, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(labeled_permutations(ShiftedTableau({{1, 2, 3, 4}})).size(), 4u);
}

TEST(Labels, PartitionEntriesAndAvoidVShapePatterns) {
  const PatternSet v{parse_permutation("132"), parse_permutation("231")};
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; 2 * k < n; ++k) {
      const std::vector<int> parts = k ? std::vector<int>{n - k, k} : std::vector<int>{n};
      for (const auto& t : enumerate_ssht(StrictPartition(parts))) {
        const AbcLabels l = label_abc(t);
        std::vector<int> all = l.a;
        all.insert(all.end(), l.b.begin(), l.b.end());
        all.insert(all.end(), l.c.begin(), l.c.end());
        std::sort(all.begin(), all.end());
        EXPECT_EQ(all, Permutation::identity(n).word());
        const auto perms = labeled_permutations(t);
        EXPECT_EQ(perms.size(), static_cast<std::size_t>(n - 2 * k));
        for (const auto& p : perms) EXPECT_TRUE(avoids(p.entries(), v));
      }
    }
  }
}

TEST(Markings, CountIsPowerOfTwo) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& l : strict_partitions(n)) {
      for (const auto& t : enumerate_ssht(l)) {
        const auto m = all_markings(t);
        EXPECT_EQ(m.size(), std::size_t{1} << (n - l.length()));
        std::set<MarkedShiftedTableau> distinct(m.begin(), m.end());
        EXPECT_EQ(distinct.size(), m.size());
      }
    }
  }
}
