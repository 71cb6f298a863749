#pragma once

// Text, LaTeX and JSON encodings for the library's value types.

#include "peakfn/insertion.hpp"
#include "peakfn/pattern_peak.hpp"
#include "peakfn/permutation.hpp"
#include "peakfn/qsym.hpp"
#include "peakfn/schurq.hpp"
#include "peakfn/tableau.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace peakfn {

/// Contiguous digits for n <= 9 ("4612537"), comma-separated otherwise.
std::string format_permutation(const Permutation& p);
/// Accepts digits, comma-separated entries, or either wrapped in brackets.
Permutation parse_permutation(std::string_view text);

/// "123,132,312"; patterns above size 9 bracketed: "[10,3,1,...]".
std::string format_pattern_set(const PatternSet& p);
/// Empty text, "{}" and "∅" give the empty set.
PatternSet parse_pattern_set(std::string_view text);

/// "{2,5}", "{}" when empty.
std::string format_index_set(const IndexSet& s);
IndexSet parse_index_set(std::string_view text, int degree);

/// "(6,3)".
std::string format_partition(const std::vector<int>& parts);
/// "(6,3)" or "6,3".
std::vector<int> parse_parts(std::string_view text);
StrictPartition parse_strict_partition(std::string_view text);

/// Rows bottom-up, "/"-separated: "1,2,3',7/4,5/6".
std::string format_rows(const Rows& rows, const std::set<int>& marks = {});
std::string format_tableau(const YoungTableau& t);
std::string format_tableau(const ShiftedTableau& t);
std::string format_tableau(const MarkedShiftedTableau& t);
/// Parses rows and collects apostrophe marks.
Rows parse_rows(std::string_view text, std::set<int>* marks = nullptr);
ShiftedTableau parse_shifted_tableau(std::string_view text);

// Expressions. Text: "7*Q(4) + 8*Q(3,1)", "2*K{2} - K{}", "0" when empty.
std::string format_text(const QsymExpr& e);
std::string format_text(const SchurQExpansion& x);
std::string format_latex(const QsymExpr& e);
std::string format_latex(const SchurQExpansion& x);

nlohmann::ordered_json to_json(const QsymExpr& e);
nlohmann::ordered_json to_json(const SchurQExpansion& x);
nlohmann::ordered_json to_json(const NotInSpan& r);
nlohmann::ordered_json to_json(const ConjectureReport& r);
QsymExpr qsym_from_json(const nlohmann::json& j);
SchurQExpansion schurq_from_json(const nlohmann::json& j);

/// "not in span: peak set {2} expects 3, best combination gives 2".
std::string format_text(const NotInSpan& r);

}  // namespace peakfn
