#include "peakfn/text.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <type_traits>
#include <sstream>
#include <stdexcept>

namespace peakfn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

bool is_empty_set_text(std::string_view s) { return s.empty() || s == "{}" || s == "∅"; }

std::string strip(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == open && s.back() == close) s = s.substr(1, s.size() - 2);
  return std::string(trim(s));
}

}  // namespace

std::string format_permutation(const Permutation& p) {
  if (p.size() <= 9) {
    std::string out;
    for (int v : p.word()) out += static_cast<char>('0' + v);
    return out;
  }
  return join(p.word());
}

Permutation parse_permutation(std::string_view text) {
  const std::string body = strip(text, '[', ']');
  std::vector<int> w;
  if (body.find(',') != std::string::npos) {
    for (auto tok : split(body, ',')) w.push_back(parse_int(tok));
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw std::invalid_argument("bad permutation literal '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::string format_pattern_set(const PatternSet& p) {
  if (p.empty()) return "{}";
  std::string out;
  for (const auto& q : p) {
    if (!out.empty()) out += ',';
    out += q.size() <= 9 ? format_permutation(q) : "[" + format_permutation(q) + "]";
  }
  return out;
}

PatternSet parse_pattern_set(std::string_view text) {
  text = trim(text);
  PatternSet out;
  if (is_empty_set_text(text)) return out;
  std::string body(text);
  if (body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    const auto t = trim(cur);
    if (t.empty()) throw std::invalid_argument("empty pattern in list '" + std::string(text) + "'");
    out.insert(parse_permutation(t));
    cur.clear();
  };
  for (char c : body) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
    if (c == ',' && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
  flush();
  return out;
}

std::string format_index_set(const IndexSet& s) { return "{" + join(s.elements()) + "}"; }

IndexSet parse_index_set(std::string_view text, int degree) {
  text = trim(text);
  if (is_empty_set_text(text)) return IndexSet({}, degree);
  const std::string body = strip(text, '{', '}');
  std::vector<int> e;
  if (!body.empty())
    for (auto tok : split(body, ',')) e.push_back(parse_int(tok));
  return IndexSet(std::move(e), degree);
}

std::string format_partition(const std::vector<int>& parts) { return "(" + join(parts) + ")"; }

std::vector<int> parse_parts(std::string_view text) {
  const std::string body = strip(text, '(', ')');
  std::vector<int> parts;
  if (body.empty()) return parts;
  for (auto tok : split(body, ',')) parts.push_back(parse_int(tok));
  return parts;
}

StrictPartition parse_strict_partition(std::string_view text) {
  return StrictPartition(parse_parts(text));
}

std::string format_rows(const Rows& rows, const std::set<int>& marks) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '/';
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(rows[r][i]);
      if (marks.count(rows[r][i])) out += '\'';
    }
  }
  return out;
}

std::string format_tableau(const YoungTableau& t) { return format_rows(t.rows()); }
std::string format_tableau(const ShiftedTableau& t) { return format_rows(t.rows()); }
std::string format_tableau(const MarkedShiftedTableau& t) {
  return format_rows(t.base().rows(), t.marks());
}

Rows parse_rows(std::string_view text, std::set<int>* marks) {
  text = trim(text);
  Rows rows;
  if (text.empty()) return rows;
  for (auto row_text : split(text, '/')) {
    std::vector<int> row;
    for (auto tok : split(row_text, ',')) {
      bool marked = false;
      if (!tok.empty() && tok.back() == '\'') {
        marked = true;
        tok.remove_suffix(1);
      }
      const int v = parse_int(tok);
      if (marked) {
        if (!marks) throw std::invalid_argument("marks are not allowed here");
        marks->insert(v);
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ShiftedTableau parse_shifted_tableau(std::string_view text) { return ShiftedTableau(parse_rows(text)); }

namespace {

std::string index_text(Basis b, const std::vector<int>& index) {
  if (b == Basis::K) return "K{" + join(index) + "}";
  return std::string(1, basis_letter(b)) + "(" + join(index) + ")";
}

std::string index_latex(Basis b, const std::vector<int>& index) {
  if (b == Basis::K) return index.empty() ? "K_{\\emptyset}" : "K_{\\{" + join(index) + "\\}}";
  return std::string(1, basis_letter(b)) + "_{(" + join(index) + ")}";
}

template <class Terms, class Coeff, class Name>
std::string render_sum(const Terms& terms, Coeff coeff_text, Name name, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [index, c] : terms) {
    const bool negative = c < 0;
    using C = std::remove_cvref_t<decltype(c)>;
    const C mag = negative ? C(-c) : C(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += latex ? (negative ? "-" : "+") : (negative ? " - " : " + ");
    }
    if (mag != 1) out += coeff_text(mag) + (latex ? "" : "*");
    out += name(index);
  }
  return out;
}

std::string rational_latex(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return to_string(r);
  return "\\frac{" + to_string(boost::multiprecision::numerator(r)) + "}{" +
         to_string(boost::multiprecision::denominator(r)) + "}";
}

nlohmann::ordered_json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return to_string(c);
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace

std::string format_text(const QsymExpr& e) {
  return render_sum(
      e.terms(), [](const Integer& c) { return to_string(c); },
      [&](const std::vector<int>& i) { return index_text(e.basis(), i); }, false);
}

std::string format_text(const SchurQExpansion& x) {
  return render_sum(
      x.terms(), [](const Rational& c) { return to_string(c); },
      [](const StrictPartition& l) { return "Q" + format_partition(l.parts()); }, false);
}

std::string format_latex(const QsymExpr& e) {
  return render_sum(
      e.terms(), [](const Integer& c) { return to_string(c); },
      [&](const std::vector<int>& i) { return index_latex(e.basis(), i); }, true);
}

std::string format_latex(const SchurQExpansion& x) {
  return render_sum(x.terms(), rational_latex,
                    [](const StrictPartition& l) { return "Q_{" + format_partition(l.parts()) + "}"; },
                    true);
}

std::string format_text(const NotInSpan& r) {
  return "not in span: peak set " + format_index_set(r.witness) + " expects " +
         to_string(r.expected) + ", best combination gives " + to_string(r.achieved);
}

nlohmann::ordered_json to_json(const QsymExpr& e) {
  nlohmann::ordered_json j;
  j["degree"] = e.degree();
  j["basis"] = std::string(1, basis_letter(e.basis()));
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [index, c] : e.terms())
    j["terms"].push_back({{"index", index}, {"coeff", integer_json(c)}});
  return j;
}

nlohmann::ordered_json to_json(const SchurQExpansion& x) {
  nlohmann::ordered_json j;
  j["degree"] = x.degree();
  j["basis"] = "Q";
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [l, c] : x.terms()) j["terms"].push_back({{"index", l.parts()}, {"coeff", to_string(c)}});
  return j;
}

nlohmann::ordered_json to_json(const NotInSpan& r) {
  nlohmann::ordered_json j;
  j["degree"] = r.degree;
  j["not_in_span"] = true;
  j["witness"] = r.witness.elements();
  j["expected"] = to_string(r.expected);
  j["achieved"] = to_string(r.achieved);
  return j;
}

nlohmann::ordered_json to_json(const ConjectureReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["symmetric"] = r.symmetric;
  j["q_positive"] = r.q_positive;
  j["expansion"] = std::visit([](const auto& v) { return to_json(v); }, r.expansion);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

QsymExpr qsym_from_json(const nlohmann::json& j) {
  const Basis b = parse_basis(j.at("basis").get<std::string>());
  QsymExpr e(b, j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) e.add(t.at("index").get<std::vector<int>>(), integer_from_json(t.at("coeff")));
  return e;
}

SchurQExpansion schurq_from_json(const nlohmann::json& j) {
  if (j.at("basis").get<std::string>() != "Q") throw std::invalid_argument("expected basis Q");
  SchurQExpansion x(j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    const auto& c = t.at("coeff");
    const Rational r = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<std::int64_t>());
    x.add(StrictPartition(t.at("index").get<std::vector<int>>()), r);
  }
  return x;
}

}  // namespace peakfn
