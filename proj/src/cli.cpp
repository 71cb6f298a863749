#include "peakfn/cli.hpp"

#include "peakfn/cache.hpp"
#include "peakfn/insertion.hpp"
#include "peakfn/text.hpp"
#include "peakfn/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

namespace peakfn {

namespace {

struct Config {
  std::string format = "text";
  std::string cache_dir;
  int jobs = 1;

  bool json() const { return format == "json"; }
  bool latex() const { return format == "latex"; }

  HistogramSource source() const {
    if (cache_dir.empty()) return enumerating_source(jobs);
    return HistogramCache(cache_dir, jobs).source();
  }
};

void emit(std::ostream& out, const Config& cfg, const QsymExpr& e) {
  if (cfg.json())
    out << to_json(e).dump(2) << '\n';
  else
    out << (cfg.latex() ? format_latex(e) : format_text(e)) << '\n';
}

int emit(std::ostream& out, const Config& cfg, const ExpandResult& r) {
  if (const auto* x = std::get_if<SchurQExpansion>(&r)) {
    if (cfg.json())
      out << to_json(*x).dump(2) << '\n';
    else
      out << (cfg.latex() ? format_latex(*x) : format_text(*x)) << '\n';
    return exit_ok;
  }
  const auto& miss = std::get<NotInSpan>(r);
  if (cfg.json())
    out << to_json(miss).dump(2) << '\n';
  else
    out << format_text(miss) << '\n';
  return exit_not_in_span;
}

int cmd_rn(std::ostream& out, const Config& cfg, int n, const std::string& patterns,
           const std::string& basis) {
  if (n < 0) throw std::invalid_argument("N must be non-negative");
  const QsymExpr r = r_n(cfg.source(), parse_pattern_set(patterns), n);
  if (basis == "Q") return emit(out, cfg, expand_in_schurq(r));
  switch (parse_basis(basis)) {
    case Basis::K:
      emit(out, cfg, r);
      break;
    case Basis::F:
      emit(out, cfg, k_to_f(r));
      break;
    case Basis::M:
      emit(out, cfg, to_m(r));
      break;
  }
  return exit_ok;
}

int cmd_peaks(std::ostream& out, const Config& cfg, const std::string& perm) {
  const Permutation p = parse_permutation(perm);
  const IndexSet des = descent_set(p);
  const IndexSet peak = peak_set(p);
  if (cfg.json()) {
    nlohmann::ordered_json j;
    j["permutation"] = format_permutation(p);
    j["des"] = des.elements();
    j["peak"] = peak.elements();
    out << j.dump(2) << '\n';
  } else {
    out << "Des=" << format_index_set(des) << " Peak=" << format_index_set(peak) << '\n';
  }
  return exit_ok;
}

int cmd_insert(std::ostream& out, const Config& cfg, bool use_rsk, const std::string& perm,
               bool want_trace) {
  const Permutation p = parse_permutation(perm);
  Trace trace;
  std::string ins;
  std::string rec;
  if (use_rsk) {
    const RskResult r = rsk(p, &trace);
    ins = format_tableau(r.insertion);
    rec = format_tableau(r.recording);
  } else {
    const SwResult r = sagan_worley(p, &trace);
    ins = format_tableau(r.insertion);
    rec = format_tableau(r.recording);
  }
  if (cfg.json()) {
    nlohmann::ordered_json j;
    j["insertion"] = ins;
    j["recording"] = rec;
    if (want_trace) {
      j["trace"] = nlohmann::ordered_json::array();
      for (const auto& e : trace) j["trace"].push_back(format_event(e));
    }
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  if (want_trace)
    for (const auto& e : trace) out << format_event(e) << '\n';
  out << (use_rsk ? "P=" : "R=") << ins << '\n' << (use_rsk ? "Q=" : "S=") << rec << '\n';
  return exit_ok;
}

int cmd_phi(std::ostream& out, const Config& cfg, const std::string& perm) {
  const std::string t = format_tableau(phi(parse_permutation(perm)));
  if (cfg.json())
    out << nlohmann::ordered_json{{"tableau", t}}.dump(2) << '\n';
  else
    out << t << '\n';
  return exit_ok;
}

int cmd_phi_preimage(std::ostream& out, const Config& cfg, const std::string& tableau) {
  const auto pre = phi_preimage(parse_shifted_tableau(tableau));
  if (cfg.json()) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& p : pre) j.push_back(format_permutation(p));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& p : pre) out << format_permutation(p) << '\n';
  }
  return exit_ok;
}

int cmd_schurq(std::ostream& out, const Config& cfg, const std::string& shape) {
  emit(out, cfg, schur_q(parse_strict_partition(shape)));
  return exit_ok;
}

int cmd_verify(std::ostream& out, const Config& cfg, const std::string& suite, int max_n) {
  const HistogramSource source = cfg.source();
  std::vector<CheckResult> checks;
  if (suite == "table1")
    checks = verify_table1(max_n, source, cfg.jobs);
  else if (suite == "appendix")
    checks = verify_appendix(max_n, source, cfg.jobs);
  else if (suite == "identities")
    checks = verify_identities(max_n, source, cfg.jobs);
  else
    checks = verify_shuffle(max_n, source, cfg.jobs);

  const auto passed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  if (cfg.json()) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed;
    j["total"] = checks.size();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json e{{"check", c.label}, {"pass", c.pass}};
      if (!c.pass) e["detail"] = c.detail;
      j["checks"].push_back(e);
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.label;
      if (!c.pass) out << ": " << c.detail;
      out << '\n';
    }
    out << suite << ": " << passed << "/" << checks.size() << " passed\n";
  }
  return passed == static_cast<std::ptrdiff_t>(checks.size()) ? exit_ok : exit_verify_failed;
}

int cmd_search(std::ostream& out, const Config& cfg, const std::string& patterns, int max_n) {
  const auto n = find_nonsymmetric_witness(parse_pattern_set(patterns), max_n, cfg.source());
  if (cfg.json())
    out << nlohmann::ordered_json{{"witness", n ? nlohmann::ordered_json(*n) : nlohmann::ordered_json()}}.dump(2)
        << '\n';
  else
    out << (n ? "n=" + std::to_string(*n) : std::string("none")) << '\n';
  return exit_ok;
}

int cmd_conjecture(std::ostream& out, const Config& cfg, int k, int max_n) {
  const HistogramSource source = cfg.source();
  auto rows = nlohmann::ordered_json::array();
  for (int n = 1; n <= max_n; ++n) {
    const ConjectureReport r = conjecture_check(k, n, source);
    if (cfg.json()) {
      rows.push_back(to_json(r));
      continue;
    }
    const auto* x = std::get_if<SchurQExpansion>(&r.expansion);
    if (cfg.latex()) {
      out << n << " & $" << (x ? format_latex(*x) : format_text(std::get<NotInSpan>(r.expansion)))
          << "$ \\\\\n";
      continue;
    }
    out << "n=" << n << " symmetric=" << (r.symmetric ? "true" : "false")
        << " q_positive=" << (r.q_positive ? "true" : "false") << ' '
        << (x ? format_text(*x) : format_text(std::get<NotInSpan>(r.expansion))) << '\n';
  }
  if (cfg.json()) out << rows.dump(2) << '\n';
  return exit_ok;
}

int cmd_peak_equiv(std::ostream& out, const Config& cfg, const std::string& a, const std::string& b,
                   int max_n) {
  const PatternSet pa = parse_pattern_set(a);
  const PatternSet pb = parse_pattern_set(b);
  const HistogramSource source = cfg.source();
  std::optional<int> differs;
  for (int n = 1; n <= max_n && !differs; ++n)
    if (source(pa, n) != source(pb, n)) differs = n;
  if (cfg.json()) {
    nlohmann::ordered_json j;
    j["equivalent"] = !differs;
    j["first_difference"] = differs ? nlohmann::ordered_json(*differs) : nlohmann::ordered_json();
    out << j.dump(2) << '\n';
  } else {
    out << (differs ? "false n=" + std::to_string(*differs) : std::string("true")) << '\n';
  }
  return exit_ok;
}

// Env values fill options the command line left unset.
bool apply_environment(Config& cfg, bool have_cache_dir, bool have_jobs, std::ostream& err) {
  if (const char* dir = std::getenv("PEAKFN_CACHE_DIR"); dir && !have_cache_dir) cfg.cache_dir = dir;
  if (const char* jobs = std::getenv("PEAKFN_JOBS"); jobs && !have_jobs) {
    const std::string_view text(jobs);
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
      err << "error: PEAKFN_JOBS must be a positive integer, got '" << text << "'\n";
      return false;
    }
    cfg.jobs = value;
  }
  return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoiding peak functions and Schur Q expansions", "peakfn"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "text, json or latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  auto* cache_opt = app.add_option("--cache-dir", cfg.cache_dir, "histogram cache directory (env PEAKFN_CACHE_DIR)");
  auto* jobs_opt =
      app.add_option("--jobs", cfg.jobs, "worker threads (env PEAKFN_JOBS)")->check(CLI::PositiveNumber);

  int n = 0;
  int max_n = 1;
  int k = 0;
  std::string patterns;
  std::string basis = "K";
  std::string arg;
  std::string other;

  auto* rn = app.add_subcommand("rn", "R_n(P) in the K, F, M or Q basis");
  rn->add_option("N", n, "size")->required();
  rn->add_option("--patterns", patterns, "comma-separated patterns; {} for none");
  rn->add_option("--basis", basis, "K, F, M or Q")->check(CLI::IsMember({"K", "F", "M", "Q"}));

  auto* peaks = app.add_subcommand("peaks", "descent and peak sets of a permutation");
  peaks->add_option("PERM", arg)->required();

  bool use_rsk = false;
  bool use_sw = false;
  bool trace = false;
  auto* insert = app.add_subcommand("insert", "RSK or Sagan-Worley insertion");
  auto* rsk_flag = insert->add_flag("--rsk", use_rsk, "row insertion");
  auto* sw_flag = insert->add_flag("--sw", use_sw, "shifted mixed insertion");
  rsk_flag->excludes(sw_flag);
  insert->add_flag("--trace", trace, "print each bump");
  insert->add_option("PERM", arg)->required();

  auto* phi_cmd = app.add_subcommand("phi", "phi(p) = R(rw(Q(p)))");
  phi_cmd->add_option("PERM", arg)->required();

  auto* pre = app.add_subcommand("phi-preimage", "321-avoiders mapped to a two-row shifted tableau");
  pre->add_option("TABLEAU", arg)->required();

  auto* sq = app.add_subcommand("schurq", "Q_lambda in the K basis");
  sq->add_option("LAMBDA", arg)->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("SUITE", arg)->required()->check(
      CLI::IsMember({"table1", "appendix", "identities", "shuffle"}));
  verify->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "smallest n with R_n(P) not symmetric");
  search->add_option("KIND", arg)->required()->check(CLI::IsMember({"asymmetry"}));
  search->add_option("--patterns", patterns)->required();
  search->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);

  auto* conj = app.add_subcommand("conjecture", "R_n(iota_k) for n = 1..max-n");
  conj->add_option("--iota", k)->required()->check(CLI::Range(2, 64));
  conj->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);

  auto* equiv = app.add_subcommand("peak-equiv", "compare peak-set histograms up to max-n");
  equiv->add_option("--a", patterns)->required();
  equiv->add_option("--b", other)->required();
  equiv->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  if (!apply_environment(cfg, cache_opt->count() > 0, jobs_opt->count() > 0, err)) return exit_usage;

  try {
    if (app.got_subcommand(rn)) return cmd_rn(out, cfg, n, patterns, basis);
    if (app.got_subcommand(peaks)) return cmd_peaks(out, cfg, arg);
    if (app.got_subcommand(insert)) {
      if (!use_rsk && !use_sw) {
        err << "insert: one of --rsk or --sw is required\n";
        return exit_usage;
      }
      return cmd_insert(out, cfg, use_rsk, arg, trace);
    }
    if (app.got_subcommand(phi_cmd)) return cmd_phi(out, cfg, arg);
    if (app.got_subcommand(pre)) return cmd_phi_preimage(out, cfg, arg);
    if (app.got_subcommand(sq)) return cmd_schurq(out, cfg, arg);
    if (app.got_subcommand(verify)) return cmd_verify(out, cfg, arg, max_n);
    if (app.got_subcommand(search)) return cmd_search(out, cfg, patterns, max_n);
    if (app.got_subcommand(conj)) return cmd_conjecture(out, cfg, k, max_n);
    if (app.got_subcommand(equiv)) return cmd_peak_equiv(out, cfg, patterns, other, max_n);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace peakfn
