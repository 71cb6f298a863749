#include "peakfn/cli.hpp"
#include "peakfn/text.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace peakfn;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  explicit TempDir(const std::string& tag)
      : path_(fs::temp_directory_path() / ("peakfn_test_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

std::size_t file_count(const fs::path& dir) {
  if (!fs::exists(dir)) return 0;
  return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
}

}  // namespace

TEST(Cli, ComputeGoldens) {
  EXPECT_EQ(run({"rn", "4", "--patterns", "1234", "--basis", "Q"}).out, "7*Q(4) + 8*Q(3,1)\n");
  EXPECT_EQ(run({"peaks", "316245"}).out, "Des={1,3} Peak={3}\n");
  EXPECT_EQ(run({"rn", "2", "--patterns", "132", "--basis", "Q"}).out, "2*Q(2)\n");
  EXPECT_EQ(run({"rn", "3", "--patterns", "132"}).out, "4*K{} + K{2}\n");
  EXPECT_EQ(run({"rn", "3", "--patterns", "132", "--basis", "F"}).out,
            "8*F(1,1,1) + 12*F(1,2) + 12*F(2,1) + 8*F(3)\n");
  EXPECT_EQ(run({"--format", "latex", "rn", "4", "--patterns", "1234", "--basis", "Q"}).out,
            "7Q_{(4)}+8Q_{(3,1)}\n");
  EXPECT_EQ(run({"schurq", "(3,2,1)"}).out, "K{2,4} + K{3,5}\n");
  EXPECT_EQ(run({"phi", "4612537"}).out, "1,2,4,5,7/3,6\n");
  EXPECT_EQ(run({"phi-preimage", "1,2,3/4"}).out, "1243\n1342\n2143\n2341\n3142\n");
}

TEST(Cli, InsertGoldens) {
  EXPECT_EQ(run({"insert", "--rsk", "4612537"}).out, "P=1,2,3,7/4,5/6\nQ=1,2,5,7/3,4/6\n");
  EXPECT_EQ(run({"insert", "--sw", "4612537"}).out, "R=1,2,3,7/4,5/6\nS=1,2,3',7/4,5/6\n");
  EXPECT_EQ(run({"insert", "--rsk", "--trace", "21"}).out,
            "place 2 @(1,1)\nrow-bump 2←1 @(1,1)\nplace 2 @(2,1)\nP=1/2\nQ=1/2\n");
  EXPECT_EQ(run({"insert", "21"}).code, exit_usage);
}

TEST(Cli, SearchGoldens) {
  EXPECT_EQ(run({"search", "asymmetry", "--patterns", "132", "--max-n", "8"}).out, "n=5\n");
  EXPECT_EQ(run({"search", "asymmetry", "--patterns", "{}", "--max-n", "6"}).out, "none\n");
  EXPECT_EQ(run({"peak-equiv", "--a", "213,231", "--b", "213,132", "--max-n", "7"}).out, "true\n");
  const Outcome conj = run({"conjecture", "--iota", "5", "--max-n", "9"});
  EXPECT_EQ(conj.code, exit_ok);
  std::istringstream lines(conj.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find("symmetric=true q_positive=true"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 9);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"rn", "4", "--patterns", "1234"}).code, exit_ok);
  EXPECT_EQ(run({"verify", "identities", "--max-n", "4"}).code, exit_ok);
  const Outcome bad = run({"verify", "appendix", "--max-n", "3"});
  EXPECT_EQ(bad.code, exit_verify_failed);
  EXPECT_NE(bad.out.find("FAIL 12345 n=3"), std::string::npos);
  EXPECT_EQ(run({}).code, exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(run({"--format", "yaml", "peaks", "12"}).code, exit_usage);
  EXPECT_EQ(run({"peaks", "1123"}).code, exit_usage);
  EXPECT_EQ(run({"rn", "3", "--patterns", "1x"}).code, exit_usage);
  EXPECT_EQ(run({"rn", "3", "--basis", "Z"}).code, exit_usage);
  EXPECT_EQ(run({"verify", "table9", "--max-n", "3"}).code, exit_usage);
  EXPECT_EQ(run({"schurq", "(2,2)"}).code, exit_usage);
  const Outcome miss = run({"rn", "5", "--patterns", "132", "--basis", "Q"});
  EXPECT_EQ(miss.code, exit_not_in_span);
  EXPECT_EQ(miss.out, "not in span: peak set {2,4} expects 2, best combination gives 3\n");
  EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST(Cli, JsonRoundTrip) {
  const Outcome k = run({"--format", "json", "rn", "6", "--patterns", "1234,1243,2413,3142,3412,4123"});
  ASSERT_EQ(k.code, exit_ok);
  const QsymExpr e = qsym_from_json(nlohmann::json::parse(k.out));
  EXPECT_EQ(format_text(e), run({"rn", "6", "--patterns", "1234,1243,2413,3142,3412,4123"}).out.substr(
                                0, format_text(e).size()));
  const Outcome q = run({"--format", "json", "rn", "6", "--patterns", "1234,1243,2413,3142,3412,4123", "--basis", "Q"});
  EXPECT_EQ(format_text(schurq_from_json(nlohmann::json::parse(q.out))),
            "10*Q(6) + 12*Q(5,1) + 8*Q(4,2) - Q(3,2,1)");
  for (const char* basis : {"K", "F", "M"}) {
    const Outcome r = run({"--format", "json", "rn", "5", "--patterns", "321", "--basis", basis});
    const QsymExpr x = qsym_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(to_json(x).dump(2) + "\n", r.out);
  }
  const Outcome c = run({"--format", "json", "conjecture", "--iota", "4", "--max-n", "5"});
  const auto reports = nlohmann::json::parse(c.out);
  ASSERT_EQ(reports.size(), 5u);
  EXPECT_EQ(format_text(schurq_from_json(reports[3]["expansion"])), "7*Q(4) + 8*Q(3,1)");
}

TEST(Cli, CacheHitsAreByteIdentical) {
  TempDir dir("cache");
  const std::vector<std::string> args = {"--cache-dir", dir.str(), "rn", "7", "--patterns", "1234", "--basis", "Q"};
  const Outcome uncached = run({"rn", "7", "--patterns", "1234", "--basis", "Q"});
  const Outcome cold = run(args);
  EXPECT_EQ(file_count(dir.path()), 1u);
  const Outcome warm = run(args);
  EXPECT_EQ(cold.out, uncached.out);
  EXPECT_EQ(warm.out, cold.out);
  const std::vector<std::string> verify = {"--cache-dir", dir.str(), "verify", "table1", "--max-n", "5"};
  const Outcome v1 = run(verify);
  const Outcome v2 = run(verify);
  EXPECT_EQ(v1.code, exit_ok);
  EXPECT_EQ(v1.out, v2.out);
  EXPECT_EQ(v1.out, run({"verify", "table1", "--max-n", "5"}).out);
}

TEST(Cli, CorruptCacheIsRecomputed) {
  TempDir dir("corrupt");
  const std::vector<std::string> args = {"--cache-dir", dir.str(), "rn", "6", "--patterns", "321"};
  const Outcome cold = run(args);
  ASSERT_EQ(file_count(dir.path()), 1u);
  const fs::path entry = fs::directory_iterator(dir.path())->path();
  auto j = nlohmann::json::parse(std::ifstream(entry));
  // Move one permutation between peak sets; "count" stays consistent.
  j["histogram"][0][1] = j["histogram"][0][1].get<int>() + 1;
  j["histogram"][1][1] = j["histogram"][1][1].get<int>() - 1;
  std::ofstream(entry) << j.dump();
  EXPECT_EQ(run(args).out, cold.out);
  std::ofstream(entry) << "{\"degree\": 6, \"patt";
  EXPECT_EQ(run(args).out, cold.out);
  std::ofstream(entry) << "{\"degree\": 6, \"patterns\": \"321\", \"count\": 1, \"histogram\": [[0, 1]]}";
  EXPECT_EQ(run(args).out, cold.out);
}

TEST(Cli, FlagsWinOverEnvironment) {
  TempDir env_dir("env");
  TempDir flag_dir("flag");
  ::setenv("PEAKFN_CACHE_DIR", env_dir.str().c_str(), 1);
  run({"rn", "5", "--patterns", "123"});
  EXPECT_EQ(file_count(env_dir.path()), 1u);
  run({"--cache-dir", flag_dir.str(), "rn", "5", "--patterns", "132"});
  EXPECT_EQ(file_count(env_dir.path()), 1u);
  EXPECT_EQ(file_count(flag_dir.path()), 1u);
  ::unsetenv("PEAKFN_CACHE_DIR");

  ::setenv("PEAKFN_JOBS", "0", 1);
  EXPECT_EQ(run({"rn", "3"}).code, exit_usage);
  EXPECT_EQ(run({"--jobs", "2", "rn", "3"}).code, exit_ok);
  ::setenv("PEAKFN_JOBS", "abc", 1);
  EXPECT_EQ(run({"rn", "3"}).code, exit_usage);
  ::setenv("PEAKFN_JOBS", "3", 1);
  EXPECT_EQ(run({"rn", "3"}).out, "4*K{} + 2*K{2}\n");
  EXPECT_EQ(run({"--jobs", "0", "rn", "3"}).code, exit_usage);
  ::unsetenv("PEAKFN_JOBS");
}
