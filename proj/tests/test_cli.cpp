#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using burnside::Json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "burnside");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = burnside::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("burnside_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST(Cli, KernelJsonHasSchemaAndExactEntries) {
  const CliRun r = run({"kernel", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], burnside::kSchema);
  EXPECT_EQ(j["kind"], "kernel");
  EXPECT_EQ(j["matrix"][0][0], "3/8");
  EXPECT_EQ(j["stationary"][1], "1/6");
  EXPECT_EQ(j["states"][1], "10");
}

TEST(Cli, SpectrumBinaryAndTernary) {
  const Json a = Json::parse(run({"spectrum", "--n", "4"}).out);
  EXPECT_EQ(a["eigenvalues"][2]["eigenvalue"], "9/64");
  const Json b = Json::parse(run({"spectrum", "--n", "4", "--k", "3"}).out);
  EXPECT_TRUE(b.contains("caveat"));
  bool found = false;
  for (const auto& e : b["eigenvalues"])
    if (e["rational"] == "1/18") found = e["exact_multiplicity"] == "2";
  EXPECT_TRUE(found);
}

TEST(Cli, BasisAndStats) {
  const Json b = Json::parse(run({"basis", "--n", "3"}).out);
  EXPECT_EQ(b["vectors"].size(), 8U);
  EXPECT_EQ(run({"basis", "--n", "8"}).code, 2);
  const Json s = Json::parse(run({"stats", "--n", "2", "--start", "01", "--steps", "1"}).out);
  EXPECT_EQ(s["moments"][0]["alternation_mean"], "1/2");
  EXPECT_EQ(s["stationary"]["alternation_variance"], "2/9");
}

TEST(Cli, AvgChi2AndCutoff) {
  const Json a = Json::parse(run({"avg-chi2", "--n", "4", "--steps", "1"}).out);
  EXPECT_EQ(a["points"][0]["avg_chi2"], "1617/4096");
  EXPECT_EQ(run({"avg-chi2", "--n", "4", "--steps", "0"}).code, 2);
  const Json c = Json::parse(run({"cutoff-scan", "--ns", "100000", "--factors", "0.9,1.1"}).out);
  EXPECT_GT(c["rows"][0]["log_avg_chi2"].get<double>(), 0);
  EXPECT_LT(c["rows"][1]["log_avg_chi2"].get<double>(), 0);
  const Json p = Json::parse(run({"cutoff-scan", "--ns", "100000", "--factors", "1.0", "--plain-log"}).out);
  const Json q = Json::parse(run({"cutoff-scan", "--ns", "100000", "--factors", "1.0"}).out);
  EXPECT_GT(p["rows"][0]["l"].get<unsigned long>(), q["rows"][0]["l"].get<unsigned long>());
}

TEST_F(TempDir, Chi2CsvWithManifest) {
  const std::string out = path("c.csv");
  const CliRun r = run({"chi2", "--n", "2", "--start", "01", "--steps", "0..2", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("points=3"), std::string::npos);
  const std::string csv = slurp(out);
  EXPECT_EQ(csv.rfind("# schema=burnside/1", 0), 0U);
  EXPECT_NE(csv.find("\n1,1/8\n"), std::string::npos);
  EXPECT_NE(csv.find("\n0,5/1\n"), std::string::npos);
  const Json m = Json::parse(slurp(out + ".manifest.json"));
  EXPECT_EQ(m["command"], "chi2");
  EXPECT_EQ(m["params"]["start"], "01");
  EXPECT_EQ(m["version"], burnside::kToolVersion);
}

TEST_F(TempDir, TvFromAverage) {
  const CliRun r = run({"tv", "--n", "2", "--start", "avg", "--steps", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("start=avg"), std::string::npos);
}

TEST_F(TempDir, SampleReplaysFromManifest) {
  const std::string a = path("a.json"), b = path("b.json");
  ASSERT_EQ(run({"sample", "--n", "12", "--start", "half", "--steps", "40", "--seed", "77", "--out", a}).code, 0);
  const Json m = Json::parse(slurp(a + ".manifest.json"));
  ASSERT_EQ(m["seed"], 77);
  const auto& p = m["params"];
  ASSERT_EQ(run({"sample", "--n", p["n"].get<std::string>(), "--k", p["k"].get<std::string>(), "--start",
                 p["start"].get<std::string>(), "--steps", p["steps"].get<std::string>(), "--seed",
                 std::to_string(m["seed"].get<std::uint64_t>()), "--out", b})
                .code,
            0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(Json::parse(slurp(a))["path"].size(), 41U);
}

TEST_F(TempDir, HistogramCsv) {
  const std::string out = path("h.csv");
  ASSERT_EQ(run({"hist", "--n", "50", "--samples", "2000", "--bins", "10", "--seed", "3", "--out", out}).code, 0);
  const std::string csv = slurp(out);
  EXPECT_NE(csv.find("lo,hi,count"), std::string::npos);
}

TEST(Cli, VerifyPassesAndReportsText) {
  const CliRun r = run({"verify", "--suite", "pplus", "--max-n", "4", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS pplus_expansion [n=4;]"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"kernel", "--n", "13"}).code, 3);
  EXPECT_EQ(run({"kernel", "--n", "8", "--k", "3"}).code, 3);
  EXPECT_EQ(run({"chi2", "--n", "3", "--start", "0120"}).code, 2);
  EXPECT_EQ(run({"chi2", "--n", "3", "--start", "01"}).code, 2);
  EXPECT_EQ(run({"chi2", "--n", "3", "--steps", "x"}).code, 2);
  EXPECT_EQ(run({"kernel", "--k", "11"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"kernel", "--n", "2", "--out", "/nonexistent-dir/x.json"}).code, 4);
  const CliRun h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("cutoff-scan"), std::string::npos);
}

TEST(Cli, CapOverrideThroughEnvironment) {
  setenv("BURNSIDE_MAX_STATES_K2", "8", 1);
  EXPECT_EQ(run({"kernel", "--n", "4"}).code, 3);
  unsetenv("BURNSIDE_MAX_STATES_K2");
  EXPECT_EQ(run({"kernel", "--n", "4"}).code, 0);
}

TEST(Cli, LargeNReachesCapOrClosedForm) {
  EXPECT_EQ(run({"chi2", "--n", "100", "--start", "zeros", "--steps", "3"}).code, 3);
  EXPECT_EQ(run({"kernel", "--n", "100"}).code, 2);
  EXPECT_EQ(run({"avg-chi2", "--n", "1000000", "--steps", "20", "--mode", "log"}).code, 0);
  EXPECT_EQ(run({"sample", "--n", "100", "--steps", "2", "--seed", "1"}).code, 0);
}

TEST(Cli, BinaryEndToEnd) {
  const char* exe = std::getenv("BURNSIDE_CLI");
  if (!exe) GTEST_SKIP() << "BURNSIDE_CLI not set";
  const std::string q = std::string("'") + exe + "'";
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status(q + " kernel --n 2"), 0);
  EXPECT_EQ(status(q + " kernel --n 13"), 3);
  EXPECT_EQ(status(q + " chi2 --start bogus"), 2);
  EXPECT_EQ(status(q + " kernel --n 2 --out /nonexistent-dir/x"), 4);
  FILE* p = popen((q + " tv --n 2 --start 01 --steps 1 --format csv").c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string text;
  char buf[256];
  while (std::fgets(buf, sizeof buf, p)) text += buf;
  EXPECT_EQ(pclose(p), 0);
  EXPECT_NE(text.find("1,1/6"), std::string::npos);
}
