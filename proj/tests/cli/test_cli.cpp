// Runs the installed-style CLI binary and checks its contract: exit codes,
// schema, determinism and agreement between output formats.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ENTGAP_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string run_stderr(const std::string& args) {
  const std::string cmd = std::string(ENTGAP_CLI) + " " + args + " 2>&1 >/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

nlohmann::json json_of(const std::string& args) {
  const auto r = run(args + " --json");
  EXPECT_EQ(r.code, 0) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, GapHeisenberg) {
  const auto j = json_of("gap --model heisenberg");
  EXPECT_EQ(j["schema"], 1);
  EXPECT_NEAR(j["gap_lower"].get<double>(), 2.0, 1e-6);
  EXPECT_NEAR(j["gap_upper"].get<double>(), 2.0, 1e-6);
  EXPECT_NEAR(j["scaled_gap_lower"].get<double>(), 0.5, 1e-6);
  EXPECT_NEAR(j["scaled_gap_upper"].get<double>(), 0.5, 1e-6);
}

TEST(Cli, GapOnLattice) {
  const auto j = json_of("gap --model heisenberg --lattice ring:6");
  EXPECT_TRUE(j["per_bond"].get<bool>());
  EXPECT_NEAR(j["e_sep_upper"].get<double>(), -1.0, 1e-9);
}

TEST(Cli, Table1) {
  const double gap[] = {2, 1, 0.667, 0.5, 0.4, 0.333};
  const auto j = json_of("table1");
  ASSERT_EQ(j["rows"].size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(j["rows"][i]["gap_per_bond"].get<double>(), gap[i], 1e-3);
}

TEST(Cli, WindowChoi) {
  const auto j = json_of("window --model choi");
  ASSERT_TRUE(j["found"].get<bool>());
  EXPECT_NEAR(j["t_low"].get<double>(), 1.256, 0.01);
  EXPECT_NEAR(j["t_high"].get<double>(), 1.271, 0.01);
}

TEST(Cli, WindowEmptyForTwoQubits) {
  const auto j = json_of("window --model heisenberg");
  EXPECT_FALSE(j["found"].get<bool>());
  EXPECT_TRUE(j["t_low"].is_null());
}

TEST(Cli, TempCsvColumns) {
  const auto r = run("temp --model heisenberg --points 5 --csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "T,U,ppt");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(Cli, XYScanCsvToFile) {
  const auto path = (std::filesystem::temp_directory_path() / "entgap_cli_xy.csv").string();
  const auto r = run("xy-scan --gamma 0:1:0.5 --lambda 0:2:1 --csv --out " + path);
  ASSERT_EQ(r.code, 0);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "gamma,lambda,e_sep,e0,e_max,gap,scaled_gap");
  int lines = 0;
  for (std::string l; std::getline(f, l);) ++lines;
  EXPECT_EQ(lines, 9);
  std::filesystem::remove(path);
}

TEST(Cli, Search2qFields) {
  const auto j = json_of("search-2q --samples 200 --seed 5");
  for (const char* key : {"max_t", "e1", "e2", "basis_hash", "n_skipped_zero_gap"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_LE(j["max_t"].get<double>(), 1.0 / std::log(3.0) + 1e-6);
  EXPECT_EQ(j["eigenbasis_distribution"], "haar");
}

TEST(Cli, ByteIdenticalReruns) {
  for (const char* args : {"gap --model choi --seed 3 --json", "search-2q --samples 150 --seed 9 --csv",
                           "xy-scan --gamma 0:1:0.25 --lambda 0:2:0.5 --csv", "table1 --json"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, GlobalOptionsBeforeOrAfterSubcommand) {
  EXPECT_EQ(run("--json --seed 4 xy-scan --gamma 0:1:0.25 --lambda 0:2:0.25").out,
            run("xy-scan --gamma 0:1:0.25 --lambda 0:2:0.25 --seed 4 --json").out);
}

TEST(Cli, PrettyNumbersAppearInJson) {
  const auto pretty = run("gap --model heisenberg").out;
  const auto j = json_of("gap --model heisenberg");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number_float()) continue;
    std::array<char, 64> buf;
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), it.value().get<double>());
    EXPECT_NE(pretty.find(std::string(buf.data(), end)), std::string::npos) << it.key();
  }
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto path = (std::filesystem::temp_directory_path() / "entgap_cli.cfg").string();
  {
    std::ofstream f(path);
    f << "seed=11\nrestarts=4\noutput=json\n";
  }
  const auto with_cfg = run("--config " + path + " gap --model choi");
  ASSERT_EQ(with_cfg.code, 0);
  EXPECT_EQ(nlohmann::json::parse(with_cfg.out)["schema"], 1);
  const auto explicit_flags = run("gap --model choi --seed 11 --restarts 4 --json");
  EXPECT_EQ(with_cfg.out, explicit_flags.out);
  const auto overridden = run("--config " + path + " gap --model choi --csv");
  EXPECT_EQ(overridden.out.rfind("command,", 0), 0u);
  {
    std::ofstream f(path);
    f << "bogus=1\n";
  }
  EXPECT_EQ(run("--config " + path + " gap --model choi").code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrorsExitTwoAndNameTheFlag) {
  struct Case {
    const char* args;
    const char* flag;
  };
  const Case cases[] = {
      {"gap --model nope", "--model"},
      {"gap --model heisenberg --lattice hexagon:2", "--lattice"},
      {"gap --model heisenberg --restarts 0", "--restarts"},
      {"gap --model heisenberg --sdp-tol -1", "--sdp-tol"},
      {"xy-scan --gamma 0:1", "--gamma"},
      {"xy-scan --lambda 1:0:0.1", "--lambda"},
      {"temp --model heisenberg --t-min 0", "--t-min"},
      {"compare-temps --dims 3,x", "--dims"},
      {"gap", "--model"},
      {"gap --model file:/nonexistent/h.json", "--model"},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(run(c.args).code, 2) << c.args;
    EXPECT_NE(run_stderr(c.args).find(c.flag), std::string::npos) << c.args;
  }
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, NonConvergenceExitsThreeWithPartialResults) {
  const auto r = run("gap --model choi --sdp-tol 1e-300 --json");
  EXPECT_EQ(r.code, 3);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["ppt_converged"].get<bool>());
  EXPECT_LE(j["e_sep_lower"].get<double>(), j["e_sep_upper"].get<double>());
}
