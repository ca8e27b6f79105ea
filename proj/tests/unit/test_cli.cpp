// End-to-end checks of the wave_lab executable: exit codes, output files and
// the machine-readable error record.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wavelab/io.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wavelab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + WAVE_LAB_EXE + " " + args + " >" + (dir_ / "stdout").string() + " 2>" +
                            (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return Result{WEXITSTATUS(status), slurp(dir_ / "stdout"), slurp(dir_ / "stderr")};
  }

  fs::path dir_;
};

TEST_F(Cli, DispersionWritesCsv) {
  const auto cfg = write("d.conf", "[dispersion]\nxi_count = 3\nmu_count = 2\n");
  const auto r = run("dispersion --config " + cfg.string() + " --out " + (dir_ / "o").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = slurp(dir_ / "o" / "dispersion.csv");
  EXPECT_NE(csv.find("xi,mu,omega1,omega2_plus,omega2_minus,corr_err"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2 + 6);
}

TEST_F(Cli, EnvironmentOverridesOut) {
  const auto r = run("dispersion --out " + (dir_ / "flag").string(), "WAVE_LAB_OUT=" + (dir_ / "env").string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "env" / "dispersion.csv"));
  EXPECT_FALSE(fs::exists(dir_ / "flag"));
}

TEST_F(Cli, SimulateBbmWritesTrajectory) {
  const auto cfg = write("s.conf",
                         "model = bbm\n[grid]\nlx = 64\nnx = 128\n[time]\ndt = 0.05\nt_end = 0.5\ncapture_stride = 5\n"
                         "scheme = rk4\n[data]\npreset = solitary\n");
  const auto r = run("simulate --jobs 2 --config " + cfg.string() + " --out " + (dir_ / "o").string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = nlohmann::json::parse(slurp(dir_ / "o" / "trajectory" / "manifest.json"));
  EXPECT_EQ(m["model"], "bbm");
  EXPECT_EQ(m["times"].size(), 3u);
  const auto snap = wavelab::io::read_snapshot(dir_ / "o" / "trajectory" / m["files"][2].get<std::string>());
  EXPECT_EQ(snap.t, 0.5);
  EXPECT_EQ(snap.config_hash, m["config_hash"]);
}

TEST_F(Cli, ConfigErrorExitsWithTwo) {
  const auto cfg = write("bad.conf", "params.gamma = 3\n");
  const auto r = run("dispersion --config " + cfg.string() + " --out " + (dir_ / "o").string());
  EXPECT_EQ(r.code, 2);
  const auto rec = nlohmann::json::parse(r.err.substr(0, r.err.find('\n')));
  EXPECT_EQ(rec["error"], "ConfigInvalid");
  EXPECT_EQ(rec["field"], "params.gamma");
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("simulate --config " + (dir_ / "missing.conf").string()).code, 2);
}

TEST_F(Cli, NumericalErrorExitsWithThree) {
  // A BBM-KP run from a snapshot whose slices have nonzero x-mean.
  std::ofstream snap(dir_ / "mean.ndjson");
  snap << R"({"format":"wave_lab.snapshot.v1","kind":"field2d","t":0,"grid":{"x":{"length":8,"count":8},)"
       << R"("y":{"length":8,"count":8}},"config_hash":""})" << '\n';
  for (int j = 0; j < 8; ++j) snap << "[1,1,1,1,1,1,1,1]\n";
  snap.close();
  const auto cfg = write("m.conf", "[grid]\nlx = 8\nnx = 8\nly = 8\nny = 8\n[time]\ndt = 0.1\nt_end = 0.1\n"
                                   "[data]\npreset = file\nfile = " + (dir_ / "mean.ndjson").string() + "\n");
  const auto r = run("simulate --config " + cfg.string() + " --out " + (dir_ / "o").string());
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_NE(r.err.find("NonzeroMean"), std::string::npos);
}

TEST_F(Cli, VerifyFastPassesAndTamperFailsWithFour) {
  const auto ok = run("verify --suite fast --out " + (dir_ / "o").string());
  ASSERT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(slurp(dir_ / "o" / "verify_fast.txt"), ok.out);
  const auto bad = run("verify --tamper-dealias --out " + (dir_ / "t").string());
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.out.find("FAIL F04"), std::string::npos);
}

}  // namespace
