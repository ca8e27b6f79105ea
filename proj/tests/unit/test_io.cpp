#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "test_util.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/io.hpp"
#include "wavelab/models.hpp"

namespace wavelab::io {
namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("wavelab_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-300), "-2.5e-300");
  for (double v : {std::acos(-1.0), 1.0 / 3.0, 6.02214076e23, 5e-324}) {
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
}

TEST(Linspace, Endpoints) {
  EXPECT_EQ(linspace(0.0, 1.0, 5), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(linspace(2.0, 3.0, 1), (std::vector<double>{2.0}));
}

TEST(Snapshot, RoundTrip1D) {
  const Grid1D g(10.0, 16);
  const Field1D f = Field1D::sample(g, [](double x) { return std::sin(x) / 3.0; });
  std::stringstream ss;
  write_snapshot(ss, f, 0.25, "abc");
  const auto lines = lines_of(ss.str());
  ASSERT_EQ(lines.size(), 2u);
  const auto header = nlohmann::json::parse(lines[0]);
  EXPECT_EQ(header["format"], "wave_lab.snapshot.v1");
  EXPECT_EQ(header["kind"], "field1d");
  EXPECT_EQ(header["t"], 0.25);
  const auto s = read_snapshot(ss);
  EXPECT_FALSE(s.is_2d());
  EXPECT_EQ(s.config_hash, "abc");
  const Field1D back = s.field1d();
  EXPECT_TRUE(back.grid() == g);
  EXPECT_EQ(max_abs_difference(back.values(), f.values()), 0.0);
  EXPECT_THROW((void)s.field2d(), IoError);
}

TEST(Snapshot, RoundTrip2D) {
  const Grid2D g{Grid1D(6.0, 8), Grid1D(4.0, 8)};
  const Field2D f = Field2D::sample(g, [](double x, double y) { return std::exp(-x * x) * std::cos(y) / 7.0; });
  std::stringstream ss;
  write_snapshot(ss, f, 1.5, "h");
  EXPECT_EQ(lines_of(ss.str()).size(), 9u);
  const auto s = read_snapshot(ss);
  ASSERT_TRUE(s.is_2d());
  const Field2D back = s.field2d();
  EXPECT_TRUE(back.grid() == g);
  EXPECT_EQ(max_abs_difference(back.values(), f.values()), 0.0);
}

TEST(Snapshot, MalformedInput) {
  std::stringstream empty;
  EXPECT_THROW((void)read_snapshot(empty), IoError);
  std::stringstream truncated(
      R"({"format":"wave_lab.snapshot.v1","kind":"field1d","t":0,"grid":{"x":{"length":1,"count":8}},"config_hash":""})"
      "\n[1,2,3]\n");
  EXPECT_THROW((void)read_snapshot(truncated), IoError);
  EXPECT_THROW((void)read_snapshot(std::filesystem::path("/nonexistent/snap.ndjson")), IoError);
}

TEST(Trajectory, ManifestAndSnapshots) {
  const Grid1D g(10.0, 8);
  Trajectory<Field1D> tr;
  tr.times = {0.0, 0.5};
  tr.states = {Field1D::zeros(g), Field1D::sample(g, [](double x) { return x; })};
  tr.warnings = {"note"};
  const auto dir = scratch_dir("traj");
  write_trajectory(dir, tr, ManifestInfo{"bbm", "feed", R"({"alpha":1})", tr.warnings});
  std::ifstream mf(dir / "manifest.json");
  const auto m = nlohmann::json::parse(mf);
  EXPECT_EQ(m["model"], "bbm");
  EXPECT_EQ(m["config_hash"], "feed");
  EXPECT_EQ(m["times"], nlohmann::json({0.0, 0.5}));
  ASSERT_EQ(m["files"].size(), 2u);
  EXPECT_EQ(m["params"]["alpha"], 1);
  EXPECT_EQ(m["warnings"][0], "note");
  const auto s = read_snapshot(dir / m["files"][1].get<std::string>());
  EXPECT_EQ(s.t, 0.5);
  EXPECT_EQ(max_abs_difference(s.field1d().values(), tr.states[1].values()), 0.0);
  std::filesystem::remove_all(dir);
}

TEST(ReportCsv, HeaderAndRows) {
  harness::ConvergenceReport rep;
  rep.grid = Grid2D{Grid1D(1.0, 8), Grid1D(2.0, 8)};
  rep.times = {0.0};
  rep.y_slices = {-1.0, 0.0};
  rep.zero_slices = {1};
  rep.rows = {{harness::ReportRow{0.0, -1.0, 0.5, 1.0, 0.25, {}, 0.125}, harness::ReportRow{0.0, 0.0, 1, 2, 3, {}, 4}}};
  std::stringstream ss;
  write_report_csv(ss, rep, "0123456789abcdef");
  const auto lines = lines_of(ss.str());
  ASSERT_EQ(lines.size(), 4u);
  ASSERT_EQ(lines[0].rfind("# ", 0), 0u);
  const auto meta = nlohmann::json::parse(lines[0].substr(2));
  EXPECT_EQ(meta["k"], 1);
  EXPECT_EQ(meta["config_hash"], "0123456789abcdef");
  EXPECT_EQ(meta["y0_compared_against_both"], nlohmann::json({0.0}));
  EXPECT_EQ(lines[1], kReportColumns);
  EXPECT_EQ(lines[2], "0,-1,0.5,1,0.25,0,0,0,0,0,0.125");
}

TEST(DispersionCsv, ValuesAndRangeCheck) {
  DispersionRange r{1.0, 2.0, 2, 0.0, 1.0, 2};
  std::stringstream ss;
  write_dispersion_csv(ss, r, "h");
  const auto lines = lines_of(ss.str());
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[1], "xi,mu,omega1,omega2_plus,omega2_minus,corr_err");
  EXPECT_EQ(lines[2], "1,0,0.5,0.5,0.5,0");
  EXPECT_EQ(lines[3], "1,1,0.5,1,0," + format_double(kp_correction_error(1.0, 1.0)));
  std::stringstream bad;
  EXPECT_THROW(write_dispersion_csv(bad, DispersionRange{-1.0, 1.0, 3, 0.0, 1.0, 2}, "h"), ConfigInvalid);
  EXPECT_THROW(write_dispersion_csv(bad, DispersionRange{-1.0, 1.0, 2, 0.0, 1.0, 2}, "h"), ConfigInvalid);
}

}  // namespace
}  // namespace wavelab::io
