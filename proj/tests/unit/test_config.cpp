#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "wavelab/config.hpp"
#include "wavelab/errors.hpp"

namespace wavelab {
namespace {

std::string invalid_field(const std::string& text) {
  try {
    validate(parse_config_text(text));
  } catch (const ConfigInvalid& e) {
    return e.field();
  }
  return "";
}

TEST(Config, DefaultsAreValid) {
  const ExperimentConfig c;
  EXPECT_NO_THROW(validate(c));
  EXPECT_EQ(c.model, Model::BbmKp);
  EXPECT_EQ(c.nx, 256u);
  EXPECT_EQ(c.ny, 128u);
  EXPECT_EQ(c.scheme, Scheme::IntegratingFactorRk4);
}

TEST(Config, TextWithSectionsAndComments) {
  const auto c = parse_config_text(
      "# comment\n"
      "model = bbm\n"
      "\n"
      "[grid]\n"
      "lx = 128\n"
      "nx = 1024\n"
      "[time]\n"
      "dt = 0.01\n"
      "scheme = rk4\n"
      "[data]\n"
      "preset = solitary\n"
      "solitary.speed = 1.5\n");
  EXPECT_EQ(c.model, Model::Bbm);
  EXPECT_EQ(c.lx, 128.0);
  EXPECT_EQ(c.nx, 1024u);
  EXPECT_EQ(c.time.dt, 0.01);
  EXPECT_EQ(c.scheme, Scheme::Rk4);
  EXPECT_EQ(c.preset, Preset::Solitary);
  EXPECT_NO_THROW(validate(c));
}

TEST(Config, JsonFlattensNestedObjects) {
  const auto c = parse_config_json(R"({"params": {"gamma": -1, "nonlinear": false}, "report": {"k": 2}})");
  EXPECT_EQ(c.gamma, -1);
  EXPECT_FALSE(c.nonlinear);
  EXPECT_EQ(c.k, 2);
}

TEST(Config, UnknownKeysAndBadValuesNameTheField) {
  try {
    (void)parse_config_text("grid.nz = 3\n");
    FAIL();
  } catch (const ConfigInvalid& e) {
    EXPECT_EQ(e.field(), "grid.nz");
  }
  try {
    (void)parse_config_text("time.dt = fast\n");
    FAIL();
  } catch (const ConfigInvalid& e) {
    EXPECT_EQ(e.field(), "time.dt");
  }
  EXPECT_THROW((void)parse_config_text("just words\n"), ConfigInvalid);
  EXPECT_THROW((void)parse_config_json("[1, 2]"), ConfigInvalid);
  EXPECT_THROW((void)parse_config_json("{"), ConfigInvalid);
}

TEST(Config, ValidationFields) {
  EXPECT_EQ(invalid_field("params.gamma = 0\n"), "params.gamma");
  EXPECT_EQ(invalid_field("grid.nx = 7\n"), "grid.nx");
  EXPECT_EQ(invalid_field("grid.ny = 4\n"), "grid.ny");
  EXPECT_EQ(invalid_field("time.dt = 2\n"), "time.t_end");
  EXPECT_EQ(invalid_field("time.capture_stride = 0\n"), "time.capture_stride");
  EXPECT_EQ(invalid_field("report.k = -1\n"), "report.k");
  EXPECT_EQ(invalid_field("data.preset = solitary\n"), "data.preset");
  EXPECT_EQ(invalid_field("model = bbm\ndata.preset = solitary\ndata.solitary.speed = 0.9\n"), "data.solitary.speed");
  EXPECT_EQ(invalid_field("data.preset = file\n"), "data.file");
  EXPECT_EQ(invalid_field("dispersion.xi_min = -1\n"), "dispersion.xi_min");
  EXPECT_EQ(invalid_field("data.bump.width = 0\n"), "data.bump.width");
}

TEST(Config, CanonicalTextAndHash) {
  const ExperimentConfig c;
  const std::string text = canonical_text(c);
  EXPECT_EQ(canonical_text(parse_config_text(text)), text);
  EXPECT_EQ(config_hash(c).size(), 16u);
  ExperimentConfig moved = c;
  moved.out_dir = "/elsewhere";
  EXPECT_EQ(config_hash(moved), config_hash(c));
  ExperimentConfig changed = c;
  changed.time.dt = 2.5e-3;
  EXPECT_NE(config_hash(changed), config_hash(c));
  const auto keys = config_keys();
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_NE(std::find(keys.begin(), keys.end(), "output.dir"), keys.end());
}

TEST(Config, LoadChoosesParserByContent) {
  const auto dir = std::filesystem::temp_directory_path() / "wavelab_test_cfg";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.conf") << "grid.nx = 64\n";
    std::ofstream(dir / "b.json") << R"({"grid": {"nx": 32}})";
    std::ofstream(dir / "c.conf") << "  {\"grid\": {\"nx\": 16}}";
  }
  EXPECT_EQ(load_config(dir / "a.conf").nx, 64u);
  EXPECT_EQ(load_config(dir / "b.json").nx, 32u);
  EXPECT_EQ(load_config(dir / "c.conf").nx, 16u);
  EXPECT_THROW((void)load_config(dir / "missing.conf"), ConfigInvalid);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace wavelab
