// wave_lab command-line driver.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavelab/config.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/experiment.hpp"
#include "wavelab/kernels.hpp"
#include "wavelab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerify = 4;

struct Common {
  std::string config;
  std::string out;
  int jobs = 0;
  std::optional<std::uint64_t> seed;
};

void report_error(std::string_view kind, const std::string& message, const std::string& field = {}) {
  nlohmann::ordered_json j = {{"error", kind}, {"message", message}};
  if (!field.empty()) j["field"] = field;
  std::cerr << j.dump() << "\n";
}

wavelab::ExperimentConfig load(const Common& c) {
  wavelab::ExperimentConfig cfg = c.config.empty() ? wavelab::ExperimentConfig{} : wavelab::load_config(c.config);
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

/// WAVE_LAB_OUT beats --out, which beats output.dir.
std::filesystem::path output_dir(const Common& c, const wavelab::ExperimentConfig& cfg) {
  if (const char* env = std::getenv("WAVE_LAB_OUT"); env && *env) return env;
  if (!c.out.empty()) return c.out;
  return cfg.out_dir;
}

void print_outcome(const wavelab::RunOutcome& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& f : r.files) std::cout << f.string() << "\n";
}

int run_verify(const Common& c, const std::string& suite, bool tamper) {
  const auto cfg = load(c);
  wavelab::verify::VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.progress = &std::cerr;
  opt.tamper_dealias = tamper;
  const auto results =
      suite == "full" ? wavelab::verify::run_full_suite(opt) : wavelab::verify::run_fast_suite(opt);
  const std::string text = wavelab::verify::summary_text(results);
  std::cout << text;
  const auto dir = output_dir(c, cfg);
  std::filesystem::create_directories(dir);
  const auto path = dir / ("verify_" + suite + ".txt");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw wavelab::IoError("cannot write " + path.string());
  f << text;
  return wavelab::verify::all_passed(results) ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral solver and convergence harness for BBM and BBM-KP waves"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "Configuration file (key = value text or JSON)");
    sub->add_option("--out", common.out, "Output directory (WAVE_LAB_OUT overrides it)");
    sub->add_option("--jobs", common.jobs, "Worker threads for the parallel kernels (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", common.seed, "Seed for generated test data");
  };
  auto* simulate = app.add_subcommand("simulate", "Integrate a model and write snapshots");
  auto* converge = app.add_subcommand("converge", "Run the transverse-limit harness and write report.csv");
  auto* dispersion = app.add_subcommand("dispersion", "Tabulate dispersion relations to dispersion.csv");
  auto* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  std::string suite = "fast";
  verify->add_option("--suite", suite, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  // Self-test of the verifier: swaps the dealiased product for a plain one.
  bool tamper = false;
  verify->add_flag("--tamper-dealias", tamper)->group("");
  for (auto* sub : {simulate, converge, dispersion, verify}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (common.jobs > 0) wavelab::kernels::set_max_threads(common.jobs);
    if (verify->parsed()) return run_verify(common, suite, tamper);
    const auto cfg = load(common);
    const auto dir = output_dir(common, cfg);
    if (simulate->parsed()) print_outcome(wavelab::run_simulate(cfg, dir));
    if (converge->parsed()) print_outcome(wavelab::run_converge(cfg, dir));
    if (dispersion->parsed()) print_outcome(wavelab::run_dispersion(cfg, dir));
    return kExitOk;
  } catch (const wavelab::ConfigInvalid& e) {
    report_error(wavelab::to_string(e.kind()), e.what(), e.field());
    return kExitConfig;
  } catch (const wavelab::IoError& e) {
    report_error(wavelab::to_string(e.kind()), e.what());
    return kExitConfig;
  } catch (const wavelab::Error& e) {
    report_error(wavelab::to_string(e.kind()), e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    report_error("Internal", e.what());
    return kExitNumerical;
  }
}
