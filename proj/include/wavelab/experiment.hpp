#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wavelab/config.hpp"
#include "wavelab/harness.hpp"

namespace wavelab {

/// phi+-, bump and labels for the blend and localized_bump presets.
harness::InitialDataSpec initial_data_spec(const ExperimentConfig& c);
harness::RunSpec run_spec(const ExperimentConfig& c);

/// Initial state for `simulate`.
Field1D initial_field_1d(const ExperimentConfig& c);
Field2D initial_field_2d(const ExperimentConfig& c);

struct RunOutcome {
  std::vector<std::filesystem::path> files;
  std::vector<std::string> warnings;
};

/// Integrates the configured model and writes snapshots plus manifest.json
/// under out/trajectory.
RunOutcome run_simulate(const ExperimentConfig& c, const std::filesystem::path& out);

/// Runs the transverse-limit harness and writes out/report.csv.
RunOutcome run_converge(const ExperimentConfig& c, const std::filesystem::path& out);

/// Writes out/dispersion.csv.
RunOutcome run_dispersion(const ExperimentConfig& c, const std::filesystem::path& out);

/// Serialized model parameters for manifests.
std::string params_json(const ExperimentConfig& c);

}  // namespace wavelab
