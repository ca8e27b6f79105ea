#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "wavelab/io.hpp"
#include "wavelab/timestepper.hpp"

namespace wavelab {

enum class Model { Bbm, BbmKp };
enum class Preset { Zero, Solitary, Blend, LocalizedBump, File };

struct ProfileParams {
  double amplitude = 0.5;
  double width = 4.0;
};

/// One experiment. Every field has a dotted key (see config_keys()); the
/// defaults reproduce the reference transverse-limit run.
struct ExperimentConfig {
  Model model = Model::BbmKp;
  double alpha = 1.0;
  int gamma = 1;
  bool nonlinear = true;
  double mean_tol = kDefaultMeanTol;

  double lx = 64.0;
  std::size_t nx = 256;
  double ly = 32.0;
  std::size_t ny = 128;

  TimeGrid time{5e-3, 1.0, 5};
  Scheme scheme = Scheme::IntegratingFactorRk4;

  Preset preset = Preset::LocalizedBump;
  double solitary_speed = 1.5;
  double solitary_x0 = 0.0;
  ProfileParams phi_plus{};
  ProfileParams phi_minus{};
  double bump_amplitude = 1e-3;
  double bump_width = 3.0;
  double bump_wavenumber = 3.0;
  std::string data_file;

  int k = 1;
  double s = 3.0;

  io::DispersionRange dispersion{};

  std::string out_dir = "wave_lab_out";
  std::uint64_t seed = 20240611;
};

/// Parses "key = value" lines. Blank lines and lines starting with '#' are
/// skipped; a "[section]" line prefixes the keys that follow with "section.".
/// ConfigInvalid names the offending key for unknown keys and bad values.
ExperimentConfig parse_config_text(const std::string& text);

/// The same schema as a JSON object; nested objects flatten to dotted keys.
ExperimentConfig parse_config_json(const std::string& text);

/// Chooses the parser from the extension (.json) or a leading '{'.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Checks every field against the module preconditions; the first failure is
/// raised as ConfigInvalid(field, reason).
void validate(const ExperimentConfig& c);

/// Sorted "key=value" lines for every schema key, values in canonical form.
std::string canonical_text(const ExperimentConfig& c);

/// 16 hex digits of the 64-bit FNV-1a hash of canonical_text.
std::string config_hash(const ExperimentConfig& c);

/// All schema keys in sorted order.
std::vector<std::string> config_keys();

std::string to_string(Model m);
std::string to_string(Preset p);

Grid1D x_grid(const ExperimentConfig& c);
Grid2D plane_grid(const ExperimentConfig& c);

}  // namespace wavelab
