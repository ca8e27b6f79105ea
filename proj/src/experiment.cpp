#include "wavelab/experiment.hpp"

#include <fstream>

#include <json.hpp>

#include "wavelab/errors.hpp"
#include "wavelab/io.hpp"
#include "wavelab/spectral.hpp"

namespace wavelab {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

BbmKpParams kp_params(const ExperimentConfig& c) { return BbmKpParams{c.alpha, c.gamma, c.nonlinear, c.mean_tol}; }

}  // namespace

harness::InitialDataSpec initial_data_spec(const ExperimentConfig& c) {
  if (c.preset != Preset::Blend && c.preset != Preset::LocalizedBump) {
    throw ConfigInvalid("data.preset", "the transverse-limit harness needs blend or localized_bump data");
  }
  const Grid1D gx = x_grid(c);
  harness::InitialDataSpec spec{harness::gaussian_derivative(gx, c.phi_plus.amplitude, c.phi_plus.width),
                                harness::gaussian_derivative(gx, c.phi_minus.amplitude, c.phi_minus.width),
                                harness::Profile::TanhBlend,
                                std::nullopt,
                                c.k,
                                c.s};
  if (c.preset == Preset::LocalizedBump) {
    spec.profile = harness::Profile::LocalizedBump;
    spec.bump = harness::wave_packet(gx, c.bump_amplitude, c.bump_width, c.bump_wavenumber);
  }
  return spec;
}

harness::RunSpec run_spec(const ExperimentConfig& c) {
  if (c.model != Model::BbmKp) throw ConfigInvalid("model", "converge needs model = bbmkp");
  return harness::RunSpec{plane_grid(c), kp_params(c), c.time, c.scheme, initial_data_spec(c)};
}

Field1D initial_field_1d(const ExperimentConfig& c) {
  const Grid1D gx = x_grid(c);
  switch (c.preset) {
    case Preset::Zero: return Field1D::zeros(gx);
    case Preset::Solitary: return SolitaryWave{c.solitary_speed, c.alpha, c.solitary_x0}.sample(gx, 0.0);
    case Preset::Blend:
    case Preset::LocalizedBump: return initial_data_spec(c).phi_plus;
    case Preset::File: {
      const auto snap = io::read_snapshot(std::filesystem::path(c.data_file));
      Field1D f = snap.field1d();
      if (!(f.grid() == gx)) throw ConfigInvalid("data.file", "snapshot grid differs from grid.lx/grid.nx");
      return f;
    }
  }
  throw ConfigInvalid("data.preset", "unsupported preset");
}

Field2D initial_field_2d(const ExperimentConfig& c) {
  const Grid2D grid = plane_grid(c);
  switch (c.preset) {
    case Preset::Zero: return Field2D::zeros(grid);
    case Preset::Solitary:
      throw ConfigInvalid("data.preset", "solitary data has nonzero x-mean and is not admissible for bbmkp");
    case Preset::Blend:
    case Preset::LocalizedBump: return harness::build_psi(initial_data_spec(c), grid, c.mean_tol);
    case Preset::File: {
      const auto snap = io::read_snapshot(std::filesystem::path(c.data_file));
      Field2D f = snap.field2d();
      if (!(f.grid() == grid)) throw ConfigInvalid("data.file", "snapshot grid differs from the grid.* keys");
      return f;
    }
  }
  throw ConfigInvalid("data.preset", "unsupported preset");
}

std::string params_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j = {{"alpha", c.alpha},
                              {"nonlinear", c.nonlinear},
                              {"dt", c.time.dt},
                              {"t_end", c.time.t_end},
                              {"capture_stride", c.time.capture_stride},
                              {"scheme", c.scheme == Scheme::Rk4 ? "rk4" : "if_rk4"},
                              {"preset", to_string(c.preset)}};
  if (c.model == Model::BbmKp) {
    j["gamma"] = c.gamma;
    j["mean_tol"] = c.mean_tol;
  }
  return j.dump();
}

RunOutcome run_simulate(const ExperimentConfig& c, const std::filesystem::path& out) {
  validate(c);
  const std::string hash = config_hash(c);
  const io::ManifestInfo base{to_string(c.model), hash, params_json(c), {}};
  const auto dir = out / "trajectory";
  auto persist = [&](const auto& tr) {
    auto info = base;
    info.warnings = tr.warnings;
    io::write_trajectory(dir, tr, info);
    return RunOutcome{{dir / "manifest.json"}, tr.warnings};
  };
  if (c.model == Model::Bbm) {
    return persist(integrate(bbm_problem(BbmParams{c.alpha, c.nonlinear}, x_grid(c)), initial_field_1d(c), c.time,
                             c.scheme));
  }
  // The stepper re-projects onto zero x-mean after every step; initial data
  // must already satisfy the constraint rather than be silently corrected.
  const Field2D eta0 = initial_field_2d(c);
  require_zero_x_mean(eta0, c.mean_tol);
  return persist(integrate(bbmkp_problem(kp_params(c), plane_grid(c)), eta0, c.time, c.scheme));
}

RunOutcome run_converge(const ExperimentConfig& c, const std::filesystem::path& out) {
  validate(c);
  const auto rep = harness::convergence_report(run_spec(c));
  const auto path = out / "report.csv";
  auto f = open_output(path);
  io::write_report_csv(f, rep, config_hash(c));
  return RunOutcome{{path}, rep.warnings};
}

RunOutcome run_dispersion(const ExperimentConfig& c, const std::filesystem::path& out) {
  validate(c);
  const auto path = out / "dispersion.csv";
  auto f = open_output(path);
  io::write_dispersion_csv(f, c.dispersion, config_hash(c));
  return RunOutcome{{path}, {}};
}

}  // namespace wavelab
