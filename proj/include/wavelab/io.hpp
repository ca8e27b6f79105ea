#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/harness.hpp"
#include "wavelab/timestepper.hpp"

namespace wavelab::io {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Snapshot files: one JSON header line, then one JSON array per y slice
/// (a single array for Field1D). Header fields: format, kind, t, grid,
/// config_hash.
void write_snapshot(std::ostream& out, const Field1D& f, double t, const std::string& config_hash);
void write_snapshot(std::ostream& out, const Field2D& f, double t, const std::string& config_hash);

struct Snapshot {
  double t = 0.0;
  std::string config_hash;
  std::vector<double> lengths;  // {Lx} or {Lx, Ly}
  std::vector<std::size_t> counts;
  std::vector<double> values;   // row-major

  bool is_2d() const { return counts.size() == 2; }
  Field1D field1d() const;
  Field2D field2d() const;
};

/// IoError on malformed input.
Snapshot read_snapshot(std::istream& in);
Snapshot read_snapshot(const std::filesystem::path& path);

struct ManifestInfo {
  std::string model;
  std::string config_hash;
  std::string params_json;  // serialized object
  std::vector<std::string> warnings;
};

/// Writes snap_00000.ndjson ... plus manifest.json into `dir`.
template <class F>
void write_trajectory(const std::filesystem::path& dir, const Trajectory<F>& tr, const ManifestInfo& info);

/// "# {json}" metadata line, the column header, then one row per (t, y).
void write_report_csv(std::ostream& out, const harness::ConvergenceReport& rep, const std::string& config_hash);

inline constexpr const char* kReportColumns = "t,y,norm_k,bound,w0_norm,D,C_k,C1p,C1m,C_star,w_norm";

struct DispersionRange {
  double xi_min = 0.1;
  double xi_max = 4.0;
  std::size_t xi_count = 40;
  double mu_min = 0.0;
  double mu_max = 2.0;
  std::size_t mu_count = 21;
};

/// Columns xi, mu, omega1, omega2_plus, omega2_minus, corr_err over the
/// closed ranges. ConfigInvalid when the xi range contains 0.
void write_dispersion_csv(std::ostream& out, const DispersionRange& r, const std::string& config_hash);

/// Grid nodes of an inclusive range: count == 1 gives {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace wavelab::io
