#include "wavelab/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "wavelab/errors.hpp"
#include "wavelab/models.hpp"

namespace wavelab::io {

using nlohmann::ordered_json;

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc()) throw IoError("could not format a double");
  return std::string(buf.data(), res.ptr);
}

namespace {

ordered_json grid_json(const Grid1D& g) { return {{"length", g.length()}, {"count", g.count()}}; }

void write_row(std::ostream& out, std::span<const double> row) {
  out << '[';
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << format_double(row[i]);
  }
  out << "]\n";
}

std::vector<double> parse_row(const std::string& line, std::size_t line_no) {
  std::vector<double> out;
  std::size_t pos = 0;
  const std::size_t end = line.size();
  auto skip = [&] {
    while (pos < end && (line[pos] == ' ' || line[pos] == '[' || line[pos] == ']' || line[pos] == '\r')) ++pos;
  };
  skip();
  while (pos < end) {
    double v = 0.0;
    const auto res = std::from_chars(line.data() + pos, line.data() + end, v);
    if (res.ec != std::errc()) throw IoError("snapshot line " + std::to_string(line_no) + ": bad number");
    out.push_back(v);
    pos = static_cast<std::size_t>(res.ptr - line.data());
    skip();
    if (pos < end && line[pos] == ',') ++pos;
    skip();
  }
  return out;
}

std::string snapshot_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%05zu.ndjson", i);
  return buf;
}

ordered_json grid_of(const Field1D& f) { return {{"x", grid_json(f.grid())}}; }
ordered_json grid_of(const Field2D& f) { return {{"x", grid_json(f.grid().x)}, {"y", grid_json(f.grid().y)}}; }

}  // namespace

void write_snapshot(std::ostream& out, const Field1D& f, double t, const std::string& config_hash) {
  ordered_json h = {{"format", "wave_lab.snapshot.v1"},
                    {"kind", "field1d"},
                    {"t", t},
                    {"grid", grid_of(f)},
                    {"config_hash", config_hash}};
  out << h.dump() << '\n';
  write_row(out, f.values());
}

void write_snapshot(std::ostream& out, const Field2D& f, double t, const std::string& config_hash) {
  ordered_json h = {{"format", "wave_lab.snapshot.v1"},
                    {"kind", "field2d"},
                    {"t", t},
                    {"grid", grid_of(f)},
                    {"config_hash", config_hash}};
  out << h.dump() << '\n';
  for (std::size_t j = 0; j < f.rows(); ++j) write_row(out, f.row(j));
}

Snapshot read_snapshot(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("snapshot: empty input");
  Snapshot s;
  try {
    const auto h = ordered_json::parse(line);
    s.t = h.at("t").get<double>();
    s.config_hash = h.value("config_hash", "");
    const auto& g = h.at("grid");
    for (const char* axis : {"x", "y"}) {
      if (!g.contains(axis)) continue;
      s.lengths.push_back(g.at(axis).at("length").get<double>());
      s.counts.push_back(g.at(axis).at("count").get<std::size_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("snapshot header: ") + e.what());
  }
  if (s.counts.empty()) throw IoError("snapshot header: grid has no x axis");
  const std::size_t rows = s.counts.size() == 2 ? s.counts[1] : 1;
  std::size_t line_no = 1;
  for (std::size_t j = 0; j < rows; ++j) {
    ++line_no;
    if (!std::getline(in, line)) throw IoError("snapshot: expected " + std::to_string(rows) + " rows");
    const auto row = parse_row(line, line_no);
    if (row.size() != s.counts[0]) throw IoError("snapshot line " + std::to_string(line_no) + ": wrong length");
    s.values.insert(s.values.end(), row.begin(), row.end());
  }
  return s;
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_snapshot(in);
}

Field1D Snapshot::field1d() const {
  if (counts.size() != 1) throw IoError("snapshot holds a two-dimensional field");
  return Field1D(Grid1D(lengths[0], counts[0]), values);
}

Field2D Snapshot::field2d() const {
  if (counts.size() != 2) throw IoError("snapshot holds a one-dimensional field");
  return Field2D(Grid2D{Grid1D(lengths[0], counts[0]), Grid1D(lengths[1], counts[1])}, values);
}

template <class F>
void write_trajectory(const std::filesystem::path& dir, const Trajectory<F>& tr, const ManifestInfo& info) {
  std::filesystem::create_directories(dir);
  ordered_json files = ordered_json::array();
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    const std::string name = snapshot_name(i);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw IoError("cannot write " + (dir / name).string());
    write_snapshot(out, tr.states[i], tr.times[i], info.config_hash);
    files.push_back(name);
  }
  ordered_json m = {{"format", "wave_lab.manifest.v1"},
                    {"model", info.model},
                    {"config_hash", info.config_hash},
                    {"grid", tr.states.empty() ? ordered_json::object() : grid_of(tr.states.front())},
                    {"params", info.params_json.empty() ? ordered_json::object() : ordered_json::parse(info.params_json)},
                    {"times", tr.times},
                    {"files", files},
                    {"warnings", info.warnings}};
  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out) throw IoError("cannot write " + (dir / "manifest.json").string());
  out << m.dump(2) << '\n';
}

template void write_trajectory<Field1D>(const std::filesystem::path&, const Trajectory<Field1D>&,
                                        const ManifestInfo&);
template void write_trajectory<Field2D>(const std::filesystem::path&, const Trajectory<Field2D>&,
                                        const ManifestInfo&);

void write_report_csv(std::ostream& out, const harness::ConvergenceReport& rep, const std::string& config_hash) {
  ordered_json zero = ordered_json::array();
  for (std::size_t j : rep.zero_slices) zero.push_back(rep.y_slices[j]);
  ordered_json meta = {
      {"format", "wave_lab.report.v1"},
      {"k", rep.k},
      {"s", rep.s},
      {"regularity_ok", rep.regularity_ok},
      {"extra_theorem", rep.extra_theorem},
      {"gamma", rep.gamma},
      {"alpha", rep.alpha},
      {"grid", {{"x", grid_json(rep.grid.x)}, {"y", grid_json(rep.grid.y)}}},
      {"dt", rep.dt},
      {"config_hash", config_hash},
      {"norm", "H^k_x slice norm of eta - u+ (y > 0) or eta - u- (y < 0)"},
      {"y0_compared_against_both", zero},
      {"constants", "time suprema over [0, t]; D is |d_x^(k-1) eta_yy|_L2"},
      {"warnings", rep.warnings},
  };
  out << "# " << meta.dump() << '\n' << kReportColumns << '\n';
  for (const auto& rows : rep.rows) {
    for (const auto& r : rows) {
      const auto& c = r.constants;
      const double cols[] = {r.t,   r.y,       r.norm_k,    r.bound,      r.w0_norm, c.D_eta,
                             c.C_k, c.C1_plus, c.C1_minus, c.C_star, r.w_norm};
      for (std::size_t i = 0; i < std::size(cols); ++i) {
        if (i) out << ',';
        out << format_double(cols[i]);
      }
      out << '\n';
    }
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double span = hi - lo;
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + span * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  out.back() = hi;
  return out;
}

void write_dispersion_csv(std::ostream& out, const DispersionRange& r, const std::string& config_hash) {
  if (r.xi_count == 0) throw ConfigInvalid("dispersion.xi_count", "must be >= 1");
  if (r.mu_count == 0) throw ConfigInvalid("dispersion.mu_count", "must be >= 1");
  if (!(r.xi_min <= r.xi_max)) throw ConfigInvalid("dispersion.xi_max", "must be >= dispersion.xi_min");
  if (!(r.mu_min <= r.mu_max)) throw ConfigInvalid("dispersion.mu_max", "must be >= dispersion.mu_min");
  const auto xi = linspace(r.xi_min, r.xi_max, r.xi_count);
  for (double x : xi) {
    if (x == 0.0 || (r.xi_min < 0.0 && r.xi_max > 0.0)) {
      throw ConfigInvalid("dispersion.xi_min", "the xi range must exclude 0 (omega2 is singular there)");
    }
  }
  const auto mu = linspace(r.mu_min, r.mu_max, r.mu_count);
  ordered_json meta = {{"format", "wave_lab.dispersion.v1"}, {"config_hash", config_hash}};
  out << "# " << meta.dump() << '\n' << "xi,mu,omega1,omega2_plus,omega2_minus,corr_err\n";
  for (double x : xi) {
    for (double m : mu) {
      const double cols[] = {x, m, omega1(x), omega2(x, m, 1), omega2(x, m, -1), kp_correction_error(x, m)};
      for (std::size_t i = 0; i < std::size(cols); ++i) {
        if (i) out << ',';
        out << format_double(cols[i]);
      }
      out << '\n';
    }
  }
}

}  // namespace wavelab::io
