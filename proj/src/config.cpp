#include "wavelab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wavelab/errors.hpp"

namespace wavelab {
namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

double parse_real(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigInvalid(key, "expected a finite real number, got '" + v + "'");
  }
  return out;
}

template <class Int>
Int parse_integer(const std::string& key, const std::string& v) {
  Int out{};
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ConfigInvalid(key, "expected an integer, got '" + v + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigInvalid(key, "expected true or false, got '" + v + "'");
}

struct Key {
  std::function<void(ExperimentConfig&, const std::string&, const std::string&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

Key real_key(double ExperimentConfig::*m) {
  return {[m](ExperimentConfig& c, const std::string& k, const std::string& v) { c.*m = parse_real(k, v); },
          [m](const ExperimentConfig& c) { return io::format_double(c.*m); }};
}

template <class Get>
Key real_ref(Get ref) {
  return {[ref](ExperimentConfig& c, const std::string& k, const std::string& v) { ref(c) = parse_real(k, v); },
          [ref](const ExperimentConfig& c) { return io::format_double(ref(c)); }};
}

template <class Int, class Get>
Key int_ref(Get ref) {
  return {[ref](ExperimentConfig& c, const std::string& k, const std::string& v) {
            ref(c) = parse_integer<Int>(k, v);
          },
          [ref](const ExperimentConfig& c) { return std::to_string(ref(c)); }};
}

const std::map<std::string, Key>& schema() {
  static const std::map<std::string, Key> keys = [] {
    std::map<std::string, Key> m;
    m["model"] = {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
                    if (v == "bbm") {
                      c.model = Model::Bbm;
                    } else if (v == "bbmkp") {
                      c.model = Model::BbmKp;
                    } else {
                      throw ConfigInvalid(k, "expected bbm or bbmkp, got '" + v + "'");
                    }
                  },
                  [](const ExperimentConfig& c) { return to_string(c.model); }};
    m["params.alpha"] = real_key(&ExperimentConfig::alpha);
    m["params.gamma"] = int_ref<int>([](auto& c) -> auto& { return c.gamma; });
    m["params.nonlinear"] = {[](ExperimentConfig& c, const std::string& k,
                                const std::string& v) { c.nonlinear = parse_bool(k, v); },
                             [](const ExperimentConfig& c) { return std::string(c.nonlinear ? "true" : "false"); }};
    m["params.mean_tol"] = real_key(&ExperimentConfig::mean_tol);
    m["grid.lx"] = real_key(&ExperimentConfig::lx);
    m["grid.nx"] = int_ref<std::size_t>([](auto& c) -> auto& { return c.nx; });
    m["grid.ly"] = real_key(&ExperimentConfig::ly);
    m["grid.ny"] = int_ref<std::size_t>([](auto& c) -> auto& { return c.ny; });
    m["time.dt"] = real_ref([](auto& c) -> auto& { return c.time.dt; });
    m["time.t_end"] = real_ref([](auto& c) -> auto& { return c.time.t_end; });
    m["time.capture_stride"] =
        int_ref<std::size_t>([](auto& c) -> auto& { return c.time.capture_stride; });
    m["time.scheme"] = {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
                          if (v == "rk4") {
                            c.scheme = Scheme::Rk4;
                          } else if (v == "if_rk4") {
                            c.scheme = Scheme::IntegratingFactorRk4;
                          } else {
                            throw ConfigInvalid(k, "expected rk4 or if_rk4, got '" + v + "'");
                          }
                        },
                        [](const ExperimentConfig& c) {
                          return std::string(c.scheme == Scheme::Rk4 ? "rk4" : "if_rk4");
                        }};
    m["data.preset"] = {[](ExperimentConfig& c, const std::string& k, const std::string& v) {
                          static const std::map<std::string, Preset> names = {
                              {"zero", Preset::Zero},
                              {"solitary", Preset::Solitary},
                              {"blend", Preset::Blend},
                              {"localized_bump", Preset::LocalizedBump},
                              {"file", Preset::File}};
                          const auto it = names.find(v);
                          if (it == names.end()) {
                            throw ConfigInvalid(k, "expected zero, solitary, blend, localized_bump or file");
                          }
                          c.preset = it->second;
                        },
                        [](const ExperimentConfig& c) { return to_string(c.preset); }};
    m["data.solitary.speed"] = real_key(&ExperimentConfig::solitary_speed);
    m["data.solitary.x0"] = real_key(&ExperimentConfig::solitary_x0);
    m["data.phi_plus.amplitude"] = real_ref([](auto& c) -> auto& { return c.phi_plus.amplitude; });
    m["data.phi_plus.width"] = real_ref([](auto& c) -> auto& { return c.phi_plus.width; });
    m["data.phi_minus.amplitude"] =
        real_ref([](auto& c) -> auto& { return c.phi_minus.amplitude; });
    m["data.phi_minus.width"] = real_ref([](auto& c) -> auto& { return c.phi_minus.width; });
    m["data.bump.amplitude"] = real_key(&ExperimentConfig::bump_amplitude);
    m["data.bump.width"] = real_key(&ExperimentConfig::bump_width);
    m["data.bump.wavenumber"] = real_key(&ExperimentConfig::bump_wavenumber);
    m["data.file"] = {[](ExperimentConfig& c, const std::string&, const std::string& v) { c.data_file = v; },
                      [](const ExperimentConfig& c) { return c.data_file; }};
    m["report.k"] = int_ref<int>([](auto& c) -> auto& { return c.k; });
    m["report.s"] = real_key(&ExperimentConfig::s);
    m["dispersion.xi_min"] = real_ref([](auto& c) -> auto& { return c.dispersion.xi_min; });
    m["dispersion.xi_max"] = real_ref([](auto& c) -> auto& { return c.dispersion.xi_max; });
    m["dispersion.xi_count"] =
        int_ref<std::size_t>([](auto& c) -> auto& { return c.dispersion.xi_count; });
    m["dispersion.mu_min"] = real_ref([](auto& c) -> auto& { return c.dispersion.mu_min; });
    m["dispersion.mu_max"] = real_ref([](auto& c) -> auto& { return c.dispersion.mu_max; });
    m["dispersion.mu_count"] =
        int_ref<std::size_t>([](auto& c) -> auto& { return c.dispersion.mu_count; });
    m["output.dir"] = {[](ExperimentConfig& c, const std::string&, const std::string& v) { c.out_dir = v; },
                       [](const ExperimentConfig& c) { return c.out_dir; }};
    m["seed"] = int_ref<std::uint64_t>([](auto& c) -> auto& { return c.seed; });
    return m;
  }();
  return keys;
}

void assign(ExperimentConfig& c, const std::string& key, const std::string& value) {
  const auto it = schema().find(key);
  if (it == schema().end()) throw ConfigInvalid(key, "unknown key");
  it->second.set(c, key, value);
}

void flatten(const nlohmann::json& j, const std::string& prefix, ExperimentConfig& c) {
  for (const auto& [name, value] : j.items()) {
    const std::string key = prefix.empty() ? name : prefix + "." + name;
    if (value.is_object()) {
      flatten(value, key, c);
    } else if (value.is_string()) {
      assign(c, key, value.get<std::string>());
    } else if (value.is_boolean()) {
      assign(c, key, value.get<bool>() ? "true" : "false");
    } else if (value.is_number()) {
      assign(c, key, value.dump());
    } else {
      throw ConfigInvalid(key, "expected a scalar value");
    }
  }
}

void require(bool ok, const char* field, const std::string& why) {
  if (!ok) throw ConfigInvalid(field, why);
}

void check_count(std::size_t n, const char* field) {
  require(n >= 8 && n % 2 == 0, field, "must be even and >= 8, got " + std::to_string(n));
}

}  // namespace

std::string to_string(Model m) { return m == Model::Bbm ? "bbm" : "bbmkp"; }

std::string to_string(Preset p) {
  switch (p) {
    case Preset::Zero: return "zero";
    case Preset::Solitary: return "solitary";
    case Preset::Blend: return "blend";
    case Preset::LocalizedBump: return "localized_bump";
    case Preset::File: return "file";
  }
  return "unknown";
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigInvalid("line " + std::to_string(line_no), "expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    assign(c, key, trim(line.substr(eq + 1)));
  }
  return c;
}

ExperimentConfig parse_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigInvalid("json", e.what());
  }
  if (!j.is_object()) throw ConfigInvalid("json", "top level must be an object");
  ExperimentConfig c;
  flatten(j, "", c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigInvalid("config", "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (path.extension() == ".json" || (first != std::string::npos && text[first] == '{')) {
    return parse_config_json(text);
  }
  return parse_config_text(text);
}

void validate(const ExperimentConfig& c) {
  require(c.gamma == 1 || c.gamma == -1, "params.gamma", "must be +1 or -1, got " + std::to_string(c.gamma));
  require(c.mean_tol > 0.0, "params.mean_tol", "must be positive");
  require(c.lx > 0.0, "grid.lx", "must be positive");
  check_count(c.nx, "grid.nx");
  if (c.model == Model::BbmKp) {
    require(c.ly > 0.0, "grid.ly", "must be positive");
    check_count(c.ny, "grid.ny");
  }
  require(c.time.dt > 0.0, "time.dt", "must be positive");
  require(c.time.t_end >= c.time.dt, "time.t_end", "must be >= time.dt");
  require(c.time.capture_stride >= 1, "time.capture_stride", "must be >= 1");
  require(c.k >= 0, "report.k", "must be >= 0");
  require(c.s >= 0.0, "report.s", "must be >= 0");
  switch (c.preset) {
    case Preset::Solitary:
      require(c.model == Model::Bbm, "data.preset",
              "solitary needs model = bbm (the profile has nonzero x-mean, which BBM-KP rejects)");
      require(c.solitary_speed > std::max(c.alpha, 0.0), "data.solitary.speed", "must exceed max(alpha, 0)");
      break;
    case Preset::Blend:
    case Preset::LocalizedBump:
      require(c.phi_plus.width > 0.0, "data.phi_plus.width", "must be positive");
      require(c.phi_minus.width > 0.0, "data.phi_minus.width", "must be positive");
      if (c.preset == Preset::LocalizedBump) {
        require(c.bump_width > 0.0, "data.bump.width", "must be positive");
      }
      break;
    case Preset::File:
      require(!c.data_file.empty(), "data.file", "required when data.preset = file");
      break;
    case Preset::Zero:
      break;
  }
  require(c.dispersion.xi_count >= 1, "dispersion.xi_count", "must be >= 1");
  require(c.dispersion.mu_count >= 1, "dispersion.mu_count", "must be >= 1");
  require(c.dispersion.xi_min <= c.dispersion.xi_max, "dispersion.xi_max", "must be >= dispersion.xi_min");
  require(c.dispersion.mu_min <= c.dispersion.mu_max, "dispersion.mu_max", "must be >= dispersion.mu_min");
  require(c.dispersion.xi_min > 0.0 || c.dispersion.xi_max < 0.0, "dispersion.xi_min",
          "the xi range must exclude 0 (omega2 is singular there)");
}

std::vector<std::string> config_keys() {
  std::vector<std::string> out;
  for (const auto& [k, _] : schema()) out.push_back(k);
  return out;
}

std::string canonical_text(const ExperimentConfig& c) {
  std::string out;
  for (const auto& [k, key] : schema()) {
    // The output location does not change any result.
    if (k == "output.dir") continue;
    out += k + "=" + key.get(c) + "\n";
  }
  return out;
}

std::string config_hash(const ExperimentConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_text(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Grid1D x_grid(const ExperimentConfig& c) { return Grid1D(c.lx, c.nx); }

Grid2D plane_grid(const ExperimentConfig& c) { return Grid2D{Grid1D(c.lx, c.nx), Grid1D(c.ly, c.ny)}; }

}  // namespace wavelab
