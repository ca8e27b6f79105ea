#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wavelab/field.hpp"

namespace wavelab::verify {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;    // deterministic; no timings
  double seconds = 0.0;  // wall time, reported separately
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  /// Test hook: the dealiasing check multiplies samples pointwise instead of
  /// calling the dealiased product, which the padded-oracle check must catch.
  bool tamper_dealias = false;
  /// Receives one line per finished check (with timing) when set.
  std::ostream* progress = nullptr;
};

/// Seeded generator producing the same doubles on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform(double lo, double hi);  // [lo, hi)
 private:
  std::mt19937_64 engine_;
};

/// Random real trigonometric polynomial with modes 1..max_mode (zero mean),
/// coefficients uniform in [-1, 1) scaled by 1/mode.
Field1D random_band_limited(const Grid1D& grid, std::size_t max_mode, Rng& rng);

/// Exact spectrum of P(f g): the coefficients of f and g (Nyquist split
/// between +-n/2) are convolved over integer modes and the result restricted
/// to 3|k| < n. Quadratic cost; reference for the fast kernel.
std::vector<Complex> padded_product_oracle(const Field1D& f, const Field1D& g);

/// Ids of the acceptance criteria: "AC1" ... "AC10".
std::vector<std::string> acceptance_ids();

std::vector<CheckResult> run_fast_suite(const VerifyOptions& opt);

/// Criteria 1-10. `full_start` is when the enclosing full run began (AC10
/// checks the total wall time against it); defaults to the call time.
std::vector<CheckResult> run_acceptance(const VerifyOptions& opt,
                                        std::optional<std::chrono::steady_clock::time_point> full_start = {});

/// Fast suite, acceptance criteria, then a bookkeeping check that every
/// acceptance id ran.
std::vector<CheckResult> run_full_suite(const VerifyOptions& opt);

/// "PASS id name: detail" lines; byte-stable for identical inputs.
std::string summary_text(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace wavelab::verify
