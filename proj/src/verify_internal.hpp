#pragma once

// Check bodies shared by the fast suite and the acceptance criteria.

#include <functional>
#include <sstream>
#include <string>

#include "wavelab/io.hpp"
#include "wavelab/verify.hpp"

namespace wavelab::verify::detail {

/// Outcome of a check body before timing and labelling.
struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  /// Records a sub-check; failures are listed first in the detail text.
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED " << what << "; ";
    }
  }
  void note(const std::string& what) { detail << what << "; "; }
};

inline std::string num(double v) { return io::format_double(v); }

/// Two significant digits, for details whose exact digits are not of interest.
std::string sci(double v);

CheckResult timed(const std::string& id, const std::string& name, const VerifyOptions& opt,
                  const std::function<void(Outcome&)>& body);

void norm_oracles(Outcome& o);
void pq_inequality(Outcome& o, std::uint64_t seed);
void kp_correction_scan(Outcome& o);

}  // namespace wavelab::verify::detail
