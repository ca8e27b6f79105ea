#include "wavelab/errors.hpp"

#include <sstream>

namespace wavelab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NonzeroMean: return "NonzeroMean";
    case ErrorKind::SingularSymbol: return "SingularSymbol";
    case ErrorKind::Blowup: return "Blowup";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::TimeMisalignment: return "TimeMisalignment";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string nonzero_mean_message(std::size_t slice, double mean, double tolerance) {
  std::ostringstream os;
  os << "slice " << slice << " has x-mean " << mean << " (tolerance " << tolerance
     << "); field is not an x-derivative";
  return os.str();
}

std::string blowup_message(std::size_t step, double time) {
  std::ostringstream os;
  os << "non-finite state at step " << step << " (t = " << time << ")";
  return os.str();
}

}  // namespace

NonzeroMean::NonzeroMean(std::size_t slice, double mean, double tolerance)
    : Error(ErrorKind::NonzeroMean, nonzero_mean_message(slice, mean, tolerance)), slice_(slice) {}

Blowup::Blowup(std::size_t step, double time) : Error(ErrorKind::Blowup, blowup_message(step, time)), step_(step) {}

}  // namespace wavelab
