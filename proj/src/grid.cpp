#include "wavelab/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wavelab/errors.hpp"

namespace wavelab {

Grid1D::Grid1D(double length, std::size_t count) : length_(length), count_(count) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidArgument("grid length must be positive and finite, got " + std::to_string(length));
  }
  if (count < 8 || count % 2 != 0) {
    throw InvalidArgument("grid count must be even and >= 8, got " + std::to_string(count));
  }
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> out(count_);
  for (std::size_t j = 0; j < count_; ++j) out[j] = node(j);
  return out;
}

std::size_t Grid1D::nearest_index(double x) const {
  const double s = (x + 0.5 * length_) / spacing();
  const double r = std::round(s);
  if (r <= 0.0) return 0;
  if (r >= static_cast<double>(count_ - 1)) return count_ - 1;
  return static_cast<std::size_t>(r);
}

std::vector<double> wavenumbers(double length, std::size_t count) {
  if (!(length > 0.0) || count < 2 || count % 2 != 0) {
    throw InvalidArgument("wavenumbers: need length > 0 and an even count >= 2");
  }
  std::vector<double> xi(count);
  const double scale = 2.0 * std::numbers::pi / length;
  for (std::size_t j = 0; j < count; ++j) xi[j] = scale * static_cast<double>(mode_index(j, count));
  return xi;
}

std::vector<double> wavenumbers(const Grid1D& grid) { return wavenumbers(grid.length(), grid.count()); }

}  // namespace wavelab
