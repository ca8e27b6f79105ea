#pragma once

#include <cstddef>
#include <vector>

namespace wavelab {

/// Uniform periodic collocation grid on [-L/2, L/2). Nodes are
/// x_j = -L/2 + j L/n, j = 0..n-1; n is even and at least 8.
class Grid1D {
 public:
  Grid1D(double length, std::size_t count);

  double length() const noexcept { return length_; }
  std::size_t count() const noexcept { return count_; }
  double spacing() const noexcept { return length_ / static_cast<double>(count_); }
  double node(std::size_t j) const noexcept {
    return -0.5 * length_ + static_cast<double>(j) * spacing();
  }
  std::vector<double> nodes() const;

  /// Index of the node closest to x (ties resolved towards the lower index).
  std::size_t nearest_index(double x) const;

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  double length_;
  std::size_t count_;
};

/// Tensor grid: grid_x along the propagation direction, grid_y transverse.
/// Field2D storage is row-major with one row per y node.
struct Grid2D {
  Grid1D x;
  Grid1D y;

  std::size_t size() const noexcept { return x.count() * y.count(); }
  friend bool operator==(const Grid2D&, const Grid2D&) = default;
};

/// Angular wavenumbers 2*pi*k/L in standard DFT ordering
/// (0, 1, ..., n/2-1, -n/2, ..., -1). Accepts any even count >= 2.
std::vector<double> wavenumbers(double length, std::size_t count);
std::vector<double> wavenumbers(const Grid1D& grid);

/// Signed integer mode index of DFT slot `slot` (same ordering as above).
inline long mode_index(std::size_t slot, std::size_t count) noexcept {
  const auto k = static_cast<long>(slot);
  const auto n = static_cast<long>(count);
  return k < n / 2 ? k : k - n;
}

}  // namespace wavelab
