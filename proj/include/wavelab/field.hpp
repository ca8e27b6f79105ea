#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wavelab/grid.hpp"

namespace wavelab {

using Complex = std::complex<double>;

/// Real samples on a Grid1D together with their DFT (forward, unnormalized).
/// Immutable; the spectrum is computed once on construction.
class Field1D {
 public:
  /// Throws NonFiniteValue for NaN/Inf samples, InvalidArgument on size mismatch.
  Field1D(Grid1D grid, std::vector<double> values);

  static Field1D zeros(const Grid1D& grid);
  static Field1D sample(const Grid1D& grid, const std::function<double(double)>& fn);
  /// Values are the real part of the inverse transform of `spectrum`.
  static Field1D from_spectrum(const Grid1D& grid, std::span<const Complex> spectrum);

  const Grid1D& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const Complex> spectrum() const noexcept { return spectrum_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return values_[j]; }

 private:
  Grid1D grid_;
  std::vector<double> values_;
  std::vector<Complex> spectrum_;
};

/// Real samples on a Grid2D, row-major, one row per y node (a "slice").
class Field2D {
 public:
  Field2D(Grid2D grid, std::vector<double> values);

  static Field2D zeros(const Grid2D& grid);
  static Field2D sample(const Grid2D& grid, const std::function<double(double, double)>& fn);
  /// Stacks `rows` (all on grid.x) into a field on grid.
  static Field2D from_rows(const Grid2D& grid, std::span<const Field1D> rows);
  /// Every row equal to `slice`.
  static Field2D replicate(const Grid2D& grid, const Field1D& slice);

  const Grid2D& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t rows() const noexcept { return grid_.y.count(); }
  std::size_t cols() const noexcept { return grid_.x.count(); }
  std::span<const double> row(std::size_t j) const noexcept {
    return std::span<const double>(values_).subspan(j * cols(), cols());
  }
  double at(std::size_t j, std::size_t i) const noexcept { return values_[j * cols() + i]; }
  Field1D slice(std::size_t j) const;

 private:
  Grid2D grid_;
  std::vector<double> values_;
};

// Pointwise linear algebra. Grids must agree (GridMismatch otherwise).
Field1D operator+(const Field1D& a, const Field1D& b);
Field1D operator-(const Field1D& a, const Field1D& b);
Field1D operator*(double s, const Field1D& a);
Field2D operator+(const Field2D& a, const Field2D& b);
Field2D operator-(const Field2D& a, const Field2D& b);
Field2D operator*(double s, const Field2D& a);

/// a + s * b, evaluated in one pass.
Field1D axpy(const Field1D& a, double s, const Field1D& b);
Field2D axpy(const Field2D& a, double s, const Field2D& b);

double max_abs(std::span<const double> values);
double max_abs_difference(std::span<const double> a, std::span<const double> b);
bool all_finite(std::span<const double> values);

void require_same_grid(const Grid1D& a, const Grid1D& b, const char* what);
void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what);

}  // namespace wavelab
