#include "wavelab/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavelab/errors.hpp"
#include "wavelab/fft.hpp"

namespace wavelab {
namespace {

void check_values(std::span<const double> values, std::size_t expected, const char* what) {
  if (values.size() != expected) {
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(expected) + " samples, got " +
                          std::to_string(values.size()));
  }
  if (!all_finite(values)) throw NonFiniteValue(std::string(what) + ": non-finite sample");
}

}  // namespace

Field1D::Field1D(Grid1D grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  check_values(values_, grid_.count(), "Field1D");
  spectrum_.resize(values_.size());
  fft::forward_real(values_, spectrum_);
}

Field1D Field1D::zeros(const Grid1D& grid) { return Field1D(grid, std::vector<double>(grid.count(), 0.0)); }

Field1D Field1D::sample(const Grid1D& grid, const std::function<double(double)>& fn) {
  std::vector<double> v(grid.count());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(grid.node(j));
  return Field1D(grid, std::move(v));
}

Field1D Field1D::from_spectrum(const Grid1D& grid, std::span<const Complex> spectrum) {
  if (spectrum.size() != grid.count()) throw InvalidArgument("Field1D::from_spectrum: size mismatch");
  std::vector<double> v(grid.count());
  fft::inverse_to_real(spectrum, v);
  return Field1D(grid, std::move(v));
}

Field2D::Field2D(Grid2D grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  check_values(values_, grid_.size(), "Field2D");
}

Field2D Field2D::zeros(const Grid2D& grid) { return Field2D(grid, std::vector<double>(grid.size(), 0.0)); }

Field2D Field2D::sample(const Grid2D& grid, const std::function<double(double, double)>& fn) {
  std::vector<double> v(grid.size());
  const std::size_t nx = grid.x.count();
  for (std::size_t j = 0; j < grid.y.count(); ++j) {
    const double y = grid.y.node(j);
    for (std::size_t i = 0; i < nx; ++i) v[j * nx + i] = fn(grid.x.node(i), y);
  }
  return Field2D(grid, std::move(v));
}

Field2D Field2D::from_rows(const Grid2D& grid, std::span<const Field1D> rows) {
  if (rows.size() != grid.y.count()) throw InvalidArgument("Field2D::from_rows: row count mismatch");
  std::vector<double> v(grid.size());
  const std::size_t nx = grid.x.count();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    require_same_grid(rows[j].grid(), grid.x, "Field2D::from_rows");
    std::copy(rows[j].values().begin(), rows[j].values().end(), v.begin() + static_cast<std::ptrdiff_t>(j * nx));
  }
  return Field2D(grid, std::move(v));
}

Field2D Field2D::replicate(const Grid2D& grid, const Field1D& slice) {
  require_same_grid(slice.grid(), grid.x, "Field2D::replicate");
  std::vector<double> v(grid.size());
  const std::size_t nx = grid.x.count();
  for (std::size_t j = 0; j < grid.y.count(); ++j) {
    std::copy(slice.values().begin(), slice.values().end(), v.begin() + static_cast<std::ptrdiff_t>(j * nx));
  }
  return Field2D(grid, std::move(v));
}

Field1D Field2D::slice(std::size_t j) const {
  auto r = row(j);
  return Field1D(grid_.x, std::vector<double>(r.begin(), r.end()));
}

namespace {

template <class Op>
std::vector<double> zip(std::span<const double> a, std::span<const double> b, Op op) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

std::vector<double> scaled(double s, std::span<const double> a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

}  // namespace

Field1D operator+(const Field1D& a, const Field1D& b) {
  require_same_grid(a.grid(), b.grid(), "Field1D +");
  return Field1D(a.grid(), zip(a.values(), b.values(), [](double p, double q) { return p + q; }));
}

Field1D operator-(const Field1D& a, const Field1D& b) {
  require_same_grid(a.grid(), b.grid(), "Field1D -");
  return Field1D(a.grid(), zip(a.values(), b.values(), [](double p, double q) { return p - q; }));
}

Field1D operator*(double s, const Field1D& a) { return Field1D(a.grid(), scaled(s, a.values())); }

Field2D operator+(const Field2D& a, const Field2D& b) {
  require_same_grid(a.grid(), b.grid(), "Field2D +");
  return Field2D(a.grid(), zip(a.values(), b.values(), [](double p, double q) { return p + q; }));
}

Field2D operator-(const Field2D& a, const Field2D& b) {
  require_same_grid(a.grid(), b.grid(), "Field2D -");
  return Field2D(a.grid(), zip(a.values(), b.values(), [](double p, double q) { return p - q; }));
}

Field2D operator*(double s, const Field2D& a) { return Field2D(a.grid(), scaled(s, a.values())); }

Field1D axpy(const Field1D& a, double s, const Field1D& b) {
  require_same_grid(a.grid(), b.grid(), "axpy");
  return Field1D(a.grid(), zip(a.values(), b.values(), [s](double p, double q) { return p + s * q; }));
}

Field2D axpy(const Field2D& a, double s, const Field2D& b) {
  require_same_grid(a.grid(), b.grid(), "axpy");
  return Field2D(a.grid(), zip(a.values(), b.values(), [s](double p, double q) { return p + s * q; }));
}

double max_abs(std::span<const double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_difference(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("max_abs_difference: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool all_finite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

void require_same_grid(const Grid1D& a, const Grid1D& b, const char* what) {
  if (!(a == b)) throw GridMismatch(std::string(what) + ": fields live on different grids");
}

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* what) {
  if (!(a == b)) throw GridMismatch(std::string(what) + ": fields live on different grids");
}

}  // namespace wavelab
