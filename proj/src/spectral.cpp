#include "wavelab/spectral.hpp"

#include <cmath>
#include <string>

#include "wavelab/errors.hpp"
#include "wavelab/kernels.hpp"

namespace wavelab {
namespace {

Complex i_pow(int order) {
  switch (((order % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double rms(std::span<const double> v) {
  if (v.empty()) return 0.0;
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc / static_cast<double>(v.size()));
}

void check_slice_means(std::span<const double> sums, double length, double scale, double mean_tol) {
  const double tol = mean_tol * scale;
  for (std::size_t j = 0; j < sums.size(); ++j) {
    const double mean = sums[j] / length;
    if (!(std::abs(mean) <= tol)) throw NonzeroMean(j, mean, tol);
  }
}

// (i xi)^order for order >= 0, 1/(i xi) for order == -1.
Complex x_power_symbol(double xi, int order) {
  if (order == -1) return Complex(0.0, -1.0 / xi);
  return i_pow(order) * std::pow(xi, order);
}

}  // namespace

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 2) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

std::vector<Complex> sample_symbol(const Multiplier& m, const Grid1D& grid) {
  const auto xi = wavenumbers(grid);
  const std::size_t n = grid.count();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const bool nyquist = k == n / 2;
    if ((m.guard_zero_mode && k == 0) || (m.zero_nyquist && nyquist)) {
      out[k] = Complex(0.0, 0.0);
      continue;
    }
    out[k] = m.symbol(xi[k]);
    if (!std::isfinite(out[k].real()) || !std::isfinite(out[k].imag())) {
      throw SingularSymbol("multiplier '" + m.name + "' is singular at xi = " + std::to_string(xi[k]));
    }
  }
  return out;
}

Field1D apply(const Multiplier& m, const Field1D& f) {
  const auto symbol = sample_symbol(m, f.grid());
  std::vector<double> out(f.size());
  kernels::parallel::apply_x_symbol(f.values(), out, f.size(), symbol);
  return Field1D(f.grid(), std::move(out));
}

Field2D apply(const Multiplier& m, const Field2D& f) {
  const auto symbol = sample_symbol(m, f.grid().x);
  std::vector<double> out(f.values().size());
  kernels::parallel::apply_x_symbol(f.values(), out, f.cols(), symbol);
  return Field2D(f.grid(), std::move(out));
}

Field2D apply(const Multiplier2D& m, const Field2D& f) {
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  const auto xi = wavenumbers(f.grid().x);
  const auto mu = wavenumbers(f.grid().y);
  std::vector<Complex> spec(rows * cols);
  kernels::parallel::forward_2d(f.values(), spec, rows, cols);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t k = 0; k < cols; ++k) {
      Complex& c = spec[j * cols + k];
      if ((m.guard_zero_xi && k == 0) || (m.zero_x_nyquist && k == cols / 2)) {
        c = Complex(0.0, 0.0);
        continue;
      }
      const Complex s = m.symbol(xi[k], mu[j]);
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw SingularSymbol("multiplier '" + m.name + "' is singular at (xi, mu) = (" + std::to_string(xi[k]) +
                             ", " + std::to_string(mu[j]) + ")");
      }
      c *= s;
    }
  }
  std::vector<double> out(rows * cols);
  kernels::parallel::inverse_2d_real(spec, out, rows, cols);
  return Field2D(f.grid(), std::move(out));
}

Multiplier derivative_symbol(int order) {
  if (order < 1) throw InvalidArgument("derivative order must be >= 1, got " + std::to_string(order));
  return Multiplier{"d/dx^" + std::to_string(order),
                    [order](double xi) { return x_power_symbol(xi, order); }, false, order % 2 == 1};
}

Field1D derivative_x(const Field1D& f, int order) { return apply(derivative_symbol(order), f); }
Field2D derivative_x(const Field2D& f, int order) { return apply(derivative_symbol(order), f); }

namespace {

Multiplier antiderivative_symbol() {
  return Multiplier{"inverse d/dx", [](double xi) { return x_power_symbol(xi, -1); }, true, true};
}

}  // namespace

Field1D antiderivative_x(const Field1D& f, double mean_tol) {
  require_zero_x_mean(f, mean_tol);
  return apply(antiderivative_symbol(), f);
}

Field2D antiderivative_x(const Field2D& f, double mean_tol) {
  require_zero_x_mean(f, mean_tol);
  return apply(antiderivative_symbol(), f);
}

Field1D dealiased_product(const Field1D& f, const Field1D& g) {
  require_same_grid(f.grid(), g.grid(), "dealiased_product");
  std::vector<double> out(f.size());
  kernels::parallel::dealiased_product(f.values(), g.values(), out, f.size());
  return Field1D(f.grid(), std::move(out));
}

Field2D dealiased_product(const Field2D& f, const Field2D& g) {
  require_same_grid(f.grid(), g.grid(), "dealiased_product");
  std::vector<double> out(f.values().size());
  kernels::parallel::dealiased_product(f.values(), g.values(), out, f.cols());
  return Field2D(f.grid(), std::move(out));
}

std::vector<double> x_integral_per_slice(const Field2D& f) {
  std::vector<double> sums(f.rows());
  kernels::parallel::row_sums(f.values(), f.cols(), sums);
  const double h = f.grid().x.spacing();
  for (double& s : sums) s *= h;
  return sums;
}

double x_integral(const Field1D& f) {
  std::vector<double> sums(1);
  kernels::parallel::row_sums(f.values(), f.size(), sums);
  return sums[0] * f.grid().spacing();
}

void require_zero_x_mean(const Field1D& f, double mean_tol) {
  const double integral = x_integral(f);
  check_slice_means(std::span<const double>(&integral, 1), f.grid().length(), rms(f.values()), mean_tol);
}

void require_zero_x_mean(const Field2D& f, double mean_tol) {
  check_slice_means(x_integral_per_slice(f), f.grid().x.length(), rms(f.values()), mean_tol);
}

Field1D remove_x_mean(const Field1D& f) {
  const double mean = x_integral(f) / f.grid().length();
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x -= mean;
  return Field1D(f.grid(), std::move(v));
}

Field2D remove_x_mean(const Field2D& f) {
  const auto integrals = x_integral_per_slice(f);
  std::vector<double> v(f.values().begin(), f.values().end());
  const std::size_t nx = f.cols();
  for (std::size_t j = 0; j < f.rows(); ++j) {
    const double mean = integrals[j] / f.grid().x.length();
    for (std::size_t i = 0; i < nx; ++i) v[j * nx + i] -= mean;
  }
  return Field2D(f.grid(), std::move(v));
}

namespace {

Multiplier2D transverse_symbol(int x_order) {
  const bool odd = x_order == -1 || x_order % 2 == 1;
  return Multiplier2D{"d_x^" + std::to_string(x_order) + " d_yy",
                      [x_order](double xi, double mu) { return -mu * mu * x_power_symbol(xi, x_order); },
                      x_order == -1, odd};
}

}  // namespace

Field2D transverse_derivative(const Field2D& f, int x_order, double mean_tol) {
  if (x_order < -1) throw InvalidArgument("transverse_derivative: x order must be >= -1");
  if (x_order == -1) require_zero_x_mean(f, mean_tol);
  return apply(transverse_symbol(x_order), remove_y_mean(f));
}

Field2D remove_y_mean(const Field2D& f) {
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  std::vector<double> out(f.values().begin(), f.values().end());
  std::vector<double> column(rows);
  for (std::size_t i = 0; i < cols; ++i) {
    bool constant = true;
    for (std::size_t j = 0; j < rows; ++j) {
      column[j] = out[j * cols + i];
      constant = constant && column[j] == column[0];
    }
    // A constant column is cleared exactly; the rounded mean might not be.
    const double mean = constant ? column[0] : pairwise_sum(column) / static_cast<double>(rows);
    for (std::size_t j = 0; j < rows; ++j) out[j * cols + i] -= mean;
  }
  return Field2D(f.grid(), std::move(out));
}

}  // namespace wavelab
