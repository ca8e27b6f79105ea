#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wavelab/field.hpp"

namespace wavelab {

/// Relative tolerance for the zero x-mean admissibility test.
inline constexpr double kDefaultMeanTol = 1e-10;

/// Fourier multiplier acting along x. Modes flagged by the guards are set to
/// zero without evaluating the symbol; every other grid mode must produce a
/// finite value or SingularSymbol is raised.
struct Multiplier {
  std::string name;
  std::function<Complex(double xi)> symbol;
  bool guard_zero_mode = false;
  bool zero_nyquist = false;
};

/// Fourier multiplier on the 2-D torus, symbol(xi, mu). `guard_zero_xi`
/// zeroes every xi = 0 mode; `zero_x_nyquist` zeroes the unpaired x mode.
struct Multiplier2D {
  std::string name;
  std::function<Complex(double xi, double mu)> symbol;
  bool guard_zero_xi = false;
  bool zero_x_nyquist = false;
};

std::vector<Complex> sample_symbol(const Multiplier& m, const Grid1D& grid);

Field1D apply(const Multiplier& m, const Field1D& f);
/// Slice-by-slice application along x.
Field2D apply(const Multiplier& m, const Field2D& f);
Field2D apply(const Multiplier2D& m, const Field2D& f);

/// (i xi)^order; the Nyquist mode is dropped for odd orders.
Multiplier derivative_symbol(int order);

Field1D derivative_x(const Field1D& f, int order);
Field2D derivative_x(const Field2D& f, int order);

/// Zero-mean antiderivative, symbol 1/(i xi). Raises NonzeroMean when some
/// slice has |x-mean| > mean_tol * rms(f).
Field1D antiderivative_x(const Field1D& f, double mean_tol = kDefaultMeanTol);
Field2D antiderivative_x(const Field2D& f, double mean_tol = kDefaultMeanTol);

Field1D dealiased_product(const Field1D& f, const Field1D& g);
Field2D dealiased_product(const Field2D& f, const Field2D& g);

/// Rectangle-rule integral over x of every slice: (Lx/nx) * sum_i f(x_i, y_j).
std::vector<double> x_integral_per_slice(const Field2D& f);
double x_integral(const Field1D& f);

void require_zero_x_mean(const Field1D& f, double mean_tol = kDefaultMeanTol);
void require_zero_x_mean(const Field2D& f, double mean_tol = kDefaultMeanTol);

/// Subtracts the x-mean of every slice (projection onto xi != 0 modes).
Field1D remove_x_mean(const Field1D& f);
Field2D remove_x_mean(const Field2D& f);

/// d_x^{x_order} d_y^2 f for x_order >= -1 (x_order = -1 is the constrained
/// antiderivative). The y-mean of every column is removed before the y
/// transform, so y-independent input gives exactly zero.
Field2D transverse_derivative(const Field2D& f, int x_order, double mean_tol = kDefaultMeanTol);

/// Subtracts the y-mean of every column. Constant columns become exactly zero.
Field2D remove_y_mean(const Field2D& f);

/// Deterministic pairwise (tree) sum.
double pairwise_sum(std::span<const double> v);

}  // namespace wavelab
