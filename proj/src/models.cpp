#include "wavelab/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavelab/errors.hpp"
#include "wavelab/kernels.hpp"

namespace wavelab {
namespace {

// -(1 + xi^2)^{-1} i xi, Nyquist dropped.
std::vector<Complex> bbm_symbol(const Grid1D& grid) {
  const auto xi = wavenumbers(grid);
  const std::size_t n = grid.count();
  std::vector<Complex> s(n);
  for (std::size_t k = 0; k < n; ++k) {
    s[k] = k == n / 2 ? Complex(0.0, 0.0) : Complex(0.0, -xi[k] / (1.0 + xi[k] * xi[k]));
  }
  return s;
}

// Row-wise: out = symbol * (alpha u + u^2/2). Shared by both models so that
// a y-independent BBM-KP state reproduces bbm_rhs slice by slice.
std::vector<double> bbm_rows(std::span<const double> u, std::size_t cols, const Grid1D& grid, double alpha,
                             bool nonlinear, bool linear) {
  std::vector<double> flux(u.size(), 0.0);
  if (nonlinear) kernels::parallel::dealiased_product(u, u, flux, cols);
  for (std::size_t i = 0; i < flux.size(); ++i) {
    const double quad = nonlinear ? 0.5 * flux[i] : 0.0;
    flux[i] = linear ? alpha * u[i] + quad : quad;
  }
  std::vector<double> out(u.size());
  kernels::parallel::apply_x_symbol(flux, out, cols, bbm_symbol(grid));
  return out;
}

// -gamma (1 + xi^2)^{-1} d_x^{-1} d_yy with the y-means of columns removed
// first, so y-independent input yields exact zeros.
Field2D transverse_term(const Field2D& eta, int gamma) {
  const double g = static_cast<double>(gamma);
  Multiplier2D m{"BBM-KP transverse",
                 [g](double xi, double mu) { return Complex(0.0, -g * mu * mu / (xi * (1.0 + xi * xi))); },
                 true, true};
  return apply(m, remove_y_mean(eta));
}

bool all_zero(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

}  // namespace

void validate(const BbmParams& p) {
  if (!std::isfinite(p.alpha)) throw InvalidArgument("BBM alpha must be finite");
}

void validate(const BbmKpParams& p) {
  if (!std::isfinite(p.alpha)) throw InvalidArgument("BBM-KP alpha must be finite");
  if (p.gamma != 1 && p.gamma != -1) {
    throw InvalidArgument("BBM-KP gamma must be +1 or -1, got " + std::to_string(p.gamma));
  }
  if (!(p.mean_tol > 0.0)) throw InvalidArgument("BBM-KP mean_tol must be positive");
}

double omega1(double xi) { return xi / (1.0 + xi * xi); }

double omega2(double xi, double mu, int gamma) {
  if (xi == 0.0) throw SingularSymbol("omega2 is singular at xi = 0");
  return (xi * xi + static_cast<double>(gamma) * mu * mu) / (xi * (1.0 + xi * xi));
}

double kp_correction_error(double xi, double mu) {
  if (xi == 0.0) throw SingularSymbol("kp_correction_error is singular at xi = 0");
  const double r = (mu / xi) * (mu / xi);
  return std::abs(xi) * (0.25 * r * r) / (1.0 + 0.5 * r + std::sqrt(1.0 + r));
}

double DispersionSymbol::frequency(double xi, double mu) const {
  if (kind == Kind::Bbm) return alpha * omega1(xi);
  if (xi == 0.0) throw SingularSymbol("BBM-KP frequency is singular at xi = 0");
  return (alpha * xi * xi + static_cast<double>(gamma) * mu * mu) / (xi * (1.0 + xi * xi));
}

Field1D bbm_rhs(const Field1D& u, const BbmParams& p) {
  return Field1D(u.grid(), bbm_rows(u.values(), u.size(), u.grid(), p.alpha, p.nonlinear, true));
}

Field1D bbm_nonlinear_rhs(const Field1D& u, const BbmParams& p) {
  return Field1D(u.grid(), bbm_rows(u.values(), u.size(), u.grid(), p.alpha, p.nonlinear, false));
}

Field2D bbmkp_rhs(const Field2D& eta, const BbmKpParams& p) {
  require_zero_x_mean(eta, p.mean_tol);
  Field2D rows(eta.grid(), bbm_rows(eta.values(), eta.cols(), eta.grid().x, p.alpha, p.nonlinear, true));
  Field2D transverse = transverse_term(eta, p.gamma);
  if (all_zero(transverse.values())) return rows;
  return rows + transverse;
}

Field2D bbmkp_nonlinear_rhs(const Field2D& eta, const BbmKpParams& p) {
  require_zero_x_mean(eta, p.mean_tol);
  return Field2D(eta.grid(), bbm_rows(eta.values(), eta.cols(), eta.grid().x, p.alpha, p.nonlinear, false));
}

double max_grid_frequency(const Grid1D& x, const DispersionSymbol& symbol) {
  const auto xi = wavenumbers(x);
  double best = 0.0;
  for (std::size_t k = 1; k < xi.size(); ++k) {
    if (k == xi.size() / 2) continue;
    best = std::max(best, std::abs(DispersionSymbol::bbm(symbol.alpha).frequency(xi[k])));
  }
  return best;
}

double max_grid_frequency(const Grid2D& grid, const DispersionSymbol& symbol) {
  if (symbol.kind == DispersionSymbol::Kind::Bbm) return max_grid_frequency(grid.x, symbol);
  const auto xi = wavenumbers(grid.x);
  const auto mu = wavenumbers(grid.y);
  double best = 0.0;
  for (double m : mu) {
    for (std::size_t k = 1; k < xi.size(); ++k) {
      if (k == xi.size() / 2) continue;
      best = std::max(best, std::abs(symbol.frequency(xi[k], m)));
    }
  }
  return best;
}

LinearPropagator1D::LinearPropagator1D(const Grid1D& grid, const DispersionSymbol& symbol, double t)
    : grid_(grid), phase_(grid.count()) {
  if (symbol.kind != DispersionSymbol::Kind::Bbm) {
    throw InvalidArgument("the BBM-KP propagator acts on two-dimensional fields");
  }
  const auto xi = wavenumbers(grid);
  const std::size_t n = grid.count();
  for (std::size_t k = 0; k < n; ++k) {
    phase_[k] = k == n / 2 ? Complex(1.0, 0.0) : std::polar(1.0, -symbol.frequency(xi[k]) * t);
  }
}

Field1D LinearPropagator1D::operator()(const Field1D& f) const {
  require_same_grid(f.grid(), grid_, "linear_propagator");
  std::vector<double> out(f.size());
  kernels::parallel::apply_x_symbol(f.values(), out, f.size(), phase_);
  return Field1D(grid_, std::move(out));
}

LinearPropagator2D::LinearPropagator2D(const Grid2D& grid, const DispersionSymbol& symbol, double t,
                                       double mean_tol)
    : grid_(grid), symbol_(symbol), mean_tol_(mean_tol) {
  const auto xi = wavenumbers(grid.x);
  const std::size_t cols = grid.x.count();
  if (symbol.kind == DispersionSymbol::Kind::Bbm) {
    phase_.resize(cols);
    for (std::size_t k = 0; k < cols; ++k) {
      phase_[k] = k == cols / 2 ? Complex(1.0, 0.0) : std::polar(1.0, -symbol.frequency(xi[k]) * t);
    }
    return;
  }
  const auto mu = wavenumbers(grid.y);
  const std::size_t rows = grid.y.count();
  phase_.resize(rows * cols);
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t k = 0; k < cols; ++k) {
      Complex& c = phase_[j * cols + k];
      if (k == 0) {
        c = Complex(0.0, 0.0);
      } else if (k == cols / 2) {
        c = Complex(1.0, 0.0);
      } else {
        c = std::polar(1.0, -symbol.frequency(xi[k], mu[j]) * t);
      }
    }
  }
}

Field2D LinearPropagator2D::operator()(const Field2D& f) const {
  require_same_grid(f.grid(), grid_, "linear_propagator");
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  std::vector<double> out(f.values().size());
  if (symbol_.kind == DispersionSymbol::Kind::Bbm) {
    kernels::parallel::apply_x_symbol(f.values(), out, cols, phase_);
    return Field2D(grid_, std::move(out));
  }
  require_zero_x_mean(f, mean_tol_);
  std::vector<Complex> spec(rows * cols);
  kernels::parallel::forward_2d(f.values(), spec, rows, cols);
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= phase_[i];
  kernels::parallel::inverse_2d_real(spec, out, rows, cols);
  return Field2D(grid_, std::move(out));
}

Field1D linear_propagator(const Field1D& f, double t, const DispersionSymbol& symbol) {
  return LinearPropagator1D(f.grid(), symbol, t)(f);
}

Field2D linear_propagator(const Field2D& f, double t, const DispersionSymbol& symbol) {
  return LinearPropagator2D(f.grid(), symbol, t)(f);
}

double SolitaryWave::amplitude() const { return 3.0 * (speed - alpha); }

double SolitaryWave::inverse_width() const { return 0.5 * std::sqrt((speed - alpha) / speed); }

double SolitaryWave::operator()(double x, double t) const {
  if (!(speed > alpha) || !(speed > 0.0)) {
    throw InvalidArgument("solitary wave needs speed > max(alpha, 0)");
  }
  const double s = 1.0 / std::cosh(inverse_width() * (x - x0 - speed * t));
  return amplitude() * s * s;
}

Field1D SolitaryWave::sample(const Grid1D& grid, double t) const {
  const double length = grid.length();
  const double centre = x0 + speed * t;
  return Field1D::sample(grid, [&](double x) {
    // Distance to the crest measured on the circle.
    const double d = std::remainder(x - centre, length);
    return (*this)(centre + d, t);
  });
}

}  // namespace wavelab
