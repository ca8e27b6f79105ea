#include "wavelab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavelab/errors.hpp"
#include "wavelab/kernels.hpp"

namespace wavelab::norms {
namespace {

void require_order(double order, const char* what) {
  if (!(order >= 0.0)) throw InvalidArgument(std::string(what) + ": order must be >= 0");
}

std::vector<double> hk_weight(const Grid1D& grid, double k) {
  auto xi = wavenumbers(grid);
  for (double& w : xi) w = std::pow(1.0 + w * w, k);
  return xi;
}

// sum_{j,k} weight(xi_k, mu_j) |F_jk|^2 scaled to the continuum norm squared.
// Row partial sums are combined in row order.
template <class Weight>
double planar_energy(const Field2D& f, Weight weight) {
  const std::size_t rows = f.rows();
  const std::size_t cols = f.cols();
  const auto xi = wavenumbers(f.grid().x);
  const auto mu = wavenumbers(f.grid().y);
  std::vector<Complex> spec(rows * cols);
  kernels::parallel::forward_2d(f.values(), spec, rows, cols);
  double total = 0.0;
  for (std::size_t j = 0; j < rows; ++j) {
    double row = 0.0;
    for (std::size_t k = 0; k < cols; ++k) row += weight(xi[k], mu[j], k) * std::norm(spec[j * cols + k]);
    total += row;
  }
  const double n = static_cast<double>(rows * cols);
  return total * f.grid().x.length() * f.grid().y.length() / (n * n);
}

}  // namespace

double l2_norm(const Field1D& f) { return hk_x_norm(f, 0.0); }

double l2_norm(const Field2D& f) {
  return std::sqrt(planar_energy(f, [](double, double, std::size_t) { return 1.0; }));
}

double linf_norm(const Field1D& f) { return max_abs(f.values()); }
double linf_norm(const Field2D& f) { return max_abs(f.values()); }

double quadrature_l2_norm(const Field1D& f) {
  double acc = 0.0;
  for (double v : f.values()) acc += v * v;
  return std::sqrt(acc * f.grid().spacing());
}

double quadrature_l2_norm(const Field2D& f) {
  double acc = 0.0;
  for (double v : f.values()) acc += v * v;
  return std::sqrt(acc * f.grid().x.spacing() * f.grid().y.spacing());
}

double hk_x_norm(const Field1D& f, double k) {
  require_order(k, "hk_x_norm");
  const auto weight = hk_weight(f.grid(), k);
  double energy = 0.0;
  kernels::parallel::row_spectral_energy(f.values(), f.size(), weight, std::span<double>(&energy, 1));
  const double n = static_cast<double>(f.size());
  return std::sqrt(energy * f.grid().length() / (n * n));
}

std::vector<double> hk_x_slice_norms(const Field2D& f, double k) {
  require_order(k, "hk_x_slice_norms");
  const auto weight = hk_weight(f.grid().x, k);
  std::vector<double> out(f.rows());
  kernels::parallel::row_spectral_energy(f.values(), f.cols(), weight, out);
  const double n = static_cast<double>(f.cols());
  const double scale = f.grid().x.length() / (n * n);
  for (double& e : out) e = std::sqrt(e * scale);
  return out;
}

double hs_norm_2d(const Field2D& f, double s) {
  require_order(s, "hs_norm_2d");
  return std::sqrt(planar_energy(
      f, [s](double xi, double mu, std::size_t) { return std::pow(1.0 + xi * xi + mu * mu, s); }));
}

double hs_minus1_norm(const Field2D& f, double s, double mean_tol) {
  require_order(s, "hs_minus1_norm");
  require_zero_x_mean(f, mean_tol);
  return std::sqrt(planar_energy(f, [s](double xi, double mu, std::size_t k) {
    if (k == 0) return 0.0;
    const double a = 1.0 + 1.0 / std::abs(xi);
    return a * a * std::pow(1.0 + xi * xi + mu * mu, s);
  }));
}

AuxiliaryNorms auxiliary_norms(const Field2D& f, double mean_tol) {
  require_zero_x_mean(f, mean_tol);
  auto term = [&f](auto weight) { return std::sqrt(planar_energy(f, weight)); };
  const double l2 = term([](double, double, std::size_t) { return 1.0; });
  const double dx = term([](double xi, double, std::size_t) { return xi * xi; });
  const double dxx = term([](double xi, double, std::size_t) { return xi * xi * xi * xi; });
  const double dy = term([](double, double mu, std::size_t) { return mu * mu; });
  const double inv_dx_dy = term([](double xi, double mu, std::size_t k) {
    return k == 0 ? 0.0 : (mu * mu) / (xi * xi);
  });
  return AuxiliaryNorms{l2 + dx, l2 + dx + dxx + inv_dx_dy + dy};
}

double evaluate(const NormSpec& spec, const Field2D& f) {
  switch (spec.kind) {
    case NormKind::L2: return l2_norm(f);
    case NormKind::Linf: return linf_norm(f);
    case NormKind::Hk_x: {
      require_order(spec.order, "evaluate(Hk_x)");
      const double k = spec.order;
      return std::sqrt(planar_energy(f, [k](double xi, double, std::size_t) { return std::pow(1.0 + xi * xi, k); }));
    }
    case NormKind::Hs_2d: return hs_norm_2d(f, spec.order);
    case NormKind::Hs_minus1_2d: return hs_minus1_norm(f, spec.order);
    case NormKind::Y_energy: return auxiliary_norms(f).y_energy;
    case NormKind::W1: return auxiliary_norms(f).w1;
  }
  throw InvalidArgument("evaluate: unknown norm kind");
}

}  // namespace wavelab::norms
