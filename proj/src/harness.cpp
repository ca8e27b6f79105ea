#include "wavelab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavelab/errors.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/spectral.hpp"

namespace wavelab::harness {
namespace {

// Weights of u+ and u- on slice y: (1 + tanh y)/2 and (1 - tanh y)/2,
// written without the cancellation in 1 - tanh y.
double weight_plus(double y) { return 1.0 / (1.0 + std::exp(-2.0 * y)); }
double weight_minus(double y) { return 1.0 / (1.0 + std::exp(2.0 * y)); }

double sech2(double y) {
  const double c = std::cosh(y);
  return 1.0 / (c * c);
}

// Row j is even + odd_weight(y_j) * odd.
Field2D blend(const Grid2D& grid, const Field1D& even, const Field1D& odd, double (*odd_weight)(double)) {
  const std::size_t nx = grid.x.count();
  std::vector<double> v(grid.size());
  for (std::size_t j = 0; j < grid.y.count(); ++j) {
    const double wy = odd_weight(grid.y.node(j));
    for (std::size_t i = 0; i < nx; ++i) v[j * nx + i] = even[i] + odd[i] * wy;
  }
  return Field2D(grid, std::move(v));
}

double tanh_weight(double y) { return std::tanh(y); }

// Multiplies row j by coeff[j].
Field2D scale_rows(const Field2D& f, const std::vector<double>& coeff) {
  std::vector<double> v(f.values().begin(), f.values().end());
  const std::size_t nx = f.cols();
  for (std::size_t j = 0; j < f.rows(); ++j) {
    for (std::size_t i = 0; i < nx; ++i) v[j * nx + i] *= coeff[j];
  }
  return Field2D(f.grid(), std::move(v));
}

std::vector<double> slice_weights(const Grid1D& y, double (*fn)(double)) {
  std::vector<double> out(y.count());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = fn(y.node(j));
  return out;
}

void require_aligned(const Trajectories& tr, std::size_t index) {
  if (index >= tr.eta.times.size() || index >= tr.u_plus.times.size() || index >= tr.u_minus.times.size()) {
    throw TimeMisalignment("snapshot index " + std::to_string(index) + " is missing from a trajectory");
  }
  const double t = tr.eta.times[index];
  const double tol = 1e-12 * std::max(1.0, std::abs(t));
  if (std::abs(tr.u_plus.times[index] - t) > tol || std::abs(tr.u_minus.times[index] - t) > tol) {
    throw TimeMisalignment("snapshot " + std::to_string(index) + " has different times across the models");
  }
}

double sobolev_of_derivative(const Field1D& u, int k) {
  return norms::hk_x_norm(k == 0 ? u : derivative_x(u, k), 1.0);
}

double with_sup(double a, double b) { return std::max(a, b); }

double quotient(double numerator, double c1p, double c1m) {
  const double denom = c1p + c1m;
  if (!(denom > 0.0)) throw ZeroDenominator("C1+ + C1- vanishes: both BBM solutions have zero H1 norm");
  return numerator / denom;
}

}  // namespace

Field2D build_psi(const InitialDataSpec& spec, const Grid2D& grid, double mean_tol) {
  require_same_grid(spec.phi_plus.grid(), grid.x, "build_psi(phi+)");
  require_same_grid(spec.phi_minus.grid(), grid.x, "build_psi(phi-)");
  require_zero_x_mean(spec.phi_plus, mean_tol);
  require_zero_x_mean(spec.phi_minus, mean_tol);
  const Field1D even = 0.5 * (spec.phi_plus + spec.phi_minus);
  const Field1D odd = 0.5 * (spec.phi_plus - spec.phi_minus);
  Field2D psi = blend(grid, even, odd, tanh_weight);
  if (spec.profile == Profile::TanhBlend) return psi;

  if (!spec.bump) throw InvalidArgument("build_psi: the localized_bump profile needs a bump g(x)");
  require_same_grid(spec.bump->grid(), grid.x, "build_psi(g)");
  require_zero_x_mean(*spec.bump, mean_tol);
  const Field2D bump = scale_rows(Field2D::replicate(grid, *spec.bump), slice_weights(grid.y, [](double y) {
                                    return 1.0 / std::cosh(y);
                                  }));
  return psi + bump;
}

Field2D build_w(const Field2D& eta, const Field1D& u_plus, const Field1D& u_minus) {
  require_same_grid(u_plus.grid(), eta.grid().x, "build_w(u+)");
  require_same_grid(u_minus.grid(), eta.grid().x, "build_w(u-)");
  const Field1D even = 0.5 * (u_plus + u_minus);
  const Field1D odd = 0.5 * (u_plus - u_minus);
  return eta - blend(eta.grid(), even, odd, tanh_weight);
}

Field1D gaussian_derivative(const Grid1D& grid, double amplitude, double width) {
  return Field1D::sample(grid, [=](double x) {
    const double z = x / width;
    return amplitude * z * std::exp(-0.5 * z * z);
  });
}

Field1D wave_packet(const Grid1D& grid, double amplitude, double width, double wavenumber) {
  return Field1D::sample(grid, [=](double x) {
    const double z = x / width;
    return amplitude * std::exp(-0.5 * z * z) * std::sin(wavenumber * x);
  });
}

Trajectories run_models(const RunSpec& run) {
  validate(run.params);
  run.time.validate();
  Trajectories tr;
  tr.params = run.params;
  const Field2D psi = build_psi(run.data, run.grid, run.params.mean_tol);
  tr.eta = integrate(bbmkp_problem(run.params, run.grid), psi, run.time, run.scheme);

  const BbmParams bbm{run.params.alpha, run.params.nonlinear};
  const auto problem = bbm_problem(bbm, run.grid.x);
  tr.u_plus = integrate(problem, run.data.phi_plus, run.time, run.scheme);
  const auto pp = run.data.phi_plus.values();
  const auto pm = run.data.phi_minus.values();
  if (std::equal(pp.begin(), pp.end(), pm.begin(), pm.end())) {
    tr.u_minus = tr.u_plus;
  } else {
    tr.u_minus = integrate(problem, run.data.phi_minus, run.time, run.scheme);
    tr.eta.warnings.push_back(
        "phi+ differs from phi-: the tanh blend is not periodic in y, so the ends of the y-domain are "
        "polluted by the wrap-around jump");
  }
  return tr;
}

Field2D w_residual(const Trajectories& tr, std::size_t index, const ResidualOptions& opt) {
  require_aligned(tr, index);
  const BbmKpParams& p = tr.params;
  const Field2D& eta = tr.eta.states[index];
  const Field1D& up = tr.u_plus.states[index];
  const Field1D& um = tr.u_minus.states[index];
  const Grid2D& grid = eta.grid();
  const BbmParams bbm{p.alpha, p.nonlinear};

  const Field2D w_t = build_w(bbmkp_rhs(eta, p), bbm_rhs(up, bbm), bbm_rhs(um, bbm));
  const Field2D w = build_w(eta, up, um);

  const Multiplier helmholtz{"1 - d_xx", [](double xi) { return Complex(1.0 + xi * xi, 0.0); }, false, false};
  Field2D residual = apply(helmholtz, w_t);

  Field2D flux = p.alpha * w;
  if (p.nonlinear) {
    const auto a = slice_weights(grid.y, weight_plus);
    const auto b = slice_weights(grid.y, weight_minus);
    std::vector<double> ab(a.size());
    for (std::size_t j = 0; j < ab.size(); ++j) ab[j] = 0.5 * a[j] * b[j];
    const Field2D plus = Field2D::replicate(grid, up);
    const Field2D minus = Field2D::replicate(grid, um);
    const Field2D jump = plus - minus;
    flux = axpy(flux, 0.5, dealiased_product(w, w));
    flux = flux + scale_rows(dealiased_product(plus, w), a);
    flux = flux + scale_rows(dealiased_product(minus, w), b);
    flux = flux - scale_rows(dealiased_product(jump, jump), ab);
  }
  residual = residual + derivative_x(flux, 1);
  if (!opt.drop_transverse) {
    residual = axpy(residual, static_cast<double>(p.gamma), transverse_derivative(eta, -1, p.mean_tol));
  }
  return residual;
}

std::vector<double> slice_l2_norms(const Field2D& f) { return norms::hk_x_slice_norms(f, 0.0); }

std::vector<GronwallBundle> gronwall_constants_all(const Field2D& eta, const Field1D& u_plus,
                                                   const Field1D& u_minus, int k, double t) {
  if (k < 0) throw InvalidArgument("gronwall_constants: k must be >= 0");
  require_same_grid(u_plus.grid(), eta.grid().x, "gronwall_constants(u+)");
  require_same_grid(u_minus.grid(), eta.grid().x, "gronwall_constants(u-)");
  const auto d_inv = norms::hk_x_slice_norms(transverse_derivative(eta, -1), 0.0);
  const auto d_k = k == 0 ? d_inv : norms::hk_x_slice_norms(transverse_derivative(eta, k - 1), 0.0);
  const double q = poly_Q(sobolev_of_derivative(u_plus, k), sobolev_of_derivative(u_minus, k));
  const double h1_plus = norms::hk_x_norm(u_plus, 1.0);
  const double h1_minus = norms::hk_x_norm(u_minus, 1.0);

  std::vector<GronwallBundle> out(eta.rows());
  for (std::size_t j = 0; j < out.size(); ++j) {
    GronwallBundle& g = out[j];
    g.y = eta.grid().y.node(j);
    g.t = t;
    g.k = k;
    g.D_eta = d_k[j];
    g.D_eta_inv = d_inv[j];
    g.C_k = sech2(g.y) * q;
    g.C1_plus = weight_plus(g.y) * h1_plus;
    g.C1_minus = weight_minus(g.y) * h1_minus;
    g.C_star = quotient(g.D_eta + g.C_k, g.C1_plus, g.C1_minus);
  }
  return out;
}

GronwallBundle gronwall_constants(const Field2D& eta, const Field1D& u_plus, const Field1D& u_minus,
                                  std::size_t y_index, int k, double t) {
  if (y_index >= eta.rows()) throw InvalidArgument("gronwall_constants: slice index out of range");
  return gronwall_constants_all(eta, u_plus, u_minus, k, t)[y_index];
}

GronwallBundle supremum(const GronwallBundle& a, const GronwallBundle& b) {
  GronwallBundle s = a;
  s.t = std::max(a.t, b.t);
  s.D_eta = with_sup(a.D_eta, b.D_eta);
  s.D_eta_inv = with_sup(a.D_eta_inv, b.D_eta_inv);
  s.C_k = with_sup(a.C_k, b.C_k);
  s.C1_plus = with_sup(a.C1_plus, b.C1_plus);
  s.C1_minus = with_sup(a.C1_minus, b.C1_minus);
  s.C_star = quotient(s.D_eta + s.C_k, s.C1_plus, s.C1_minus);
  return s;
}

double poly_P(double a_plus, double a_minus, double b_plus, double b_minus) {
  if (a_plus < 0.0 || a_minus < 0.0 || b_plus < 0.0 || b_minus < 0.0) {
    throw InvalidArgument("poly_P: arguments must be nonnegative");
  }
  return 0.25 * (b_plus * a_plus + b_minus * a_minus + b_plus * a_minus + b_minus * a_plus);
}

double poly_Q(double q_plus, double q_minus) {
  if (q_plus < 0.0 || q_minus < 0.0) throw InvalidArgument("poly_Q: arguments must be nonnegative");
  return 0.25 * (q_plus * q_plus + q_minus * q_minus + 2.0 * q_plus * q_minus);
}

double gronwall_bound(double w0_norm, const GronwallBundle& bundle, double t) {
  if (!(t >= 0.0)) throw InvalidArgument("gronwall_bound: t must be >= 0");
  const double growth = std::expm1((bundle.C1_plus + bundle.C1_minus) * t);
  return w0_norm + (w0_norm + bundle.C_star) * growth;
}

std::size_t time_index(const std::vector<double>& times, double t) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (std::abs(times[i] - t) <= 1e-9 * std::max(1.0, std::abs(t))) return i;
  }
  throw InvalidArgument("no snapshot at t = " + std::to_string(t));
}

ConvergenceReport convergence_report(const Trajectories& tr, int k, double s, double dt) {
  if (k < 0) throw InvalidArgument("convergence_report: k must be >= 0");
  ConvergenceReport rep;
  rep.k = k;
  rep.s = s;
  rep.regularity_ok = s >= static_cast<double>(k) + 1.0;
  rep.extra_theorem = k == 0;
  rep.alpha = tr.params.alpha;
  rep.gamma = tr.params.gamma;
  rep.dt = dt;
  rep.warnings = tr.eta.warnings;
  if (!rep.regularity_ok) {
    rep.warnings.push_back("regularity label s = " + std::to_string(s) + " is below k + 1");
  }
  if (tr.eta.states.empty()) throw InvalidArgument("convergence_report: empty trajectory");
  const Grid2D grid = tr.eta.states.front().grid();
  rep.grid = grid;
  rep.times = tr.eta.times;
  rep.y_slices = grid.y.nodes();
  for (std::size_t j = 0; j < rep.y_slices.size(); ++j) {
    if (rep.y_slices[j] == 0.0) rep.zero_slices.push_back(j);
  }

  std::vector<GronwallBundle> sup;
  for (std::size_t n = 0; n < rep.times.size(); ++n) {
    require_aligned(tr, n);
    const Field2D& eta = tr.eta.states[n];
    const Field1D& up = tr.u_plus.states[n];
    const Field1D& um = tr.u_minus.states[n];
    const auto to_plus = norms::hk_x_slice_norms(eta - Field2D::replicate(grid, up), k);
    const auto to_minus = norms::hk_x_slice_norms(eta - Field2D::replicate(grid, um), k);
    const auto w_norms = norms::hk_x_slice_norms(build_w(eta, up, um), k);
    const auto now = gronwall_constants_all(eta, up, um, k, rep.times[n]);
    if (n == 0) {
      rep.w0_norms = w_norms;
      sup = now;
    } else {
      for (std::size_t j = 0; j < sup.size(); ++j) sup[j] = supremum(sup[j], now[j]);
    }

    std::vector<ReportRow> rows(rep.y_slices.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const double y = rep.y_slices[j];
      ReportRow& r = rows[j];
      r.t = rep.times[n];
      r.y = y;
      r.norm_k = y > 0.0 ? to_plus[j] : y < 0.0 ? to_minus[j] : std::max(to_plus[j], to_minus[j]);
      r.w0_norm = rep.w0_norms[j];
      r.constants = sup[j];
      r.bound = gronwall_bound(r.w0_norm, sup[j], r.t);
      r.w_norm = w_norms[j];
    }
    rep.rows.push_back(std::move(rows));
  }
  return rep;
}

ConvergenceReport convergence_report(const RunSpec& run) {
  return convergence_report(run_models(run), run.data.k, run.data.s, run.time.dt);
}

}  // namespace wavelab::harness
