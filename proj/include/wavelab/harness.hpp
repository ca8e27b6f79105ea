#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/models.hpp"
#include "wavelab/timestepper.hpp"

namespace wavelab::harness {

// Transverse-limit experiment: BBM-KP data psi(x, y) whose slices tend to
// phi+ as y -> +inf and to phi- as y -> -inf, the two BBM solutions u+- they
// generate, and the corrector
//
//   w = eta - (1/2)(u+ + u-) - (1/2)(u+ - u-) tanh y
//
// whose slice norms should decay in |y| at every time.

enum class Profile { TanhBlend, LocalizedBump };

struct InitialDataSpec {
  Field1D phi_plus;
  Field1D phi_minus;
  Profile profile = Profile::TanhBlend;
  std::optional<Field1D> bump;  // g(x); required for LocalizedBump
  int k = 1;                    // report order
  double s = 2.0;               // regularity label of the data
};

/// psi = (phi+ + phi-)/2 + (phi+ - phi-)/2 tanh y [+ sech(y) g(x)].
/// NonzeroMean if phi+-, or g, fails the zero x-mean test.
Field2D build_psi(const InitialDataSpec& spec, const Grid2D& grid, double mean_tol = kDefaultMeanTol);

/// Pointwise assembly of w. GridMismatch unless the u's live on grid.x.
Field2D build_w(const Field2D& eta, const Field1D& u_plus, const Field1D& u_minus);

/// Default zero-mean profiles.
/// amplitude * (x/width) exp(-x^2 / (2 width^2)).
Field1D gaussian_derivative(const Grid1D& grid, double amplitude, double width);
/// amplitude * exp(-x^2 / (2 width^2)) sin(wavenumber x).
Field1D wave_packet(const Grid1D& grid, double amplitude, double width, double wavenumber);

struct Trajectories {
  Trajectory<Field2D> eta;
  Trajectory<Field1D> u_plus;
  Trajectory<Field1D> u_minus;
  BbmKpParams params;
};

struct RunSpec {
  Grid2D grid;
  BbmKpParams params;
  TimeGrid time;
  Scheme scheme = Scheme::IntegratingFactorRk4;
  InitialDataSpec data;
};

/// Integrates BBM-KP from psi and BBM from phi+ and phi- on one time grid.
Trajectories run_models(const RunSpec& run);

struct ResidualOptions {
  bool drop_transverse = false;  // omit the gamma d_x^{-1} eta_yy term
};

/// Left side of the w equation at snapshot `index`:
///   (1 - d_xx) w_t + d_x[ alpha w + w^2/2 + a u+ w + b u- w - (ab/2)(u+ - u-)^2 ] + gamma d_x^{-1} eta_yy
/// with a = (1 + tanh y)/2, b = (1 - tanh y)/2, products dealiased, and
/// time derivatives taken from the model right-hand sides.
/// TimeMisalignment if the three snapshots do not share a time.
Field2D w_residual(const Trajectories& tr, std::size_t index, const ResidualOptions& opt = {});

/// L2 norm of every slice of a residual field.
std::vector<double> slice_l2_norms(const Field2D& f);

struct GronwallBundle {
  double y = 0.0;
  double t = 0.0;
  int k = 1;
  double D_eta = 0.0;      // |d_x^{k-1} eta_yy|_{L2}
  double D_eta_inv = 0.0;  // |d_x^{-1} eta_yy|_{L2}
  double C_k = 0.0;        // sech^2(y) Q(|d_x^k u+|_{H1}, |d_x^k u-|_{H1})
  double C1_plus = 0.0;    // (1 + tanh y)/2 |u+|_{H1}
  double C1_minus = 0.0;   // (1 - tanh y)/2 |u-|_{H1}
  double C_star = 0.0;     // (D_eta + C_k) / (C1_plus + C1_minus)
};

/// Constants for one slice. ZeroDenominator when |u+|_{H1} and |u-|_{H1}
/// both vanish; InvalidArgument for k < 0.
GronwallBundle gronwall_constants(const Field2D& eta, const Field1D& u_plus, const Field1D& u_minus,
                                  std::size_t y_index, int k, double t = 0.0);

/// Same for every slice, sharing the transforms.
std::vector<GronwallBundle> gronwall_constants_all(const Field2D& eta, const Field1D& u_plus,
                                                   const Field1D& u_minus, int k, double t = 0.0);

/// Componentwise supremum of D, C_k, C1+-; C* is recomputed from the suprema.
GronwallBundle supremum(const GronwallBundle& a, const GronwallBundle& b);

/// P = (b+ a+ + b- a- + b+ a- + b- a+)/4 with a = |d_x^k u|_{L2}, b = |u|_inf.
double poly_P(double a_plus, double a_minus, double b_plus, double b_minus);
/// Q = (q+ + q-)^2 / 4 with q = |d_x^k u|_{H1}.
double poly_Q(double q_plus, double q_minus);

/// w0 e^{ct} + C*(e^{ct} - 1), c = C1+ + C1-. InvalidArgument for t < 0.
double gronwall_bound(double w0_norm, const GronwallBundle& bundle, double t);

struct ReportRow {
  double t = 0.0;
  double y = 0.0;
  double norm_k = 0.0;  // |eta - u^{sign y}|_{H^k_x}; at y = 0 the larger of the two
  double bound = 0.0;
  double w0_norm = 0.0;
  GronwallBundle constants;  // time suprema over [0, t]
  double w_norm = 0.0;
};

struct ConvergenceReport {
  int k = 1;
  double s = 2.0;
  bool regularity_ok = true;   // s >= k + 1
  bool extra_theorem = false;  // k = 0
  double alpha = 1.0;
  int gamma = 1;
  Grid2D grid{Grid1D(1.0, 8), Grid1D(1.0, 8)};
  double dt = 0.0;
  std::vector<double> times;
  std::vector<double> y_slices;
  std::vector<std::size_t> zero_slices;  // slices compared against both u+ and u-
  std::vector<double> w0_norms;
  std::vector<std::vector<ReportRow>> rows;  // [time][slice]
  std::vector<std::string> warnings;

  const ReportRow& at(std::size_t time_index, std::size_t slice) const { return rows[time_index][slice]; }
};

ConvergenceReport convergence_report(const Trajectories& tr, int k, double s, double dt);
ConvergenceReport convergence_report(const RunSpec& run);

/// Index of the capture whose time is closest to t; InvalidArgument if none
/// is within 1e-9 (relative to max(1, t)).
std::size_t time_index(const std::vector<double>& times, double t);

}  // namespace wavelab::harness
