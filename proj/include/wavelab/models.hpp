#pragma once

#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/spectral.hpp"

namespace wavelab {

/// u_t + alpha u_x + u u_x - u_xxt = 0. alpha = 0 is the bare BBM equation,
/// alpha = 1 the form with linear transport used by the harness.
struct BbmParams {
  double alpha = 1.0;
  bool nonlinear = true;
};

/// (eta_t + alpha eta_x + eta eta_x - eta_xxt)_x + gamma eta_yy = 0.
struct BbmKpParams {
  double alpha = 1.0;
  int gamma = 1;  // +1 or -1
  bool nonlinear = true;
  double mean_tol = kDefaultMeanTol;
};

/// Throws InvalidArgument for non-finite alpha or gamma outside {-1, +1}.
void validate(const BbmParams& p);
void validate(const BbmKpParams& p);

/// omega1(xi) = xi / (1 + xi^2).
double omega1(double xi);

/// omega2(xi, mu) = (xi^2 + gamma mu^2) / (xi (1 + xi^2)); SingularSymbol at xi = 0.
double omega2(double xi, double mu, int gamma);

/// |xi + mu^2/(2 xi) - sign(xi) sqrt(xi^2 + mu^2)|, evaluated without
/// cancellation. SingularSymbol at xi = 0.
double kp_correction_error(double xi, double mu);

/// Linear plane-wave frequency of either model (alpha-scaled transport).
struct DispersionSymbol {
  enum class Kind { Bbm, BbmKp };
  Kind kind = Kind::Bbm;
  int gamma = 1;
  double alpha = 1.0;

  static DispersionSymbol bbm(double alpha = 1.0) { return {Kind::Bbm, 1, alpha}; }
  static DispersionSymbol bbmkp(int gamma, double alpha = 1.0) { return {Kind::BbmKp, gamma, alpha}; }

  /// omega at (xi, mu); mu is ignored for Bbm. SingularSymbol at xi = 0 for BbmKp.
  double frequency(double xi, double mu = 0.0) const;
};

/// Mild-form time derivative u_t = -(1 + xi^2)^{-1} i xi (alpha u + u^2/2)^.
Field1D bbm_rhs(const Field1D& u, const BbmParams& p);

/// Mild-form time derivative of BBM-KP:
///   eta_t = (1 - d_xx)^{-1} [ -alpha eta_x - (eta^2/2)_x - gamma d_x^{-1} eta_yy ].
/// Each slice goes through exactly the bbm_rhs code path; the transverse
/// term is added afterwards (and skipped when it is identically zero).
/// NonzeroMean if some slice fails the mean test.
Field2D bbmkp_rhs(const Field2D& eta, const BbmKpParams& p);

/// The quadratic terms alone (the part left after the linear flow is
/// factored out exactly). Zero when p.nonlinear is false.
Field1D bbm_nonlinear_rhs(const Field1D& u, const BbmParams& p);
Field2D bbmkp_nonlinear_rhs(const Field2D& eta, const BbmKpParams& p);

/// Largest |omega| over the grid modes that the linear flow actually moves
/// (xi = 0 and the x-Nyquist column excluded).
double max_grid_frequency(const Grid1D& x, const DispersionSymbol& symbol);
double max_grid_frequency(const Grid2D& grid, const DispersionSymbol& symbol);

/// exp(-i omega t) applied mode by mode, with a precomputed phase table.
/// The unpaired x-Nyquist mode is left unchanged (its linear time derivative
/// is zero in the rhs). For the BbmKp symbol the xi = 0 modes are set to zero.
class LinearPropagator1D {
 public:
  LinearPropagator1D(const Grid1D& grid, const DispersionSymbol& symbol, double t);
  Field1D operator()(const Field1D& f) const;

 private:
  Grid1D grid_;
  std::vector<Complex> phase_;
};

class LinearPropagator2D {
 public:
  LinearPropagator2D(const Grid2D& grid, const DispersionSymbol& symbol, double t,
                     double mean_tol = kDefaultMeanTol);
  Field2D operator()(const Field2D& f) const;

 private:
  Grid2D grid_;
  DispersionSymbol symbol_;
  double mean_tol_;
  std::vector<Complex> phase_;  // rows x cols, or one row for the Bbm symbol
};

/// One-shot forms of the propagators above. The BbmKp symbol requires a
/// Field2D with zero x-mean slices (NonzeroMean otherwise).
Field1D linear_propagator(const Field1D& f, double t, const DispersionSymbol& symbol);
Field2D linear_propagator(const Field2D& f, double t, const DispersionSymbol& symbol);

/// Travelling-wave solution of u_t + alpha u_x + u u_x - u_xxt = 0:
///   u = 3 (c - alpha) sech^2( (1/2) sqrt((c - alpha)/c) (x - x0 - c t) ),
/// evaluated at the nearest periodic image. Requires c > max(alpha, 0).
struct SolitaryWave {
  double speed = 1.5;
  double alpha = 1.0;
  double x0 = 0.0;

  double amplitude() const;
  double inverse_width() const;
  double operator()(double x, double t) const;
  Field1D sample(const Grid1D& grid, double t) const;
};

}  // namespace wavelab
