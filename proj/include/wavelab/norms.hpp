#pragma once

#include <vector>

#include "wavelab/field.hpp"
#include "wavelab/spectral.hpp"

namespace wavelab::norms {

// Continuum norms on the torus, evaluated spectrally. With the forward DFT
// unnormalized, Parseval reads
//
//   int |f|^2 dx = (L / n^2) sum_k |F_k|^2,
//
// so every weighted norm below is sqrt((L / n^2) sum_k w(xi_k) |F_k|^2)
// (and the analogous Lx*Ly/(nx*ny)^2 form in 2-D). As L grows these
// converge to the whole-line norms for decaying fields.

enum class NormKind { L2, Linf, Hk_x, Hs_2d, Hs_minus1_2d, Y_energy, W1 };

struct NormSpec {
  NormKind kind = NormKind::L2;
  double order = 0.0;  // k for Hk_x, s for the Hs kinds
};

double l2_norm(const Field1D& f);
double l2_norm(const Field2D& f);
double linf_norm(const Field1D& f);
double linf_norm(const Field2D& f);

/// Rectangle-rule L2 norm straight from the samples (no transform).
double quadrature_l2_norm(const Field1D& f);
double quadrature_l2_norm(const Field2D& f);

/// (int (1 + xi^2)^k |f^(xi)|^2 dxi)^(1/2); k >= 0.
double hk_x_norm(const Field1D& f, double k);
/// Entry j is hk_x_norm of slice j.
std::vector<double> hk_x_slice_norms(const Field2D& f, double k);

/// Planar Sobolev norm with weight (1 + xi^2 + mu^2)^s; s >= 0.
double hs_norm_2d(const Field2D& f, double s);

/// Weight (1 + 1/|xi|)^2 (1 + xi^2 + mu^2)^s. Requires zero x-mean slices.
double hs_minus1_norm(const Field2D& f, double s, double mean_tol = kDefaultMeanTol);

struct AuxiliaryNorms {
  double y_energy = 0.0;  // |f| + |f_x|
  double w1 = 0.0;        // |f| + |f_x| + |f_xx| + |d_x^-1 f_y| + |f_y|
};

/// Requires zero x-mean slices (for the d_x^-1 f_y term).
AuxiliaryNorms auxiliary_norms(const Field2D& f, double mean_tol = kDefaultMeanTol);

/// Dispatch on a NormSpec (Hk_x is evaluated over the whole plane).
double evaluate(const NormSpec& spec, const Field2D& f);

}  // namespace wavelab::norms
