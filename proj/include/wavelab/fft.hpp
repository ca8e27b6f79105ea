#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace wavelab::fft {

using Complex = std::complex<double>;

// Normalization: forward is unnormalized, F_k = sum_j f_j exp(-2 pi i j k / n);
// inverse carries the 1/n factor. All entry points are thread-safe and
// deterministic: a given length always runs the same FFTW plan.

void forward(std::span<const Complex> in, std::span<Complex> out);
void inverse(std::span<const Complex> in, std::span<Complex> out);

void forward_real(std::span<const double> in, std::span<Complex> out);

/// Inverse transform keeping only the real part of the result.
void inverse_to_real(std::span<const Complex> in, std::span<double> out);

/// Same as inverse_to_real but also reports max |imag| of the raw inverse.
double inverse_to_real_residue(std::span<const Complex> in, std::span<double> out);

}  // namespace wavelab::fft
