#pragma once

// Row-parallel spectral kernels on row-major blocks (rows = y slices,
// cols = x nodes). Each kernel exists twice with identical signatures:
//
//   kernels::serial   - plain loops; the reference implementation
//   kernels::parallel - OpenMP over rows (or columns for the y transform)
//
// Work inside a row is never split between threads and no kernel reduces
// across rows, so both variants produce bit-identical results for any
// thread count. The unit tests hold them to that.

#include <complex>
#include <cstddef>
#include <span>

namespace wavelab::kernels {

using Complex = std::complex<double>;

namespace serial {

/// out_row = Re IFFT(symbol .* FFT(in_row)); `symbol` has `cols` entries in DFT order.
void apply_x_symbol(std::span<const double> in, std::span<double> out, std::size_t cols,
                    std::span<const Complex> symbol);

/// Row-wise product evaluated through a 3/2 zero-padded transform; every
/// output mode with 3|k| >= n is then dropped (2/3 rule).
void dealiased_product(std::span<const double> f, std::span<const double> g, std::span<double> out,
                       std::size_t cols);

/// Full 2-D forward DFT (unnormalized), rows first then columns.
void forward_2d(std::span<const double> in, std::span<Complex> out, std::size_t rows, std::size_t cols);

/// 2-D inverse DFT with the 1/(rows*cols) factor, keeping the real part.
void inverse_2d_real(std::span<const Complex> in, std::span<double> out, std::size_t rows, std::size_t cols);

/// out[j] = sum_k weight[k] |F_jk|^2 with F_j the DFT of row j.
void row_spectral_energy(std::span<const double> in, std::size_t cols, std::span<const double> weight,
                         std::span<double> out);

/// out[j] = sum_i in[j, i], accumulated left to right.
void row_sums(std::span<const double> in, std::size_t cols, std::span<double> out);

}  // namespace serial

namespace parallel {

void apply_x_symbol(std::span<const double> in, std::span<double> out, std::size_t cols,
                    std::span<const Complex> symbol);
void dealiased_product(std::span<const double> f, std::span<const double> g, std::span<double> out,
                       std::size_t cols);
void forward_2d(std::span<const double> in, std::span<Complex> out, std::size_t rows, std::size_t cols);
void inverse_2d_real(std::span<const Complex> in, std::span<double> out, std::size_t rows, std::size_t cols);
void row_spectral_energy(std::span<const double> in, std::size_t cols, std::span<const double> weight,
                         std::span<double> out);
void row_sums(std::span<const double> in, std::size_t cols, std::span<double> out);

}  // namespace parallel

/// Cap on OpenMP worker threads; n <= 0 restores the runtime default.
void set_max_threads(int n);
int max_threads();

}  // namespace wavelab::kernels
