#include "wavelab/kernels.hpp"

#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wavelab/errors.hpp"
#include "wavelab/fft.hpp"
#include "wavelab/grid.hpp"

namespace wavelab::kernels {
namespace {

std::size_t row_count(std::size_t total, std::size_t cols) {
  if (cols == 0 || total % cols != 0) throw InvalidArgument("kernel: block size is not a multiple of the row length");
  return total / cols;
}

// Per-thread work buffers; rows never share them.
struct Scratch {
  std::vector<Complex> a, b, c, d;
  std::vector<double> r1, r2;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

void symbol_row(const double* in, double* out, std::size_t n, std::span<const Complex> symbol) {
  auto& s = scratch();
  s.a.resize(n);
  fft::forward_real(std::span<const double>(in, n), s.a);
  for (std::size_t k = 0; k < n; ++k) s.a[k] *= symbol[k];
  fft::inverse_to_real(s.a, std::span<double>(out, n));
}

// Places the n-point spectrum `src` into the m-point array `dst` (m > n),
// splitting the unpaired Nyquist coefficient evenly between +n/2 and -n/2
// so that the padded trigonometric interpolant stays real.
void pad_spectrum(std::span<const Complex> src, std::span<Complex> dst) {
  const std::size_t n = src.size();
  const std::size_t m = dst.size();
  std::fill(dst.begin(), dst.end(), Complex(0.0, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    const long k = mode_index(s, n);
    if (k == -static_cast<long>(n / 2)) {
      dst[n / 2] += 0.5 * src[s];
      dst[m - n / 2] += 0.5 * src[s];
    } else {
      dst[static_cast<std::size_t>((k + static_cast<long>(m)) % static_cast<long>(m))] = src[s];
    }
  }
}

void product_row(const double* f, const double* g, double* out, std::size_t n) {
  const std::size_t m = 3 * n / 2;
  auto& s = scratch();
  s.a.resize(n);
  s.b.resize(m);
  s.c.resize(m);
  s.d.resize(m);
  s.r1.resize(m);
  s.r2.resize(m);
  const double up = static_cast<double>(m) / static_cast<double>(n);

  fft::forward_real(std::span<const double>(f, n), s.a);
  pad_spectrum(s.a, s.b);
  fft::inverse_to_real(s.b, s.r1);
  fft::forward_real(std::span<const double>(g, n), s.a);
  pad_spectrum(s.a, s.b);
  fft::inverse_to_real(s.b, s.r2);
  for (std::size_t j = 0; j < m; ++j) s.r1[j] = (s.r1[j] * up) * (s.r2[j] * up);
  fft::forward_real(s.r1, s.d);

  for (std::size_t slot = 0; slot < n; ++slot) {
    const long k = mode_index(slot, n);
    if (3 * std::labs(k) < static_cast<long>(n)) {
      s.a[slot] = s.d[static_cast<std::size_t>((k + static_cast<long>(m)) % static_cast<long>(m))] / up;
    } else {
      s.a[slot] = Complex(0.0, 0.0);
    }
  }
  fft::inverse_to_real(s.a, std::span<double>(out, n));
}

void energy_row(const double* in, std::size_t n, std::span<const double> weight, double* out) {
  auto& s = scratch();
  s.a.resize(n);
  fft::forward_real(std::span<const double>(in, n), s.a);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) acc += weight[k] * std::norm(s.a[k]);
  *out = acc;
}

double sum_row(const double* in, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += in[i];
  return acc;
}

void real_row_forward(const double* in, Complex* out, std::size_t n) {
  fft::forward_real(std::span<const double>(in, n), std::span<Complex>(out, n));
}

template <bool Inverse>
void column_transform(Complex* data, std::size_t col, std::size_t rows, std::size_t cols) {
  auto& s = scratch();
  s.c.resize(rows);
  s.d.resize(rows);
  for (std::size_t j = 0; j < rows; ++j) s.c[j] = data[j * cols + col];
  if constexpr (Inverse) {
    fft::inverse(s.c, s.d);
  } else {
    fft::forward(s.c, s.d);
  }
  for (std::size_t j = 0; j < rows; ++j) data[j * cols + col] = s.d[j];
}

void inverse_row_to_real(const Complex* in, double* out, std::size_t n) {
  fft::inverse_to_real(std::span<const Complex>(in, n), std::span<double>(out, n));
}

void check_symbol(std::span<const Complex> symbol, std::size_t cols) {
  if (symbol.size() != cols) throw InvalidArgument("apply_x_symbol: symbol length differs from row length");
}

}  // namespace

namespace serial {

void apply_x_symbol(std::span<const double> in, std::span<double> out, std::size_t cols,
                    std::span<const Complex> symbol) {
  const std::size_t rows = row_count(in.size(), cols);
  check_symbol(symbol, cols);
  for (std::size_t j = 0; j < rows; ++j) symbol_row(in.data() + j * cols, out.data() + j * cols, cols, symbol);
}

void dealiased_product(std::span<const double> f, std::span<const double> g, std::span<double> out,
                       std::size_t cols) {
  const std::size_t rows = row_count(f.size(), cols);
  for (std::size_t j = 0; j < rows; ++j) {
    product_row(f.data() + j * cols, g.data() + j * cols, out.data() + j * cols, cols);
  }
}

void forward_2d(std::span<const double> in, std::span<Complex> out, std::size_t rows, std::size_t cols) {
  for (std::size_t j = 0; j < rows; ++j) real_row_forward(in.data() + j * cols, out.data() + j * cols, cols);
  for (std::size_t i = 0; i < cols; ++i) column_transform<false>(out.data(), i, rows, cols);
}

void inverse_2d_real(std::span<const Complex> in, std::span<double> out, std::size_t rows, std::size_t cols) {
  std::vector<Complex> work(in.begin(), in.end());
  for (std::size_t i = 0; i < cols; ++i) column_transform<true>(work.data(), i, rows, cols);
  for (std::size_t j = 0; j < rows; ++j) inverse_row_to_real(work.data() + j * cols, out.data() + j * cols, cols);
}

void row_spectral_energy(std::span<const double> in, std::size_t cols, std::span<const double> weight,
                         std::span<double> out) {
  const std::size_t rows = row_count(in.size(), cols);
  for (std::size_t j = 0; j < rows; ++j) energy_row(in.data() + j * cols, cols, weight, &out[j]);
}

void row_sums(std::span<const double> in, std::size_t cols, std::span<double> out) {
  const std::size_t rows = row_count(in.size(), cols);
  for (std::size_t j = 0; j < rows; ++j) out[j] = sum_row(in.data() + j * cols, cols);
}

}  // namespace serial

namespace parallel {

// Loop indices are signed for OpenMP 2.x compatibility.

void apply_x_symbol(std::span<const double> in, std::span<double> out, std::size_t cols,
                    std::span<const Complex> symbol) {
  const auto rows = static_cast<long>(row_count(in.size(), cols));
  check_symbol(symbol, cols);
#pragma omp parallel for schedule(static)
  for (long j = 0; j < rows; ++j) {
    const auto r = static_cast<std::size_t>(j);
    symbol_row(in.data() + r * cols, out.data() + r * cols, cols, symbol);
  }
}

void dealiased_product(std::span<const double> f, std::span<const double> g, std::span<double> out,
                       std::size_t cols) {
  const auto rows = static_cast<long>(row_count(f.size(), cols));
#pragma omp parallel for schedule(static)
  for (long j = 0; j < rows; ++j) {
    const auto r = static_cast<std::size_t>(j);
    product_row(f.data() + r * cols, g.data() + r * cols, out.data() + r * cols, cols);
  }
}

void forward_2d(std::span<const double> in, std::span<Complex> out, std::size_t rows, std::size_t cols) {
  const auto nr = static_cast<long>(rows);
  const auto nc = static_cast<long>(cols);
#pragma omp parallel for schedule(static)
  for (long j = 0; j < nr; ++j) {
    const auto r = static_cast<std::size_t>(j);
    real_row_forward(in.data() + r * cols, out.data() + r * cols, cols);
  }
#pragma omp parallel for schedule(static)
  for (long i = 0; i < nc; ++i) column_transform<false>(out.data(), static_cast<std::size_t>(i), rows, cols);
}

void inverse_2d_real(std::span<const Complex> in, std::span<double> out, std::size_t rows, std::size_t cols) {
  std::vector<Complex> work(in.begin(), in.end());
  const auto nr = static_cast<long>(rows);
  const auto nc = static_cast<long>(cols);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < nc; ++i) column_transform<true>(work.data(), static_cast<std::size_t>(i), rows, cols);
#pragma omp parallel for schedule(static)
  for (long j = 0; j < nr; ++j) {
    const auto r = static_cast<std::size_t>(j);
    inverse_row_to_real(work.data() + r * cols, out.data() + r * cols, cols);
  }
}

void row_spectral_energy(std::span<const double> in, std::size_t cols, std::span<const double> weight,
                         std::span<double> out) {
  const auto rows = static_cast<long>(row_count(in.size(), cols));
#pragma omp parallel for schedule(static)
  for (long j = 0; j < rows; ++j) {
    const auto r = static_cast<std::size_t>(j);
    energy_row(in.data() + r * cols, cols, weight, &out[r]);
  }
}

void row_sums(std::span<const double> in, std::size_t cols, std::span<double> out) {
  const auto rows = static_cast<long>(row_count(in.size(), cols));
#pragma omp parallel for schedule(static)
  for (long j = 0; j < rows; ++j) {
    const auto r = static_cast<std::size_t>(j);
    out[r] = sum_row(in.data() + r * cols, cols);
  }
}

}  // namespace parallel

void set_max_threads(int n) {
#ifdef _OPENMP
  static const int runtime_default = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : runtime_default);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace wavelab::kernels
