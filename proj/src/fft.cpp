#include "wavelab/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "wavelab/errors.hpp"

namespace wavelab::fft {
namespace {

// FFTW's planner is not reentrant; execution of an existing plan on new
// arrays is. Plans are created once per (length, direction) and never freed.
// They are planned on FFTW-allocated arrays so the SIMD codelets are usable;
// every execution goes through equally aligned thread-local buffers, which
// keeps the arithmetic identical from call to call.
class PlanCache {
 public:
  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign, FFTW_ESTIMATE);
    fftw_free(in);
    fftw_free(out);
    if (plan == nullptr) throw InvalidArgument("FFTW could not plan a transform of length " + std::to_string(n));
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

/// Thread-local FFTW-aligned array that only grows.
class AlignedBuffer {
 public:
  AlignedBuffer() = default;
  AlignedBuffer(const AlignedBuffer&) = delete;
  AlignedBuffer& operator=(const AlignedBuffer&) = delete;
  ~AlignedBuffer() { fftw_free(data_); }

  fftw_complex* reserve(std::size_t n) {
    if (n > capacity_) {
      fftw_free(data_);
      data_ = fftw_alloc_complex(n);
      if (data_ == nullptr) throw InvalidArgument("fft: allocation failed");
      capacity_ = n;
    }
    return data_;
  }

 private:
  fftw_complex* data_ = nullptr;
  std::size_t capacity_ = 0;
};

/// Transform through the aligned buffers; the caller copies in and out.
struct Workspace {
  AlignedBuffer in, out;
  fftw_complex* src = nullptr;
  fftw_complex* dst = nullptr;
  std::size_t last_n = 0;
  int last_sign = 0;
  fftw_plan last_plan = nullptr;

  void prepare(std::size_t n) {
    src = in.reserve(n);
    dst = out.reserve(n);
  }
  void run(std::size_t n, int sign) {
    if (n != last_n || sign != last_sign) {
      last_plan = cache().get(n, sign);
      last_n = n;
      last_sign = sign;
    }
    fftw_execute_dft(last_plan, src, dst);
  }
};

Workspace& workspace() {
  thread_local Workspace ws;
  return ws;
}

Complex* as_complex(fftw_complex* p) { return reinterpret_cast<Complex*>(p); }

void execute(std::span<const Complex> in, std::span<Complex> out, int sign) {
  if (in.size() != out.size()) throw InvalidArgument("fft: input and output lengths differ");
  if (in.empty()) return;
  auto& ws = workspace();
  ws.prepare(in.size());
  std::copy(in.begin(), in.end(), as_complex(ws.src));
  ws.run(in.size(), sign);
  std::copy_n(as_complex(ws.dst), out.size(), out.begin());
}

}  // namespace

void forward(std::span<const Complex> in, std::span<Complex> out) { execute(in, out, FFTW_FORWARD); }

void inverse(std::span<const Complex> in, std::span<Complex> out) {
  execute(in, out, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& c : out) c *= scale;
}

void forward_real(std::span<const double> in, std::span<Complex> out) {
  if (in.size() != out.size()) throw InvalidArgument("fft: input and output lengths differ");
  if (in.empty()) return;
  auto& ws = workspace();
  ws.prepare(in.size());
  Complex* src = as_complex(ws.src);
  for (std::size_t j = 0; j < in.size(); ++j) src[j] = Complex(in[j], 0.0);
  ws.run(in.size(), FFTW_FORWARD);
  std::copy_n(as_complex(ws.dst), out.size(), out.begin());
}

double inverse_to_real_residue(std::span<const Complex> in, std::span<double> out) {
  if (in.size() != out.size()) throw InvalidArgument("fft: input and output lengths differ");
  if (in.empty()) return 0.0;
  auto& ws = workspace();
  ws.prepare(in.size());
  std::copy(in.begin(), in.end(), as_complex(ws.src));
  ws.run(in.size(), FFTW_BACKWARD);
  const Complex* raw = as_complex(ws.dst);
  const double scale = 1.0 / static_cast<double>(in.size());
  double residue = 0.0;
  for (std::size_t j = 0; j < in.size(); ++j) {
    out[j] = raw[j].real() * scale;
    residue = std::max(residue, std::abs(raw[j].imag() * scale));
  }
  return residue;
}

void inverse_to_real(std::span<const Complex> in, std::span<double> out) { inverse_to_real_residue(in, out); }

}  // namespace wavelab::fft
