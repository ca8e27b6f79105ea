#include "wavelab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "verify_internal.hpp"
#include "wavelab/config.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/harness.hpp"
#include "wavelab/kernels.hpp"
#include "wavelab/models.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/spectral.hpp"
#include "wavelab/timestepper.hpp"

namespace wavelab::verify {

using detail::num;
using detail::Outcome;
using detail::sci;

constexpr double kPi = std::numbers::pi;

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform(double lo, double hi) {
  // 53 random bits mapped to [0, 1); the engine output is fixed by the standard.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Field1D random_band_limited(const Grid1D& grid, std::size_t max_mode, Rng& rng) {
  std::vector<double> a(max_mode + 1), b(max_mode + 1);
  for (std::size_t m = 1; m <= max_mode; ++m) {
    a[m] = rng.uniform(-1.0, 1.0) / static_cast<double>(m);
    b[m] = rng.uniform(-1.0, 1.0) / static_cast<double>(m);
  }
  const double base = 2.0 * kPi / grid.length();
  return Field1D::sample(grid, [&](double x) {
    double acc = 0.0;
    for (std::size_t m = 1; m <= max_mode; ++m) {
      const double arg = base * static_cast<double>(m) * x;
      acc += a[m] * std::cos(arg) + b[m] * std::sin(arg);
    }
    return acc;
  });
}

std::vector<Complex> padded_product_oracle(const Field1D& f, const Field1D& g) {
  require_same_grid(f.grid(), g.grid(), "padded_product_oracle");
  const std::size_t n = f.size();
  const long half = static_cast<long>(n / 2);
  // Coefficients indexed by mode + half, modes -n/2..n/2.
  auto coefficients = [&](const Field1D& h) {
    std::vector<Complex> c(n + 1, Complex(0.0, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
      const long k = mode_index(s, n);
      const Complex v = h.spectrum()[s] / static_cast<double>(n);
      if (k == -half) {
        c[0] += 0.5 * v;
        c[n] += 0.5 * v;
      } else {
        c[static_cast<std::size_t>(k + half)] = v;
      }
    }
    return c;
  };
  const auto cf = coefficients(f);
  const auto cg = coefficients(g);
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    const long k = mode_index(s, n);
    if (3 * std::labs(k) >= static_cast<long>(n)) continue;
    Complex acc(0.0, 0.0);
    for (long p = -half; p <= half; ++p) {
      const long q = k - p;
      if (q < -half || q > half) continue;
      acc += cf[static_cast<std::size_t>(p + half)] * cg[static_cast<std::size_t>(q + half)];
    }
    out[s] = acc * static_cast<double>(n);
  }
  return out;
}

std::vector<std::string> acceptance_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 10; ++i) ids.push_back("AC" + std::to_string(i));
  return ids;
}

std::string summary_text(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += (r.pass ? "PASS " : "FAIL ") + r.id + " " + r.name + ": " + r.detail + "\n";
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

namespace detail {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

CheckResult timed(const std::string& id, const std::string& name, const VerifyOptions& opt,
                  const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "FAILED unexpected exception: " << e.what() << "; ";
  }
  CheckResult r{id, name, o.pass, o.detail.str(), 0.0};
  if (!r.detail.empty() && r.detail.size() >= 2) r.detail.resize(r.detail.size() - 2);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opt.progress) {
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", r.seconds);
    *opt.progress << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << t << ")\n";
  }
  return r;
}

namespace {

bool close_rel(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(std::abs(want), 1e-300);
}

}  // namespace

void norm_oracles(Outcome& o) {
  const Grid1D g2pi(2.0 * kPi, 64);
  const Field1D s = Field1D::sample(g2pi, [](double x) { return std::sin(x); });
  const double l2 = norms::hk_x_norm(s, 0.0);
  const double h1 = norms::hk_x_norm(s, 1.0);
  o.expect(close_rel(l2, std::sqrt(kPi), 1e-10), "|sin|_L2 = sqrt(pi), got " + num(l2));
  o.expect(close_rel(h1, std::sqrt(2.0 * kPi), 1e-10), "|sin|_H1 = sqrt(2 pi), got " + num(h1));

  // sech on a wide torus: |sech|^2 = 2, |sech'|^2 = 2/3, |sech''|^2 = 14/15.
  const Grid1D wide(64.0, 512);
  const Field1D sech = Field1D::sample(wide, [](double x) { return 1.0 / std::cosh(x); });
  const double want_h1 = std::sqrt(2.0 + 2.0 / 3.0);
  const double want_h2 = std::sqrt(2.0 + 2.0 * (2.0 / 3.0) + 14.0 / 15.0);
  o.expect(close_rel(norms::hk_x_norm(sech, 0.0), std::sqrt(2.0), 1e-10), "|sech|_L2 = sqrt 2");
  o.expect(close_rel(norms::hk_x_norm(sech, 1.0), want_h1, 1e-10), "|sech|_H1 = sqrt(8/3)");
  o.expect(close_rel(norms::hk_x_norm(sech, 2.0), want_h2, 1e-10), "|sech|_H2 closed form");
  o.expect(close_rel(norms::quadrature_l2_norm(sech), norms::l2_norm(sech), 1e-10), "Parseval for sech");
  o.expect(norms::linf_norm(sech) == 1.0, "|sech|_inf = 1 at the node x = 0");

  const Grid2D torus{Grid1D(2.0 * kPi, 32), Grid1D(2.0 * kPi, 32)};
  const Field2D ss = Field2D::sample(torus, [](double x, double y) { return std::sin(x) * std::sin(y); });
  o.expect(close_rel(norms::hs_norm_2d(ss, 0.0), kPi, 1e-10), "|sin x sin y|_H0 = pi");
  o.expect(close_rel(norms::hs_norm_2d(ss, 1.0), kPi * std::sqrt(3.0), 1e-10), "|sin x sin y|_H1 = pi sqrt 3");
  o.expect(close_rel(norms::quadrature_l2_norm(ss), norms::l2_norm(ss), 1e-10), "planar Parseval");
  const auto aux = norms::auxiliary_norms(ss);
  o.expect(close_rel(aux.y_energy, 2.0 * kPi, 1e-10), "Y energy of sin x sin y = 2 pi");
  o.expect(aux.w1 >= aux.y_energy, "W1 >= Y energy");

  const Field2D sx = Field2D::sample(torus, [](double x, double) { return std::sin(x); });
  const double hm1 = norms::hs_minus1_norm(sx, 0.0);
  o.expect(close_rel(hm1, 2.0 * norms::l2_norm(sx), 1e-10), "H^0_-1 weight 4 at |xi| = 1");
  o.expect(hm1 >= norms::hs_norm_2d(sx, 0.0), "H^s_-1 dominates H^s");

  const Grid2D slab{Grid1D(2.0 * kPi, 32), Grid1D(24.0, 64)};
  const Field2D sep = Field2D::sample(slab, [](double x, double y) { return std::sin(x) / std::cosh(y); });
  const auto slices = norms::hk_x_slice_norms(sep, 1.0);
  double worst = 0.0;
  for (std::size_t j = 0; j < slices.size(); ++j) {
    const double want = std::sqrt(2.0 * kPi) / std::cosh(slab.y.node(j));
    worst = std::max(worst, std::abs(slices[j] - want) / want);
  }
  o.expect(worst <= 1e-10, "slice H1 norms of sech(y) sin x, worst rel " + sci(worst));

  bool rejected = false;
  try {
    (void)norms::hs_minus1_norm(Field2D::sample(torus, [](double x, double) { return 1.0 + std::sin(x); }), 0.0);
  } catch (const NonzeroMean&) {
    rejected = true;
  }
  o.expect(rejected, "H^s_-1 rejects a field with x-mean 1");
  o.note("sin, sech and planar oracles within 1e-10");
}

void pq_inequality(Outcome& o, std::uint64_t seed) {
  Rng rng(seed);
  const Grid1D grid(2.0 * kPi, 64);
  auto pq = [](const Field1D& up, const Field1D& um, int k) {
    const Field1D dp = derivative_x(up, k);
    const Field1D dm = derivative_x(um, k);
    const double p = harness::poly_P(norms::l2_norm(dp), norms::l2_norm(dm), norms::linf_norm(up),
                                     norms::linf_norm(um));
    const double q = harness::poly_Q(norms::hk_x_norm(dp, 1.0), norms::hk_x_norm(dm, 1.0));
    return std::pair{p, q};
  };
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto up = random_band_limited(grid, 1 + static_cast<std::size_t>(rng.uniform(0.0, 12.0)), rng);
    const auto um = random_band_limited(grid, 1 + static_cast<std::size_t>(rng.uniform(0.0, 12.0)), rng);
    const auto [p, q] = pq(up, um, 1);
    if (!(p <= q)) ++violations;
    worst = std::max(worst, p / q);
  }
  o.expect(violations == 0, std::to_string(violations) + " random pairs with P > Q");
  o.note("100 random pairs, max P/Q " + sci(worst));

  const Grid1D wide(64.0, 512);
  const Field1D sp = Field1D::sample(wide, [](double x) { return 1.0 / std::cosh(x); });
  const Field1D sm = Field1D::sample(wide, [](double x) { return 1.0 / std::cosh(2.0 * x); });
  const auto [p, q] = pq(sp, sm, 1);
  // Closed forms for sech(a x): |u'|^2 = 2a/3, |u''|^2 = 14 a^3/15, |u|_inf = 1.
  const double a1 = std::sqrt(2.0 / 3.0), a2 = std::sqrt(4.0 / 3.0);
  const double q1 = std::sqrt(2.0 / 3.0 + 14.0 / 15.0), q2 = std::sqrt(4.0 / 3.0 + 14.0 * 8.0 / 15.0);
  o.expect(close_rel(p, harness::poly_P(a1, a2, 1.0, 1.0), 1e-10), "sech pair P matches closed form");
  o.expect(close_rel(q, harness::poly_Q(q1, q2), 1e-10), "sech pair Q matches closed form");
  o.expect(p <= q, "sech pair P <= Q");
  o.note("sech pair P " + sci(p) + " Q " + sci(q));
}

void kp_correction_scan(Outcome& o) {
  int checked = 0;
  int violations = 0;
  double worst = 0.0;
  const auto xis = io::linspace(0.05, 8.0, 160);
  for (double sign : {-1.0, 1.0}) {
    for (double x : xis) {
      const double xi = sign * x;
      for (double r : io::linspace(0.0, 0.5, 101)) {
        const double mu = r * x;
        const double rel = kp_correction_error(xi, mu) / std::abs(xi);
        const double bound = std::pow(mu / xi, 4) / 8.0;
        ++checked;
        if (!(rel <= bound * (1.0 + 1e-6))) ++violations;
        if (bound > 0.0) worst = std::max(worst, rel / bound);
      }
    }
  }
  o.expect(violations == 0, std::to_string(violations) + " scan points above (mu/xi)^4/8");
  double prev = -1.0;
  bool monotone = true;
  for (double r : io::linspace(0.01, 0.99, 99)) {
    const double e = kp_correction_error(1.0, r);
    monotone = monotone && e > prev;
    prev = e;
  }
  o.expect(monotone, "error increases with |mu/xi| on (0, 1)");
  o.expect(kp_correction_error(1.0, 0.0) == 0.0, "zero error at mu = 0");
  o.note(std::to_string(checked) + " scan points, max error/bound " + num(std::round(worst * 1e6) / 1e6));
}

}  // namespace detail

namespace {

using detail::timed;

double max_abs_complex(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

void check_wavenumbers(Outcome& o) {
  o.expect(wavenumbers(2.0 * kPi, 4) == std::vector<double>{0.0, 1.0, -2.0, -1.0}, "L = 2 pi, n = 4");
  o.expect(wavenumbers(4.0 * kPi, 4) == std::vector<double>{0.0, 0.5, -1.0, -0.5}, "L = 4 pi, n = 4");
  const auto xi = wavenumbers(Grid1D(7.0, 48));
  o.expect(std::count(xi.begin(), xi.end(), 0.0) == 1, "exactly one zero wavenumber");
  o.note("DFT ordering for n = 4 and n = 48");
}

void check_transforms(Outcome& o, Rng& rng) {
  double parseval = 0.0;
  double roundtrip = 0.0;
  for (double length : {2.0 * kPi, 10.0}) {
    const Grid1D grid(length, 64);
    for (int i = 0; i < 10; ++i) {
      const Field1D f = random_band_limited(grid, 31, rng);
      const double q = norms::quadrature_l2_norm(f);
      parseval = std::max(parseval, std::abs(norms::l2_norm(f) - q) / q);
      const Field1D back = Field1D::from_spectrum(grid, f.spectrum());
      roundtrip = std::max(roundtrip, max_abs_difference(back.values(), f.values()) / max_abs(f.values()));
    }
  }
  o.expect(parseval <= 1e-10, "Parseval rel error " + sci(parseval));
  o.expect(roundtrip <= 1e-12, "round trip rel error " + sci(roundtrip));
  o.note("Parseval and round trip on 20 random fields");
}

void check_calculus(Outcome& o, Rng& rng) {
  const Grid1D grid(2.0 * kPi, 64);
  const Field1D s = Field1D::sample(grid, [](double x) { return std::sin(x); });
  const Field1D c = Field1D::sample(grid, [](double x) { return std::cos(x); });
  o.expect(max_abs_difference(derivative_x(s, 1).values(), c.values()) < 1e-12, "d/dx sin = cos");
  o.expect(max_abs_difference(antiderivative_x(s).values(), (-1.0 * c).values()) < 1e-12, "inverse d/dx sin = -cos");
  o.expect(max_abs(derivative_x(Field1D::sample(grid, [](double) { return 3.0; }), 2).values()) == 0.0,
           "derivative of a constant is zero");
  bool rejected = false;
  try {
    (void)antiderivative_x(Field1D::sample(grid, [](double x) { return 1.0 + std::sin(x); }));
  } catch (const NonzeroMean&) {
    rejected = true;
  }
  o.expect(rejected, "antiderivative rejects mean 1");
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    const Field1D f = random_band_limited(grid, 20, rng);
    const Field1D back = derivative_x(antiderivative_x(f), 1);
    worst = std::max(worst, max_abs_difference(back.values(), f.values()) / max_abs(f.values()));
    o.expect(std::abs(x_integral(antiderivative_x(f))) < 1e-13, "antiderivative has zero mean");
  }
  o.expect(worst < 1e-12, "d/dx of the antiderivative reproduces f, rel " + sci(worst));
  o.note("analytic derivative oracles");
}

void check_dealiasing(Outcome& o, Rng& rng, bool tamper) {
  auto product = [tamper](const Field1D& f, const Field1D& g) {
    if (!tamper) return dealiased_product(f, g);
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] * g[i];
    return Field1D(f.grid(), std::move(v));
  };
  double worst = 0.0;
  auto compare = [&](const Field1D& f, const Field1D& g) {
    const auto want = padded_product_oracle(f, g);
    const Field1D got = product(f, g);
    const double scale = static_cast<double>(f.size()) * max_abs(f.values()) * max_abs(g.values());
    double err = 0.0;
    for (std::size_t k = 0; k < want.size(); ++k) err = std::max(err, std::abs(got.spectrum()[k] - want[k]));
    worst = std::max(worst, err / scale);
  };
  const Grid1D grid(2.0 * kPi, 64);
  compare(Field1D::sample(grid, [](double x) { return std::cos(x); }),
          Field1D::sample(grid, [](double x) { return std::cos(2.0 * x); }));
  compare(Field1D::sample(grid, [](double x) { return std::cos(30.0 * x); }),
          Field1D::sample(grid, [](double x) { return std::cos(29.0 * x); }));
  for (int i = 0; i < 20; ++i) compare(random_band_limited(grid, 31, rng), random_band_limited(grid, 31, rng));
  const Field1D zero = Field1D::zeros(grid);
  o.expect(max_abs(product(zero, zero).values()) == 0.0, "0 * 0 = 0");
  o.expect(worst <= 1e-10, "padded-oracle mismatch " + sci(worst));
  o.note("22 pairs against the padded oracle");
}

void check_symbols(Outcome& o, Rng& rng) {
  const Grid1D gx(10.0, 64);
  const Field1D u = random_band_limited(gx, 31, rng);
  const Field1D du = bbm_rhs(u, BbmParams{1.0, false});
  const auto xi = wavenumbers(gx);
  double err = 0.0;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    if (k == xi.size() / 2) continue;
    const Complex want = Complex(0.0, -omega1(xi[k])) * u.spectrum()[k];
    err = std::max(err, std::abs(du.spectrum()[k] - want));
  }
  err /= max_abs_complex(u.spectrum());
  o.expect(err <= 1e-12, "linear BBM rhs vs -i omega1, rel " + sci(err));
  o.expect(std::abs(x_integral(bbm_rhs(u, BbmParams{}))) <= 1e-14 * norms::l2_norm(u), "bbm_rhs preserves mean");

  const Grid2D grid{Grid1D(10.0, 32), Grid1D(8.0, 16)};
  std::vector<Field1D> rows;
  for (std::size_t j = 0; j < grid.y.count(); ++j) rows.push_back(random_band_limited(grid.x, 15, rng));
  const Field2D eta = Field2D::from_rows(grid, rows);
  const auto mu = wavenumbers(grid.y);
  const auto kx = wavenumbers(grid.x);
  std::vector<Complex> spec(grid.size()), dspec(grid.size());
  kernels::parallel::forward_2d(eta.values(), spec, grid.y.count(), grid.x.count());
  for (int gamma : {1, -1}) {
    const Field2D d = bbmkp_rhs(eta, BbmKpParams{1.0, gamma, false});
    kernels::parallel::forward_2d(d.values(), dspec, grid.y.count(), grid.x.count());
    double e2 = 0.0, scale = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      for (std::size_t k = 1; k < kx.size(); ++k) {
        if (k == kx.size() / 2) continue;
        const std::size_t at = j * kx.size() + k;
        const Complex want = Complex(0.0, -omega2(kx[k], mu[j], gamma)) * spec[at];
        e2 = std::max(e2, std::abs(dspec[at] - want));
        scale = std::max(scale, std::abs(want));
      }
    }
    o.expect(e2 <= 1e-12 * scale, "linear BBM-KP rhs vs -i omega2 (gamma " + std::to_string(gamma) + "), rel " +
                                      sci(e2 / scale));
  }
  o.expect(omega1(1.0) == 0.5 && omega2(1.0, 0.0, 1) == 0.5 && omega2(1.0, 1.0, -1) == 0.0, "symbol values");
  o.note("mode-wise symbol identities");
}

void check_row_consistency(Outcome& o, Rng& rng) {
  const Grid2D grid{Grid1D(20.0, 64), Grid1D(10.0, 24)};
  const Field1D u = random_band_limited(grid.x, 20, rng);
  const Field2D eta = Field2D::replicate(grid, u);
  const Field1D want = bbm_rhs(u, BbmParams{});
  const Field2D got = bbmkp_rhs(eta, BbmKpParams{});
  bool identical = true;
  for (std::size_t j = 0; j < grid.y.count(); ++j) {
    const auto row = got.row(j);
    identical = identical && std::equal(row.begin(), row.end(), want.values().begin());
  }
  o.expect(identical, "y-independent BBM-KP rows equal bbm_rhs bitwise");
  bool rejected = false;
  try {
    (void)bbmkp_rhs(Field2D::sample(grid, [](double x, double) { return 1.0 + std::sin(x); }), BbmKpParams{});
  } catch (const NonzeroMean&) {
    rejected = true;
  }
  o.expect(rejected, "bbmkp_rhs rejects x-mean 1");
  o.note("24 replicated slices");
}

void check_rk4_order(Outcome& o) {
  const Grid1D grid(2.0 * kPi, 64);
  const Field1D u0 = Field1D::sample(grid, [](double x) { return std::exp(std::sin(x)); });
  const Field1D exact = linear_propagator(u0, 1.0, DispersionSymbol::bbm());
  std::vector<double> errs;
  for (double dt : {1e-2, 5e-3, 2.5e-3}) {
    const auto tr = integrate(bbm_problem(BbmParams{1.0, false}, grid), u0, TimeGrid{dt, 1.0, 1000});
    errs.push_back(max_abs_difference(tr.states.back().values(), exact.values()));
  }
  const double slope = std::log2(errs[0] / errs[2]) / 2.0;
  const double ratio = errs[0] / errs[1];
  o.expect(slope >= 3.8 && slope <= 4.2, "observed order " + num(std::round(slope * 1000) / 1000));
  o.expect(ratio >= 14.0 && ratio <= 18.0, "halving ratio " + num(std::round(ratio * 100) / 100));
  o.note("errors " + sci(errs[0]) + ", " + sci(errs[1]) + ", " + sci(errs[2]));
}

void check_parallel_kernels(Outcome& o, Rng& rng) {
  const int saved = kernels::max_threads();
  kernels::set_max_threads(4);
  const std::size_t rows = 32, cols = 64;
  std::vector<double> a(rows * cols), b(rows * cols);
  for (auto& v : a) v = rng.uniform(-1.0, 1.0);
  for (auto& v : b) v = rng.uniform(-1.0, 1.0);
  std::vector<Complex> symbol(cols);
  for (auto& s : symbol) s = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  std::vector<double> s1(a.size()), p1(a.size());
  kernels::serial::apply_x_symbol(a, s1, cols, symbol);
  kernels::parallel::apply_x_symbol(a, p1, cols, symbol);
  o.expect(s1 == p1, "apply_x_symbol serial == parallel");
  kernels::serial::dealiased_product(a, b, s1, cols);
  kernels::parallel::dealiased_product(a, b, p1, cols);
  o.expect(s1 == p1, "dealiased_product serial == parallel");
  std::vector<Complex> sc(a.size()), pc(a.size());
  kernels::serial::forward_2d(a, sc, rows, cols);
  kernels::parallel::forward_2d(a, pc, rows, cols);
  o.expect(sc == pc, "forward_2d serial == parallel");
  kernels::serial::inverse_2d_real(sc, s1, rows, cols);
  kernels::parallel::inverse_2d_real(sc, p1, rows, cols);
  o.expect(s1 == p1, "inverse_2d_real serial == parallel");
  std::vector<double> w(cols, 1.5), se(rows), pe(rows);
  kernels::serial::row_spectral_energy(a, cols, w, se);
  kernels::parallel::row_spectral_energy(a, cols, w, pe);
  o.expect(se == pe, "row_spectral_energy serial == parallel");
  kernels::serial::row_sums(a, cols, se);
  kernels::parallel::row_sums(a, cols, pe);
  o.expect(se == pe, "row_sums serial == parallel");
  kernels::set_max_threads(saved);
  o.note("bitwise equal with 4 threads");
}

void check_gronwall_algebra(Outcome& o) {
  harness::GronwallBundle b;
  b.C_star = 0.0;
  b.C1_plus = 0.5;
  b.C1_minus = 0.5;
  o.expect(std::abs(harness::gronwall_bound(1.0, b, 1.0) - std::exp(1.0)) <= 1e-15, "closed form e");
  b.C_star = 3.0;
  o.expect(harness::gronwall_bound(0.7, b, 0.0) == 0.7, "bound equals w0 at t = 0");

  const Grid2D grid{Grid1D(32.0, 64), Grid1D(16.0, 32)};
  const Field1D phi = harness::gaussian_derivative(grid.x, 0.5, 2.0);
  const Field2D eta = Field2D::replicate(grid, phi);
  const auto all = harness::gronwall_constants_all(eta, phi, phi, 1);
  const double h1 = norms::hk_x_norm(phi, 1.0);
  const double ck0 = all[grid.y.nearest_index(0.0)].C_k;
  double worst_sum = 0.0, worst_ratio = 0.0, worst_d = 0.0;
  for (const auto& g : all) {
    worst_sum = std::max(worst_sum, std::abs(g.C1_plus + g.C1_minus - h1) / h1);
    const double th = std::tanh(g.y);
    worst_ratio = std::max(worst_ratio, std::abs(g.C_k / ck0 - (1.0 - th * th)));
    worst_d = std::max(worst_d, g.D_eta);
  }
  o.expect(worst_sum <= 1e-15, "C1+ + C1- = |u|_H1 when u+ = u-");
  o.expect(worst_ratio <= 1e-12, "C_k(y)/C_k(0) = 1 - tanh^2 y");
  o.expect(worst_d == 0.0, "D = 0 for y-independent eta");
  bool thrown = false;
  try {
    (void)harness::gronwall_constants(Field2D::zeros(grid), Field1D::zeros(grid.x), Field1D::zeros(grid.x), 0, 1);
  } catch (const ZeroDenominator&) {
    thrown = true;
  }
  o.expect(thrown, "ZeroDenominator for vanishing u+-");
  o.note("closed forms and y-profiles of the constants");
}

void check_harness_small(Outcome& o) {
  const Grid2D grid{Grid1D(32.0, 64), Grid1D(16.0, 32)};
  const Field1D phi = harness::gaussian_derivative(grid.x, 0.5, 2.0);
  const Field1D g = harness::wave_packet(grid.x, 0.01, 2.0, 2.0);
  harness::InitialDataSpec spec{phi, phi, harness::Profile::LocalizedBump, g, 1, 2.0};
  const Field2D psi = harness::build_psi(spec, grid);
  const auto slice = norms::hk_x_slice_norms(psi - Field2D::replicate(grid, phi), 1.0);
  const double gn = norms::hk_x_norm(g, 1.0);
  double worst = 0.0;
  for (std::size_t j = 0; j < slice.size(); ++j) {
    const double want = gn / std::cosh(grid.y.node(j));
    worst = std::max(worst, std::abs(slice[j] - want) / want);
  }
  o.expect(worst <= 1e-12, "bump slices follow sech(y) |g|_H1, rel " + sci(worst));

  harness::RunSpec run{grid, BbmKpParams{}, TimeGrid{5e-3, 0.05, 5}, Scheme::IntegratingFactorRk4, spec};
  const auto tr = harness::run_models(run);
  double res = 0.0, gap = 0.0;
  for (std::size_t n = 0; n < tr.eta.times.size(); ++n) {
    const auto r = harness::slice_l2_norms(harness::w_residual(tr, n));
    res = std::max(res, *std::max_element(r.begin(), r.end()));
    const auto dropped = harness::slice_l2_norms(harness::w_residual(tr, n, {true}));
    const auto forcing = harness::slice_l2_norms(transverse_derivative(tr.eta.states[n], -1));
    for (std::size_t j = 0; j < r.size(); ++j) gap = std::max(gap, std::abs(dropped[j] - forcing[j]) - r[j]);
  }
  o.expect(res <= 1e-10, "w residual " + sci(res));
  o.expect(gap <= 1e-12, "dropping the transverse term adds exactly its norm");
  o.expect(!harness::convergence_report(tr, 1, 1.5, 5e-3).regularity_ok, "s = 1.5 < k + 1 is flagged");
  o.note("10 steps, residual " + sci(res));
  o.expect(harness::convergence_report(tr, 0, 2.0, 5e-3).extra_theorem, "k = 0 is labelled extra-theorem");
}

void check_config(Outcome& o) {
  const ExperimentConfig defaults;
  const ExperimentConfig reparsed = parse_config_text(canonical_text(defaults));
  o.expect(config_hash(reparsed) == config_hash(defaults), "canonical text round trip keeps the hash");
  o.expect(config_hash(parse_config_json(R"({"grid": {"nx": 256}})")) == config_hash(defaults),
           "JSON and text encodings agree");
  std::string field;
  try {
    validate(parse_config_text("params.gamma = 2\n"));
  } catch (const ConfigInvalid& e) {
    field = e.field();
  }
  o.expect(field == "params.gamma", "gamma = 2 is rejected naming params.gamma");
  o.note("hash " + config_hash(defaults));
}

}  // namespace

std::vector<CheckResult> run_fast_suite(const VerifyOptions& opt) {
  Rng rng(opt.seed);
  std::vector<CheckResult> out;
  out.push_back(timed("F01", "wavenumbers", opt, check_wavenumbers));
  out.push_back(timed("F02", "transforms", opt, [&](Outcome& o) { check_transforms(o, rng); }));
  out.push_back(timed("F03", "derivatives", opt, [&](Outcome& o) { check_calculus(o, rng); }));
  out.push_back(timed("F04", "dealiasing", opt, [&](Outcome& o) { check_dealiasing(o, rng, opt.tamper_dealias); }));
  out.push_back(timed("F05", "norm oracles", opt, detail::norm_oracles));
  out.push_back(timed("F06", "dispersion symbols", opt, [&](Outcome& o) { check_symbols(o, rng); }));
  out.push_back(timed("F07", "slice consistency", opt, [&](Outcome& o) { check_row_consistency(o, rng); }));
  out.push_back(timed("F08", "rk4 order", opt, check_rk4_order));
  out.push_back(timed("F09", "parallel kernels", opt, [&](Outcome& o) { check_parallel_kernels(o, rng); }));
  out.push_back(timed("F10", "P <= Q", opt, [&](Outcome& o) { detail::pq_inequality(o, opt.seed); }));
  out.push_back(timed("F11", "kp correction", opt, detail::kp_correction_scan));
  out.push_back(timed("F12", "gronwall algebra", opt, check_gronwall_algebra));
  out.push_back(timed("F13", "harness smoke run", opt, check_harness_small));
  out.push_back(timed("F14", "config", opt, check_config));
  return out;
}

std::vector<CheckResult> run_full_suite(const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  auto out = run_fast_suite(opt);
  auto acc = run_acceptance(opt, start);
  out.insert(out.end(), acc.begin(), acc.end());
  out.push_back(timed("F15", "criterion coverage", opt, [&](Outcome& o) {
    for (const auto& id : acceptance_ids()) {
      const bool ran = std::any_of(acc.begin(), acc.end(), [&](const CheckResult& r) { return r.id == id; });
      o.expect(ran, id + " did not run");
    }
    o.note(std::to_string(acceptance_ids().size()) + " acceptance ids covered");
  }));
  return out;
}

}  // namespace wavelab::verify
