// Randomized properties. Each case draws its inputs from a seeded generator
// so failures are reproducible from the printed case index.

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "wavelab/config.hpp"
#include "wavelab/io.hpp"
#include "wavelab/models.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/spectral.hpp"
#include "wavelab/verify.hpp"

namespace wavelab {
namespace {

constexpr int kCases = 40;

struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::size_t even_count(std::size_t lo, std::size_t hi) {
    return 2 * static_cast<std::size_t>(rng.uniform(static_cast<double>(lo / 2), static_cast<double>(hi / 2 + 1)));
  }
  Grid1D grid() { return Grid1D(rng.uniform(1.0, 50.0), even_count(8, 128)); }
  Field1D field(const Grid1D& g) {
    const std::size_t modes = 1 + static_cast<std::size_t>(rng.uniform(0.0, static_cast<double>(g.count() / 3 - 1)));
    return verify::random_band_limited(g, modes, rng);
  }
  Field2D plane(const Grid2D& g) {
    std::vector<Field1D> rows;
    for (std::size_t j = 0; j < g.y.count(); ++j) rows.push_back(field(g.x));
    return Field2D::from_rows(g, rows);
  }
  double real(double lo, double hi) { return rng.uniform(lo, hi); }

  verify::Rng rng;
};

double scale(const Field1D& f) { return std::max(1.0, max_abs(f.values())); }

TEST(Property, DerivativeIsLinear) {
  Gen gen(101);
  for (int c = 0; c < kCases; ++c) {
    const Grid1D g = gen.grid();
    const Field1D f = gen.field(g), h = gen.field(g);
    const double a = gen.real(-2.0, 2.0), b = gen.real(-2.0, 2.0);
    const Field1D lhs = derivative_x(a * f + b * h, 1);
    const Field1D rhs = a * derivative_x(f, 1) + b * derivative_x(h, 1);
    EXPECT_LT(max_abs_difference(lhs.values(), rhs.values()), 1e-11 * scale(lhs)) << "case " << c;
  }
}

TEST(Property, AntiderivativeInvertsDerivative) {
  Gen gen(102);
  for (int c = 0; c < kCases; ++c) {
    const Grid1D g = gen.grid();
    const Field1D f = gen.field(g);
    const Field1D back = antiderivative_x(derivative_x(f, 1));
    EXPECT_LT(max_abs_difference(back.values(), f.values()), 1e-12 * scale(f)) << "case " << c;
  }
}

TEST(Property, ParsevalOnRandomGrids) {
  Gen gen(103);
  for (int c = 0; c < kCases; ++c) {
    const Grid1D g = gen.grid();
    const Field1D f = gen.field(g);
    EXPECT_NEAR(norms::l2_norm(f), norms::quadrature_l2_norm(f), 1e-12 * norms::l2_norm(f)) << "case " << c;
  }
}

TEST(Property, SobolevNormsIncreaseWithOrder) {
  Gen gen(104);
  for (int c = 0; c < kCases; ++c) {
    const Field1D f = gen.field(gen.grid());
    double prev = norms::hk_x_norm(f, 0.0);
    for (double k : {0.5, 1.0, 2.0, 3.0}) {
      const double v = norms::hk_x_norm(f, k);
      EXPECT_GE(v, prev) << "case " << c << " k " << k;
      prev = v;
    }
  }
}

TEST(Property, DealiasedProductIsSymmetricAndBilinear) {
  Gen gen(105);
  for (int c = 0; c < kCases; ++c) {
    const Grid1D g = gen.grid();
    const Field1D f = gen.field(g), h = gen.field(g), k = gen.field(g);
    const double a = gen.real(-3.0, 3.0);
    const Field1D fh = dealiased_product(f, h);
    EXPECT_LT(max_abs_difference(fh.values(), dealiased_product(h, f).values()), 1e-14 * scale(fh)) << "case " << c;
    const Field1D lhs = dealiased_product(f, a * h + k);
    const Field1D rhs = a * fh + dealiased_product(f, k);
    EXPECT_LT(max_abs_difference(lhs.values(), rhs.values()), 1e-12 * scale(lhs)) << "case " << c;
  }
}

TEST(Property, DealiasedProductMatchesOracle) {
  Gen gen(106);
  for (int c = 0; c < 10; ++c) {
    const Grid1D g(gen.real(1.0, 20.0), gen.even_count(8, 64));
    const Field1D f = verify::random_band_limited(g, g.count() / 2 - 1, gen.rng);
    const Field1D h = verify::random_band_limited(g, g.count() / 2 - 1, gen.rng);
    const auto want = verify::padded_product_oracle(f, h);
    const Field1D got = dealiased_product(f, h);
    const double tol = 1e-12 * static_cast<double>(g.count()) * scale(f) * scale(h);
    for (std::size_t m = 0; m < want.size(); ++m) EXPECT_LT(std::abs(got.spectrum()[m] - want[m]), tol);
  }
}

TEST(Property, PropagatorIsAnIsometricGroup) {
  Gen gen(107);
  for (int c = 0; c < kCases; ++c) {
    const Grid1D g = gen.grid();
    const Field1D f = gen.field(g);
    const double t = gen.real(-5.0, 5.0), s = gen.real(-5.0, 5.0);
    const auto sym = DispersionSymbol::bbm(gen.real(0.5, 2.0));
    const Field1D two = linear_propagator(linear_propagator(f, t, sym), s, sym);
    const Field1D one = linear_propagator(f, t + s, sym);
    EXPECT_LT(max_abs_difference(two.values(), one.values()), 1e-12 * scale(f)) << "case " << c;
    EXPECT_NEAR(norms::hk_x_norm(one, 1.0), norms::hk_x_norm(f, 1.0), 1e-12 * norms::hk_x_norm(f, 1.0));
  }
}

TEST(Property, BbmRhsConservesMeanAndEnergy) {
  // d/dt of the mean is zero, and <u, (1 - d^2) u_t> = 0 for the H1 energy.
  Gen gen(108);
  for (int c = 0; c < kCases; ++c) {
    const Grid1D g = gen.grid();
    const Field1D u = gen.field(g);
    const Field1D du = bbm_rhs(u, BbmParams{gen.real(0.5, 2.0), false});
    EXPECT_NEAR(x_integral(du), 0.0, 1e-12 * g.length() * scale(du)) << "case " << c;
    const Field1D m = du - derivative_x(du, 2);
    double dot = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * m[i];
    EXPECT_NEAR(dot * g.spacing(), 0.0, 1e-10 * scale(u) * scale(m) * g.length()) << "case " << c;
  }
}

TEST(Property, BbmKpLinearRhsIsSkewAdjoint) {
  Gen gen(109);
  for (int c = 0; c < 10; ++c) {
    const Grid2D g{Grid1D(gen.real(5.0, 30.0), gen.even_count(8, 32)), Grid1D(gen.real(5.0, 30.0), gen.even_count(8, 32))};
    const Field2D a = gen.plane(g);
    const int gamma = c % 2 == 0 ? 1 : -1;
    const Field2D da = bbmkp_rhs(a, BbmKpParams{1.0, gamma, false});
    // L is a real odd multiplier, so <a, L a> = 0.
    double dot = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) dot += a.values()[i] * da.values()[i];
    EXPECT_NEAR(dot, 0.0, 1e-9 * static_cast<double>(g.size()) * max_abs(da.values())) << "case " << c;
  }
}

TEST(Property, KpCorrectionWithinQuarticBound) {
  Gen gen(110);
  for (int c = 0; c < 500; ++c) {
    const double xi = gen.real(0.01, 10.0) * (c % 2 ? 1.0 : -1.0);
    const double mu = gen.real(-0.5, 0.5) * std::abs(xi);
    const double bound = std::abs(xi) * std::pow(mu / xi, 4) / 8.0;
    EXPECT_LE(kp_correction_error(xi, mu), bound * (1.0 + 1e-12)) << "case " << c;
    EXPECT_GE(kp_correction_error(xi, mu), 0.0);
  }
}

TEST(Property, SnapshotRoundTripIsExact) {
  Gen gen(111);
  for (int c = 0; c < 10; ++c) {
    const Grid2D g{gen.grid(), Grid1D(gen.real(1.0, 10.0), gen.even_count(8, 16))};
    const Field2D f = gen.plane(g);
    std::stringstream ss;
    io::write_snapshot(ss, f, gen.real(0.0, 10.0), "x");
    const Field2D back = io::read_snapshot(ss).field2d();
    EXPECT_TRUE(back.grid() == g);
    EXPECT_EQ(max_abs_difference(back.values(), f.values()), 0.0) << "case " << c;
  }
}

TEST(Property, ConfigCanonicalRoundTrip) {
  Gen gen(112);
  for (int c = 0; c < 20; ++c) {
    ExperimentConfig cfg;
    cfg.alpha = gen.real(0.1, 3.0);
    cfg.lx = gen.real(1.0, 100.0);
    cfg.nx = gen.even_count(8, 512);
    cfg.time.dt = gen.real(1e-4, 1e-1);
    cfg.bump_amplitude = gen.real(-1.0, 1.0);
    cfg.seed = static_cast<std::uint64_t>(gen.real(0.0, 1e15));
    const auto back = parse_config_text(canonical_text(cfg));
    EXPECT_EQ(canonical_text(back), canonical_text(cfg)) << "case " << c;
    EXPECT_EQ(back.alpha, cfg.alpha);
    EXPECT_EQ(back.time.dt, cfg.time.dt);
  }
}

}  // namespace
}  // namespace wavelab
