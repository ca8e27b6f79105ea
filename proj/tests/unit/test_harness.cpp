#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/harness.hpp"
#include "wavelab/norms.hpp"
#include "wavelab/spectral.hpp"

namespace wavelab::harness {
namespace {

using testing::sech;

Grid2D small_plane() { return Grid2D{Grid1D(32.0, 64), Grid1D(16.0, 32)}; }

TEST(InitialData, TanhBlendRows) {
  const Grid2D g = small_plane();
  const Field1D p = gaussian_derivative(g.x, 0.5, 2.0);
  const Field1D m = gaussian_derivative(g.x, -0.3, 2.0);
  const Field2D psi = build_psi(InitialDataSpec{p, m}, g);
  for (std::size_t j = 0; j < g.y.count(); j += 5) {
    const double th = std::tanh(g.y.node(j));
    for (std::size_t i = 0; i < g.x.count(); i += 7) {
      EXPECT_NEAR(psi.at(j, i), 0.5 * (p[i] + m[i]) + 0.5 * (p[i] - m[i]) * th, 1e-15);
    }
  }
}

TEST(InitialData, BumpAddsSechProfile) {
  const Grid2D g = small_plane();
  const Field1D p = gaussian_derivative(g.x, 0.5, 2.0);
  const Field1D bump = wave_packet(g.x, 0.01, 2.0, 2.0);
  const Field2D psi = build_psi(InitialDataSpec{p, p, Profile::LocalizedBump, bump}, g);
  const auto s = norms::hk_x_slice_norms(psi - Field2D::replicate(g, p), 1.0);
  for (std::size_t j = 0; j < s.size(); ++j) EXPECT_NEAR(s[j], norms::hk_x_norm(bump, 1.0) * sech(g.y.node(j)), 1e-14);
  EXPECT_THROW(build_psi(InitialDataSpec{p, p, Profile::LocalizedBump}, g), InvalidArgument);
}

TEST(InitialData, RejectsNonzeroMean) {
  const Grid2D g = small_plane();
  const Field1D shifted = Field1D::sample(g.x, [](double) { return 0.1; });
  EXPECT_THROW(build_psi(InitialDataSpec{shifted, shifted}, g), NonzeroMean);
}

TEST(InitialData, ProfilesHaveZeroMean) {
  const Grid1D g(64.0, 256);
  EXPECT_NEAR(x_integral(gaussian_derivative(g, 1.0, 4.0)), 0.0, 1e-13);
  EXPECT_NEAR(x_integral(wave_packet(g, 1.0, 3.0, 3.0)), 0.0, 1e-12);
}

TEST(BuildW, VanishesOnTheBlend) {
  const Grid2D g = small_plane();
  const Field1D p = gaussian_derivative(g.x, 0.5, 2.0);
  const Field1D m = gaussian_derivative(g.x, 0.2, 1.5);
  const Field2D psi = build_psi(InitialDataSpec{p, m}, g);
  EXPECT_LT(max_abs(build_w(psi, p, m).values()), 1e-15);
  EXPECT_THROW((void)build_w(psi, Field1D::zeros(Grid1D(1.0, 8)), m), GridMismatch);
}

TEST(Polynomials, PAndQ) {
  EXPECT_DOUBLE_EQ(poly_P(1.0, 2.0, 3.0, 4.0), 0.25 * (3.0 + 8.0 + 6.0 + 4.0));
  EXPECT_DOUBLE_EQ(poly_Q(1.0, 3.0), 4.0);
  EXPECT_THROW((void)poly_P(-1.0, 0.0, 0.0, 0.0), InvalidArgument);
  EXPECT_THROW((void)poly_Q(0.0, -1.0), InvalidArgument);
}

TEST(Gronwall, BoundClosedForm) {
  GronwallBundle b;
  b.C1_plus = 0.25;
  b.C1_minus = 0.75;
  b.C_star = 2.0;
  EXPECT_DOUBLE_EQ(gronwall_bound(0.5, b, 0.0), 0.5);
  EXPECT_NEAR(gronwall_bound(0.5, b, 2.0), 0.5 + 2.5 * std::expm1(2.0), 1e-13);
  EXPECT_THROW((void)gronwall_bound(0.5, b, -1.0), InvalidArgument);
}

TEST(Gronwall, ConstantsOnYIndependentData) {
  const Grid2D g = small_plane();
  const Field1D u = gaussian_derivative(g.x, 0.5, 2.0);
  const auto all = gronwall_constants_all(Field2D::replicate(g, u), u, u, 1);
  const std::size_t j0 = g.y.nearest_index(0.0);
  const double h1 = norms::hk_x_norm(u, 1.0);
  for (const auto& c : all) {
    EXPECT_EQ(c.D_eta, 0.0);
    EXPECT_EQ(c.D_eta_inv, 0.0);
    EXPECT_NEAR(c.C1_plus + c.C1_minus, h1, 1e-15);
    EXPECT_NEAR(c.C_k, all[j0].C_k * sech(c.y) * sech(c.y), 1e-15);
    EXPECT_NEAR(c.C_star, c.C_k / h1, 1e-15);
  }
  const auto single = gronwall_constants(Field2D::replicate(g, u), u, u, 3, 1);
  EXPECT_DOUBLE_EQ(single.C_star, all[3].C_star);
}

TEST(Gronwall, SupremumRecomputesCStar) {
  GronwallBundle a, b;
  a.D_eta = 1.0;
  a.C1_plus = 1.0;
  b.C_k = 2.0;
  b.C1_minus = 3.0;
  const auto s = supremum(a, b);
  EXPECT_DOUBLE_EQ(s.D_eta, 1.0);
  EXPECT_DOUBLE_EQ(s.C_k, 2.0);
  EXPECT_DOUBLE_EQ(s.C_star, 3.0 / 4.0);
}

TEST(Gronwall, ZeroDenominator) {
  const Grid2D g = small_plane();
  const Field1D z = Field1D::zeros(g.x);
  EXPECT_THROW((void)gronwall_constants(Field2D::zeros(g), z, z, 0, 1), ZeroDenominator);
}

class ShortRun : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const Grid2D g = small_plane();
    const Field1D p = gaussian_derivative(g.x, 0.5, 2.0);
    InitialDataSpec d{p, p, Profile::LocalizedBump, wave_packet(g.x, 0.01, 2.0, 2.0), 1, 3.0};
    tr_ = new Trajectories(run_models(RunSpec{g, BbmKpParams{}, TimeGrid{5e-3, 0.1, 5}, Scheme::IntegratingFactorRk4, d}));
  }
  static void TearDownTestSuite() {
    delete tr_;
    tr_ = nullptr;
  }
  static Trajectories* tr_;
};
Trajectories* ShortRun::tr_ = nullptr;

TEST_F(ShortRun, TimesAligned) {
  EXPECT_EQ(tr_->eta.times, tr_->u_plus.times);
  EXPECT_EQ(tr_->eta.times, tr_->u_minus.times);
  EXPECT_EQ(tr_->eta.times.size(), 5u);
}

TEST_F(ShortRun, ResidualIsRoundOff) {
  for (std::size_t n = 0; n < tr_->eta.times.size(); ++n) {
    const auto r = slice_l2_norms(w_residual(*tr_, n));
    for (double v : r) EXPECT_LT(v, 1e-11);
  }
}

TEST_F(ShortRun, DroppingTheTransverseTermIsDetected) {
  const std::size_t n = tr_->eta.times.size() - 1;
  const double with = norms::l2_norm(w_residual(*tr_, n));
  const double without = norms::l2_norm(w_residual(*tr_, n, {true}));
  EXPECT_GT(without, 1e3 * with);
}

TEST_F(ShortRun, ReportStructure) {
  const auto rep = convergence_report(*tr_, 1, 3.0, 5e-3);
  EXPECT_TRUE(rep.regularity_ok);
  EXPECT_FALSE(rep.extra_theorem);
  ASSERT_EQ(rep.rows.size(), rep.times.size());
  ASSERT_EQ(rep.zero_slices.size(), 1u);
  for (std::size_t n = 0; n < rep.rows.size(); ++n) {
    ASSERT_EQ(rep.rows[n].size(), rep.y_slices.size());
    for (const auto& r : rep.rows[n]) {
      EXPECT_EQ(r.t, rep.times[n]);
      EXPECT_LE(r.w_norm, r.bound * (1.0 + 1e-12) + 1e-15);
      EXPECT_GE(r.constants.C_star, 0.0);
    }
  }
  EXPECT_EQ(rep.at(0, 0).w0_norm, rep.w0_norms[0]);
  const auto low = convergence_report(*tr_, 2, 2.5, 5e-3);
  EXPECT_FALSE(low.regularity_ok);
  EXPECT_FALSE(low.warnings.empty());
  EXPECT_TRUE(convergence_report(*tr_, 0, 3.0, 5e-3).extra_theorem);
  EXPECT_THROW((void)convergence_report(*tr_, -1, 3.0, 5e-3), InvalidArgument);
}

TEST_F(ShortRun, TimeIndexLookup) {
  EXPECT_EQ(time_index(tr_->eta.times, 0.05), 2u);
  EXPECT_THROW((void)time_index(tr_->eta.times, 0.051), InvalidArgument);
}

TEST(Residual, TimeMisalignmentIsReported) {
  const Grid2D g = small_plane();
  const Field1D p = gaussian_derivative(g.x, 0.5, 2.0);
  auto tr = run_models(RunSpec{g, BbmKpParams{}, TimeGrid{5e-3, 0.02, 1}, Scheme::IntegratingFactorRk4,
                               InitialDataSpec{p, p}});
  tr.u_plus.times[1] += 1e-3;
  EXPECT_THROW((void)w_residual(tr, 1), TimeMisalignment);
}

}  // namespace
}  // namespace wavelab::harness
