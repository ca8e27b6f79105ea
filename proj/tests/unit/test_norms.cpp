#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/norms.hpp"

namespace wavelab::norms {
namespace {

using testing::kPi;
using testing::sech;

TEST(Norms, SineOracles) {
  const Field1D s = Field1D::sample(testing::torus(), [](double x) { return std::sin(x); });
  EXPECT_NEAR(l2_norm(s), std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(quadrature_l2_norm(s), std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(hk_x_norm(s, 0.0), std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(hk_x_norm(s, 1.0), std::sqrt(2.0 * kPi), 1e-13);
  EXPECT_NEAR(hk_x_norm(s, 2.0), std::sqrt(4.0 * kPi), 1e-12);
  EXPECT_NEAR(linf_norm(s), 1.0, 1e-12);
}

TEST(Norms, SechClosedForms) {
  // |sech|^2 = 2, |sech'|^2 = 2/3, |sech''|^2 = 14/15 on the line.
  const Field1D f = Field1D::sample(Grid1D(64.0, 512), [](double x) { return sech(x); });
  EXPECT_NEAR(hk_x_norm(f, 0.0), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(hk_x_norm(f, 1.0), std::sqrt(8.0 / 3.0), 1e-12);
  EXPECT_NEAR(hk_x_norm(f, 2.0), std::sqrt(2.0 + 4.0 / 3.0 + 14.0 / 15.0), 1e-12);
}

TEST(Norms, FractionalOrderInterpolates) {
  const Field1D f = Field1D::sample(testing::torus(), [](double x) { return std::sin(2.0 * x); });
  // Single mode |xi| = 2: |f|_{H^s}^2 = pi (1 + 4)^s.
  EXPECT_NEAR(hk_x_norm(f, 0.5), std::sqrt(kPi * std::sqrt(5.0)), 1e-12);
  EXPECT_THROW((void)hk_x_norm(f, -1.0), InvalidArgument);
}

TEST(Norms, PlanarOracles) {
  const Grid2D g{testing::torus(32), testing::torus(32)};
  const Field2D f = Field2D::sample(g, [](double x, double y) { return std::sin(x) * std::sin(y); });
  EXPECT_NEAR(l2_norm(f), kPi, 1e-12);
  EXPECT_NEAR(quadrature_l2_norm(f), kPi, 1e-12);
  EXPECT_NEAR(hs_norm_2d(f, 1.0), kPi * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(linf_norm(f), 1.0, 1e-2);
}

TEST(Norms, SliceNormsFollowTheProfile) {
  const Grid2D g{testing::torus(32), Grid1D(24.0, 64)};
  const Field2D f = Field2D::sample(g, [](double x, double y) { return std::sin(x) * sech(y); });
  const auto s = hk_x_slice_norms(f, 1.0);
  ASSERT_EQ(s.size(), 64u);
  for (std::size_t j = 0; j < s.size(); ++j) EXPECT_NEAR(s[j], std::sqrt(2.0 * kPi) * sech(g.y.node(j)), 1e-12);
  EXPECT_NEAR(evaluate(NormSpec{NormKind::Hk_x, 1.0}, f), std::sqrt(2.0 * kPi) * std::sqrt(2.0), 1e-9);
}

TEST(Norms, AntiderivativeWeightedNorm) {
  const Grid2D g{testing::torus(32), testing::torus(16)};
  const Field2D f = Field2D::sample(g, [](double x, double) { return std::sin(3.0 * x); });
  // Weight (1 + 1/3)^2 (1 + 9)^s on the single mode.
  const double base = l2_norm(f);
  EXPECT_NEAR(hs_minus1_norm(f, 0.0), base * 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(hs_minus1_norm(f, 1.0), base * 4.0 / 3.0 * std::sqrt(10.0), 1e-11);
  const Field2D shifted = Field2D::sample(g, [](double x, double) { return 0.5 + std::sin(x); });
  EXPECT_THROW((void)hs_minus1_norm(shifted, 0.0), NonzeroMean);
}

TEST(Norms, AuxiliaryNorms) {
  const Grid2D g{testing::torus(32), testing::torus(32)};
  const Field2D f = Field2D::sample(g, [](double x, double y) { return std::sin(x) * std::sin(y); });
  const auto a = auxiliary_norms(f);
  EXPECT_NEAR(a.y_energy, 2.0 * kPi, 1e-12);
  // |f| + |f_x| + |f_xx| + |d_x^-1 f_y| + |f_y|, each pi.
  EXPECT_NEAR(a.w1, 5.0 * kPi, 1e-11);
}

TEST(Norms, EvaluateDispatches) {
  const Grid2D g{testing::torus(32), testing::torus(32)};
  const Field2D f = Field2D::sample(g, [](double x, double y) { return std::sin(x) * std::sin(y); });
  EXPECT_NEAR(evaluate(NormSpec{NormKind::L2, 0.0}, f), kPi, 1e-12);
  EXPECT_NEAR(evaluate(NormSpec{NormKind::Hs_2d, 1.0}, f), kPi * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(evaluate(NormSpec{NormKind::Y_energy, 0.0}, f), 2.0 * kPi, 1e-12);
}

}  // namespace
}  // namespace wavelab::norms
