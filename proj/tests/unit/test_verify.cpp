#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "wavelab/spectral.hpp"
#include "wavelab/verify.hpp"

namespace wavelab::verify {
namespace {

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& id) {
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.id == id; });
  EXPECT_NE(it, rs.end()) << id;
  return *it;
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(11), b(11), c(12);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform(-2.0, 3.0);
    EXPECT_EQ(x, b.uniform(-2.0, 3.0));
    EXPECT_GE(x, -2.0);
    EXPECT_LT(x, 3.0);
    differs = differs || x != c.uniform(-2.0, 3.0);
  }
  EXPECT_TRUE(differs);
}

TEST(RandomBandLimited, ZeroMeanAndBandLimited) {
  Rng rng(1);
  const Grid1D g(5.0, 32);
  const Field1D f = random_band_limited(g, 6, rng);
  EXPECT_NEAR(x_integral(f), 0.0, 1e-13);
  for (std::size_t k = 7; k <= 25; ++k) EXPECT_LT(std::abs(f.spectrum()[k]), 1e-12);
  EXPECT_GT(std::abs(f.spectrum()[6]), 0.0);
}

TEST(PaddedOracle, ProductOfCosines) {
  const Grid1D g(2.0 * std::numbers::pi, 16);
  const Field1D a = Field1D::sample(g, [](double x) { return std::cos(x); });
  const auto spec = padded_product_oracle(a, a);
  // cos^2 x = 1/2 + cos(2x)/2: n/2 at k = 0 and n/4 at k = +-2.
  EXPECT_NEAR(spec[0].real(), 8.0, 1e-12);
  EXPECT_NEAR(spec[2].real(), 4.0, 1e-12);
  EXPECT_NEAR(spec[14].real(), 4.0, 1e-12);
  EXPECT_NEAR(std::abs(spec[1]), 0.0, 1e-12);
}

TEST(FastSuite, PassesAndIsDeterministic) {
  const auto first = run_fast_suite(VerifyOptions{});
  for (const auto& r : first) EXPECT_TRUE(r.pass) << r.id << " " << r.detail;
  EXPECT_EQ(summary_text(first), summary_text(run_fast_suite(VerifyOptions{})));
  EXPECT_TRUE(all_passed(first));
}

TEST(FastSuite, TamperedDealiasingIsCaught) {
  VerifyOptions opt;
  opt.tamper_dealias = true;
  const auto rs = run_fast_suite(opt);
  const auto& d = find(rs, "F04");
  EXPECT_FALSE(d.pass);
  EXPECT_NE(d.detail.find("padded-oracle"), std::string::npos);
  EXPECT_FALSE(all_passed(rs));
}

TEST(Summary, FormatsLines) {
  const std::vector<CheckResult> rs{{"X1", "one", true, "fine", 1.0}, {"X2", "two", false, "bad", 2.0}};
  EXPECT_EQ(summary_text(rs), "PASS X1 one: fine\nFAIL X2 two: bad\n");
  EXPECT_FALSE(all_passed(rs));
}

TEST(AcceptanceIds, TenCriteria) {
  const auto ids = acceptance_ids();
  ASSERT_EQ(ids.size(), 10u);
  EXPECT_EQ(ids.front(), "AC1");
  EXPECT_EQ(ids.back(), "AC10");
}

}  // namespace
}  // namespace wavelab::verify
