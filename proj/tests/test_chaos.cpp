#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "lucrypt/chaos.hpp"

namespace {

using namespace lucrypt;

// Independent oracle: RK4 on a plain array with n sub-steps of h/n.
std::array<double, 3> oracle_rk4(std::array<double, 3> u, double h, int n) {
  const double a = 36.0, b = 3.0, c = 20.0;
  auto f = [&](const std::array<double, 3>& s) {
    return std::array<double, 3>{a * (s[1] - s[0]), c * s[1] - s[0] * s[2], s[0] * s[1] - b * s[2]};
  };
  const double dt = h / n;
  for (int step = 0; step < n; ++step) {
    std::array<double, 3> k[4], tmp;
    k[0] = f(u);
    for (int i = 0; i < 3; ++i) tmp[i] = u[i] + 0.5 * dt * k[0][i];
    k[1] = f(tmp);
    for (int i = 0; i < 3; ++i) tmp[i] = u[i] + 0.5 * dt * k[1][i];
    k[2] = f(tmp);
    for (int i = 0; i < 3; ++i) tmp[i] = u[i] + dt * k[2][i];
    k[3] = f(tmp);
    for (int i = 0; i < 3; ++i) u[i] += dt / 6.0 * (k[0][i] + 2 * k[1][i] + 2 * k[2][i] + k[3][i]);
  }
  return u;
}

TEST(LuParams, DefaultsAreTheChaoticRegime) {
  const LuParams p;
  EXPECT_EQ(p.a, 36.0);
  EXPECT_EQ(p.b, 3.0);
  EXPECT_EQ(p.c, 20.0);
}

TEST(LuDerivative, FixedPointAtOrigin) {
  EXPECT_EQ(lu_derivative({0, 0, 0}, {}), (LuState{0, 0, 0}));
}

TEST(LuDerivative, HandSubstitution) {
  EXPECT_EQ(lu_derivative({1, 1, 1}, {}), (LuState{0, 19, -2}));
  EXPECT_EQ(lu_derivative({1, 2, 3}, {}), (LuState{36, 37, -7}));
}

TEST(LuStep, ZeroStepIsIdentity) {
  const LuState s{-6.045, 2.668, 16.363};
  EXPECT_EQ(lu_step(s, {}, 0.0), s);
}

TEST(LuStep, OriginIsFixed) {
  EXPECT_EQ(lu_step({0, 0, 0}, {}, 0.001), (LuState{0, 0, 0}));
  EXPECT_EQ(lu_step({0, 0, 0}, {}, 0.5), (LuState{0, 0, 0}));
}

TEST(LuStep, MatchesHighPrecisionReference) {
  // Taylor-series solution at 40 digits, t = 0.001 from the vertices key.
  const LuState s = lu_step({-6.045, 2.668, 16.363}, {}, 0.001);
  EXPECT_NEAR(s.x, -5.7342171618617894022, 1e-9);
  EXPECT_NEAR(s.y, 2.819048153020052859, 1e-9);
  EXPECT_NEAR(s.z, 16.297854505093629668, 1e-9);
}

TEST(LuStep, MatchesIndependentFineStepOracle) {
  const LuState s = lu_step({-6.045, 2.668, 16.363}, {}, 0.001);
  const auto ref = oracle_rk4({-6.045, 2.668, 16.363}, 0.001, 10);
  EXPECT_NEAR(s.x, ref[0], 1e-9);
  EXPECT_NEAR(s.y, ref[1], 1e-9);
  EXPECT_NEAR(s.z, ref[2], 1e-9);
}

TEST(LuStep, StepDoublingGapIsFifthOrder) {
  // One step at h vs two at h/2. Reference gaps from the same scheme in
  // 30-digit arithmetic: at h = 1e-3 the gap is ~4e-10, intrinsic to RK4 here.
  const LuState s0{-6.045, 2.668, 16.363};
  auto gap = [&](double h) {
    const LuState full = lu_step(s0, {}, h);
    const LuState half = lu_step(lu_step(s0, {}, h / 2), {}, h / 2);
    return std::array<double, 3>{full.x - half.x, full.y - half.y, full.z - half.z};
  };
  const auto g1 = gap(0.001);
  EXPECT_NEAR(g1[0], -3.99646e-10, 5e-14);
  EXPECT_NEAR(g1[1], 2.5808e-11, 5e-14);
  EXPECT_NEAR(g1[2], 3.75067e-10, 5e-14);
  // halving h shrinks the gap by ~2^5
  const auto g2 = gap(0.0005);
  EXPECT_NEAR(g1[0] / g2[0], 32.0, 1.0);
  EXPECT_NEAR(g1[2] / g2[2], 32.0, 1.0);
}

TEST(LuStep, RejectsNonFiniteResult) {
  const double big = std::numeric_limits<double>::max();
  EXPECT_THROW(lu_step({big, -big, big}, {}, 1.0), KeystreamError);
}

TEST(GenerateStream, InterleavesXYZAfterBurnIn) {
  const LuKey key{-6.045, 2.668, 16.363};
  const Keystream ks = generate_stream(key, 5, {}, 0.001, 3);
  LuState s = key.state();
  for (int i = 0; i < 3; ++i) s = lu_step(s, {}, 0.001);
  const LuState s1 = lu_step(s, {}, 0.001);
  const LuState s2 = lu_step(s1, {}, 0.001);
  ASSERT_EQ(ks.size(), 5u);
  EXPECT_EQ(ks[0], s1.x);
  EXPECT_EQ(ks[1], s1.y);
  EXPECT_EQ(ks[2], s1.z);
  EXPECT_EQ(ks[3], s2.x);
  EXPECT_EQ(ks[4], s2.y);
  EXPECT_EQ(ks.origin(), key);
}

TEST(GenerateStream, DeterministicAndPrefixClosed) {
  const LuKey key{-5.045, 3.668, 16.363};
  const Keystream a = generate_stream(key, 1000);
  const Keystream b = generate_stream(key, 1000);
  EXPECT_EQ(a.values(), b.values());
  for (std::size_t n : {1u, 2u, 3u, 7u, 301u}) {
    const Keystream p = generate_stream(key, n);
    ASSERT_EQ(p.size(), n);
    EXPECT_TRUE(std::equal(p.values().begin(), p.values().end(), a.values().begin()));
  }
}

TEST(GenerateStream, RejectsZeroLengthAndBadKeys) {
  EXPECT_THROW(generate_stream({-6.045, 2.668, 16.363}, 0), KeystreamError);
  EXPECT_THROW(generate_stream({std::nan(""), 0, 0}, 3), KeystreamError);
  EXPECT_THROW(generate_stream({1e200, 1e200, 1e200}, 3), KeystreamError);
}

TEST(GenerateStream, NearbyKeysDiverge) {
  const LuKey base{-6.045, 2.668, 16.363};
  const LuKey moved{-6.045 + 1e-10, 2.668, 16.363};
  const Keystream a = generate_stream(base, 1000);
  const Keystream b = generate_stream(moved, 1000);
  int differing = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    differing += std::fabs(to_unit(a[i]) - to_unit(b[i])) > 1e-3;
  }
  EXPECT_GE(differing, 900);
}

TEST(Keystream, CursorWalksValues) {
  Keystream ks = generate_stream({-6.045, 2.668, 16.363}, 2);
  EXPECT_EQ(ks.next(), ks[0]);
  EXPECT_EQ(ks.next(), ks[1]);
  EXPECT_TRUE(ks.exhausted());
  EXPECT_THROW(ks.next(), KeystreamError);
}

TEST(Quantize, ToUnitHandValues) {
  EXPECT_EQ(to_unit(0.0), 0.0);
  EXPECT_NEAR(to_unit(16.363), 0.0, 1e-9);
  EXPECT_NEAR(to_unit(2.66815), 0.5, 1e-9);
  EXPECT_NEAR(to_unit(-2.66815), 0.5, 1e-9);
}

TEST(Quantize, MultiplierByteBit) {
  EXPECT_EQ(to_multiplier(0.0), 1.0);
  EXPECT_NEAR(to_multiplier(2.66815), 1.5, 1e-9);
  EXPECT_EQ(to_byte(0.0), 0);
  // 1/32 * 1e4 = 312.5 exactly, so its unit value is exactly 0.5
  ASSERT_EQ(to_unit(0.03125), 0.5);
  EXPECT_EQ(to_multiplier(0.03125), 1.5);
  EXPECT_EQ(to_byte(0.03125), 128);
  const double nearly_one = 1e-4 * (1.0 - 1e-12);
  ASSERT_GT(to_unit(nearly_one), 255.0 / 256.0);
  EXPECT_EQ(to_byte(nearly_one), 255);
  EXPECT_EQ(to_bit(0.3e-4), 0);
  EXPECT_EQ(to_bit(0.7e-4), 1);
  EXPECT_EQ(to_bit(0.03125), 1);  // tie goes to 1
}

TEST(Quantize, RangesHoldOnRandomInputs) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 100000; ++i) {
    const double v = d(rng);
    const double u = to_unit(v);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double m = to_multiplier(v);
    ASSERT_GE(m, 1.0);
    ASSERT_LT(m, 2.0);
    ASSERT_LE(to_bit(v), 1);
  }
}

}  // namespace
