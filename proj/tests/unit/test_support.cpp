// Sanity checks of the test-side oracles against values from an arbitrary
// precision evaluation, so library tests can lean on them.
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

TEST(Oracle, ZetaAtTwo) { EXPECT_NEAR(oracle::zeta(2.0).real(), std::numbers::pi * std::numbers::pi / 6, 1e-14); }

TEST(Oracle, CatalanConstant) { EXPECT_NEAR(oracle::beta(2.0).real(), 0.915965594177219015, 1e-14); }

TEST(Oracle, BetaOnCriticalLine) {
  const auto v = oracle::beta({0.5, 10.0});
  EXPECT_NEAR(v.real(), 0.02776895261690277, 1e-12);
  EXPECT_NEAR(v.imag(), -0.44306067559374077, 1e-12);
}

TEST(Oracle, LogGammaMatchesLgammaOnReals) {
  for (double x : {0.3, 1.0, 2.5, 7.0, 31.5}) EXPECT_NEAR(oracle::log_gamma(x).real(), std::lgamma(x), 1e-12) << x;
}

TEST(Oracle, HardyZVanishesAtKnownZeros) {
  EXPECT_LT(std::fabs(oracle::hardy_z_zeta(14.134725141734693)), 1e-12);
  EXPECT_LT(std::fabs(oracle::hardy_z_beta(6.020948904697597)), 1e-12);
}

TEST(Oracle, EllSmallValues) {
  EXPECT_DOUBLE_EQ(oracle::ell(1), 0.0);
  EXPECT_NEAR(oracle::ell(2), 0.0, 1e-15);
  EXPECT_NEAR(oracle::ell(4), std::log(2.0) * std::log(2.0), 1e-14);
  EXPECT_NEAR(oracle::ell(6), 2 * std::log(2.0) * std::log(3.0), 1e-14);
}

TEST(Oracle, ConductorOfInducedCharacter) {
  // chi_-4 lifted to modulus 12 keeps conductor 4.
  auto v4 = oracle::cyclic_character(4, 3, 1);
  std::vector<oracle::cplx> v12(12, 0.0);
  for (int n : {1, 5, 7, 11}) v12[n] = v4[n % 4];
  EXPECT_EQ(oracle::conductor(v12), 4u);
  EXPECT_EQ(oracle::conductor(v4), 4u);
}
