#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include <unistd.h>

#include "lfw/errors.hpp"
#include "lfw/zeros.hpp"
#include "oracles.hpp"

using lfw::cplx;

namespace {

const lfw::ZeroList& zeta_to_100() {
  static const lfw::ZeroList list = lfw::scan_zeros(lfw::principal_character(1), 0.01, 100.0);
  return list;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("lfw_zeros_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(ZeroCount, SmoothCount) {
  EXPECT_NEAR(lfw::expected_count(lfw::principal_character(1), 100.0), 28.127, 1e-3);
  EXPECT_NEAR(lfw::expected_count(lfw::character({4, 1}), 30.0), 9.31, 1e-2);
  EXPECT_THROW(lfw::expected_count(lfw::principal_character(1), 1.0), lfw::Error);
  EXPECT_NEAR(lfw::count_tolerance(lfw::principal_character(1), 100.0), 2.0 + std::log(100.0), 1e-12);
}

TEST(HardyZ, AgreesWithOracleUpToSign) {
  const auto one = lfw::principal_character(1);
  const auto chi = lfw::character({4, 1});
  for (double t : {3.0, 10.0, 17.5, 31.0, 40.0}) {
    EXPECT_NEAR(std::fabs(lfw::hardy_z(t, one)), std::fabs(oracle::hardy_z_zeta(t)), 1e-10) << t;
    EXPECT_NEAR(std::fabs(lfw::hardy_z(t, chi)), std::fabs(oracle::hardy_z_beta(t)), 1e-10) << t;
  }
}

TEST(ZeroScan, ZetaToOneHundred) {
  const auto& list = zeta_to_100();
  ASSERT_EQ(list.zeros.size(), 29u);
  EXPECT_TRUE(list.complete);
  const double first = oracle::bisect(oracle::hardy_z_zeta, 14.0, 14.3);
  EXPECT_NEAR(list.zeros.front().gamma, first, 1e-8);
  EXPECT_NEAR(list.zeros.front().gamma, 14.134725141734693, 1e-9);
  EXPECT_NEAR(list.zeros.back().gamma, 98.831194218193692, 1e-8);
  const auto one = lfw::principal_character(1);
  for (const auto& z : list.zeros) {
    EXPECT_LE(std::abs(lfw::L(cplx(0.5, z.gamma), one)), 1e-8);
    EXPECT_GT(std::abs(z.lprime), 0.0);
    EXPECT_EQ(z.source, lfw::ZeroSource::computed);
  }
  for (std::size_t i = 1; i < list.zeros.size(); ++i) {
    EXPECT_GT(list.zeros[i].gamma - list.zeros[i - 1].gamma, 1e-7);
  }
}

TEST(ZeroScan, ZetaBetweenFivePiAndTwentyPi) {
  const double pi = 3.14159265358979323846;
  const auto& list = zeta_to_100();
  int n = 0;
  for (const auto& z : list.zeros) n += z.gamma > 5 * pi && z.gamma < 20 * pi;
  EXPECT_EQ(n, 13);
}

TEST(ZeroScan, ChiMinusFour) {
  const auto chi = lfw::character({4, 1});
  const auto list = lfw::scan_zeros(chi, 0.01, 30.0);
  EXPECT_EQ(list.zeros.size(), 10u);
  EXPECT_TRUE(list.complete);
  EXPECT_NEAR(list.zeros.front().gamma, oracle::bisect(oracle::hardy_z_beta, 5.9, 6.1), 1e-8);
}

TEST(ZeroScan, ComplexCharacterAndConjugate) {
  const auto chi = lfw::character({5, 1});
  const auto list = lfw::scan_zeros(chi, 0.01, 30.0);
  EXPECT_TRUE(list.complete);
  ASSERT_FALSE(list.zeros.empty());
  EXPECT_NEAR(list.zeros.front().gamma, 6.1835781954508539, 1e-8);
  // Zeros of the conjugate character lie at the mirrored ordinates.
  const auto bar = chi.conjugate();
  for (const auto& z : list.zeros) EXPECT_LE(std::abs(lfw::L(cplx(0.5, -z.gamma), bar)), 1e-8) << z.gamma;
}

TEST(ZeroScan, WindingCounts) {
  const auto one = lfw::principal_character(1);
  EXPECT_EQ(lfw::winding_count(one, 0.25, 0.75, 13.0, 15.0), 1);
  EXPECT_EQ(lfw::winding_count(one, 0.25, 0.75, 15.0, 20.0), 0);
  EXPECT_EQ(lfw::winding_count(one, 0.25, 0.75, 10.0, 26.0), 3);
}

TEST(ZeroScan, DerivativeStableUnderRadiusHalving) {
  const auto& list = zeta_to_100();
  lfw::EvalParams half;
  half.deriv_radius *= 0.5;
  const auto one = lfw::principal_character(1);
  for (std::size_t i = 0; i < list.zeros.size(); i += 5) {
    const auto& z = list.zeros[i];
    const cplx again = lfw::L_derivative(cplx(0.5, z.gamma), one, 1, half);
    EXPECT_LT(std::abs(again - z.lprime) / std::abs(z.lprime), 1e-6);
  }
}

TEST(ZeroScan, Preconditions) {
  EXPECT_THROW(lfw::scan_zeros(lfw::principal_character(1), 0.01, 400.0), lfw::Error);
  EXPECT_THROW(lfw::scan_zeros(lfw::principal_character(1), 10.0, 5.0), lfw::Error);
  EXPECT_THROW(lfw::scan_zeros(lfw::principal_character(4), 0.01, 20.0), lfw::Error);
}

TEST(ZeroFiles, CsvRoundTripIsLossless) {
  const auto& list = zeta_to_100();
  const auto path = scratch("zeta100.csv");
  lfw::export_zeros(list, path);
  const auto back = lfw::import_zeros(path, lfw::principal_character(1));
  ASSERT_EQ(back.zeros.size(), list.zeros.size());
  for (std::size_t i = 0; i < list.zeros.size(); ++i) {
    EXPECT_EQ(back.zeros[i].gamma, list.zeros[i].gamma);
    EXPECT_EQ(back.zeros[i].lprime, list.zeros[i].lprime);
    EXPECT_EQ(back.zeros[i].source, lfw::ZeroSource::imported);
  }
  EXPECT_FALSE(back.complete);
  EXPECT_EQ(lfw::zeros_to_csv(back), lfw::zeros_to_csv(list));
}

TEST(ZeroFiles, ImportRecomputesMissingDerivatives) {
  const auto list = lfw::zeros_from_csv("gamma,re_lprime,im_lprime,refine_err\n14.134725141734693,,,\n21.022039638771555\n",
                                        lfw::principal_character(1));
  ASSERT_EQ(list.zeros.size(), 2u);
  EXPECT_NEAR(list.zeros[0].lprime.real(), 0.783296511867031, 1e-9);
}

TEST(ZeroFiles, ImportErrors) {
  const auto one = lfw::principal_character(1);
  try {
    lfw::zeros_from_csv("gamma\n14.134725141734693\nabc\n", one);
    FAIL();
  } catch (const lfw::Error& e) {
    EXPECT_EQ(e.kind(), lfw::ErrorKind::parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    lfw::zeros_from_csv("14.134725141734693\n15.0\n", one);
    FAIL();
  } catch (const lfw::Error& e) {
    EXPECT_EQ(e.kind(), lfw::ErrorKind::verification);
    EXPECT_NE(std::string(e.what()).find("15"), std::string::npos);
  }
  EXPECT_THROW(lfw::import_zeros(scratch("missing.csv"), one), lfw::Error);
}

TEST(ZeroFiles, MergeDeduplicates) {
  const auto& list = zeta_to_100();
  lfw::ZeroList a = list, b = list;
  a.zeros.resize(10);
  b.zeros.erase(b.zeros.begin(), b.zeros.begin() + 5);
  b.zeros.front().gamma += 1e-9;
  const auto merged = lfw::merge_zero_lists({a, b});
  EXPECT_EQ(merged.zeros.size(), list.zeros.size());
}

TEST(ZeroFiles, VerifyOrdinates) {
  const auto list = lfw::verify_ordinates({21.022039638771555, 14.134725141734693}, lfw::principal_character(1));
  ASSERT_EQ(list.zeros.size(), 2u);
  EXPECT_LT(list.zeros[0].gamma, list.zeros[1].gamma);
  EXPECT_THROW(lfw::verify_ordinates({16.0}, lfw::principal_character(1)), lfw::Error);
}

TEST(ZeroFiles, MarkCoverage) {
  lfw::ZeroList l = zeta_to_100();
  EXPECT_TRUE(lfw::mark_coverage(l, lfw::principal_character(1), 0.0, 50.0));
  EXPECT_EQ(l.zeros.size(), 10u);
  l.zeros.resize(2);
  EXPECT_FALSE(lfw::mark_coverage(l, lfw::principal_character(1), 0.0, 50.0));
}
