#include <gtest/gtest.h>

#include <cmath>

#include "lfw/arithmetic.hpp"
#include "lfw/errors.hpp"
#include "lfw/lfunc.hpp"
#include "oracles.hpp"

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kStieltjes1 = -0.07281584548367672486;
}  // namespace

TEST(Arithmetic, ElementaryFunctions) {
  EXPECT_EQ(lfw::gcd(84, 36), 12u);
  EXPECT_EQ(lfw::euler_phi(1), 1u);
  EXPECT_EQ(lfw::euler_phi(36), 12u);
  EXPECT_EQ(lfw::mobius(1), 1);
  EXPECT_EQ(lfw::mobius(30), -1);
  EXPECT_EQ(lfw::mobius(4), 0);
  EXPECT_EQ(lfw::mobius(6), 1);
  const auto f = lfw::factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].prime, 2u);
  EXPECT_EQ(f[0].exponent, 3u);
  EXPECT_EQ(f[2].prime, 5u);
}

TEST(Arithmetic, MangoldtAgreesWithTrialDivision) {
  for (std::uint64_t n = 1; n <= 5000; ++n) EXPECT_DOUBLE_EQ(lfw::mangoldt(n), oracle::mangoldt(n)) << n;
}

TEST(Arithmetic, SieveAgreesWithDivisorSum) {
  const std::size_t N = 10000;
  lfw::EllTable table(N);
  ASSERT_EQ(table.size(), N);
  for (std::size_t n = 1; n <= N; ++n) {
    const double ref = oracle::ell(n);
    EXPECT_NEAR(table[n], ref, 1e-12) << n;
    EXPECT_NEAR(lfw::ell(n), ref, 1e-12) << n;
    EXPECT_NEAR(table.mangoldt(n), oracle::mangoldt(n), 1e-15) << n;
  }
}

TEST(Arithmetic, EllAtSquarefreeProducts) {
  lfw::EllTable table(1000);
  const double l2 = std::log(2.0), l3 = std::log(3.0), l5 = std::log(5.0);
  EXPECT_NEAR(table[30], l2 * std::log(15.0) + l3 * std::log(10.0) + l5 * std::log(6.0), 1e-12);
  EXPECT_EQ(table[7], 0.0);
}

TEST(Arithmetic, PrefixArrayMatchesTable) {
  const auto v = lfw::ell_prefix_sums(100);
  lfw::EllTable t(100);
  ASSERT_EQ(v.size(), 100u);
  for (std::size_t n = 1; n <= 100; ++n) EXPECT_EQ(v[n - 1], t[n]);
}

TEST(Arithmetic, SieveCapIsResourceError) {
  try {
    lfw::EllTable t(1000, 100);
    FAIL() << "expected resource error";
  } catch (const lfw::Error& e) {
    EXPECT_EQ(e.kind(), lfw::ErrorKind::resource);
  }
}

TEST(Arithmetic, StieltjesConstants) {
  EXPECT_NEAR(lfw::stieltjes(0), kEulerGamma, 1e-13);
  EXPECT_NEAR(lfw::stieltjes(1), kStieltjes1, 1e-13);
  for (int n : {0, 1}) EXPECT_GE(lfw::stieltjes_self_check(n).stable_digits, 12) << n;
  EXPECT_THROW(lfw::stieltjes(2), lfw::Error);
}

TEST(Arithmetic, GqDerivativesByFiniteDifference) {
  for (std::uint64_t q : {1u, 3u, 6u, 10u, 30u}) {
    auto g = [q](double s) {
      double v = 1.0;
      for (const auto& pp : lfw::factorize(q)) v *= 1.0 - std::pow(static_cast<double>(pp.prime), -s);
      return v;
    };
    const auto d = lfw::g_q_derivatives(q);
    const double h = 1e-4;
    EXPECT_NEAR(d.value, g(1.0), 1e-15);
    EXPECT_NEAR(d.first, (g(1 + h) - g(1 - h)) / (2 * h), 1e-7);
    EXPECT_NEAR(d.second, (g(1 + h) - 2 * g(1.0) + g(1 - h)) / (h * h), 1e-5);
  }
}

TEST(Arithmetic, SingularPolynomialForZeta) {
  const auto P = lfw::singular_polynomial(1);
  EXPECT_NEAR(P.c2, 0.5, 1e-15);
  EXPECT_NEAR(P.c1, -(1 + kEulerGamma), 1e-13);
  EXPECT_NEAR(P.c0, 1 + kEulerGamma + kEulerGamma * kEulerGamma + 3 * kStieltjes1, 1e-12);
  // derivative consistent with the value
  const double u = 37.0, h = 1e-4;
  EXPECT_NEAR(P.derivative(u), (P.value(u + h) - P.value(u - h)) / (2 * h), 1e-7);
}

TEST(Arithmetic, ResidueBridge) {
  for (std::uint64_t q : {1u, 3u, 4u}) {
    for (double X : {10.0, 100.0}) {
      const auto c = lfw::D_residue_contour(q, X);
      const double P = lfw::eval_P(q, X);
      EXPECT_LT(std::abs(c - P) / std::fabs(P), 1e-5) << q << " " << X;
      EXPECT_LT(std::fabs(c.imag()), 1e-8 * std::fabs(P));
    }
  }
}

TEST(Arithmetic, ScaledZetaPolynomialIsNotTheResidueForImprimitiveModulus) {
  // g_q(1) P_1(X) only matches the residue when the Euler factor is flat at 1.
  const double X = 10.0;
  const double scaled = lfw::g_q_derivatives(3).value * lfw::eval_P(1, X);
  const double residue = lfw::D_residue_contour(3, X).real();
  EXPECT_NEAR(residue, 5.9039, 1e-3);
  EXPECT_GT(std::fabs(scaled - residue), 1.0);
  EXPECT_NEAR(lfw::eval_P(3, X), residue, 1e-8);
}

TEST(Arithmetic, LargeSumsTrackTheMainTerm) {
  lfw::EllTable t(100000);
  double s = 0.0;
  for (std::size_t n = 1; n <= 100000; ++n) s += t[n];
  const double P = lfw::eval_P(1, 1e5);
  EXPECT_LT(std::fabs(s - P), 5.0 * std::sqrt(1e5) * std::log(1e5));
}
