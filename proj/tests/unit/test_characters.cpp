#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "lfw/arithmetic.hpp"
#include "lfw/characters.hpp"
#include "lfw/errors.hpp"
#include "oracles.hpp"

using lfw::cplx;

namespace {

std::vector<cplx> values_of(const lfw::Character& chi) {
  std::vector<cplx> v(chi.modulus());
  for (std::uint32_t n = 0; n < chi.modulus(); ++n) v[n] = chi(n);
  return v;
}

template <class F>
void expect_error_kind(F&& f, lfw::ErrorKind kind) {
  try {
    f();
    ADD_FAILURE() << "no exception";
  } catch (const lfw::Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Characters, GroupSizesMatchPhi) {
  for (std::uint32_t q = 1; q <= 60; ++q) {
    const auto chars = lfw::enumerate_characters(q);
    ASSERT_EQ(chars.size(), lfw::euler_phi(q)) << q;
    EXPECT_TRUE(chars.front().is_principal());
    for (std::uint32_t i = 0; i < chars.size(); ++i) EXPECT_EQ(chars[i].index(), i);
  }
}

TEST(Characters, SmallModuliRows) {
  EXPECT_EQ(lfw::enumerate_characters(1).size(), 1u);
  EXPECT_EQ(lfw::enumerate_characters(4).size(), 2u);
  const auto seven = lfw::enumerate_characters(7);
  ASSERT_EQ(seven.size(), 6u);
  for (const auto& c : seven) EXPECT_EQ(6u % c.order(), 0u);
}

TEST(Characters, CyclicModuliMatchHandTables) {
  struct Case {
    std::uint32_t q, g;
  };
  for (auto [q, g] : {Case{3, 2}, Case{4, 3}, Case{5, 2}, Case{7, 3}, Case{11, 2}, Case{13, 2}}) {
    const auto chars = lfw::enumerate_characters(q);
    for (std::uint32_t j = 0; j < chars.size(); ++j) {
      const auto ref = oracle::cyclic_character(q, g, j);
      for (std::uint32_t n = 0; n < q; ++n) {
        EXPECT_NEAR(std::abs(chars[j](n) - ref[n]), 0.0, 1e-15) << q << "." << j << " at " << n;
      }
    }
  }
}

TEST(Characters, ConductorMatchesBruteForce) {
  for (std::uint32_t q = 1; q <= 60; ++q) {
    for (const auto& chi : lfw::enumerate_characters(q)) {
      EXPECT_EQ(chi.conductor(), oracle::conductor(values_of(chi))) << chi.id().str();
    }
  }
}

TEST(Characters, ValuesAreCompletelyMultiplicativeAndPeriodic) {
  for (std::uint32_t q : {8u, 9u, 12u, 15u, 16u, 21u, 24u, 30u}) {
    for (const auto& chi : lfw::enumerate_characters(q)) {
      for (std::int64_t m = -5; m < 2 * q; ++m) {
        EXPECT_NEAR(std::abs(chi(m) - chi(m + q)), 0.0, 1e-15);
        for (std::int64_t n = 1; n < q; ++n) EXPECT_NEAR(std::abs(chi(m * n) - chi(m) * chi(n)), 0.0, 1e-14);
      }
    }
  }
}

TEST(Characters, ParityIsValueAtMinusOne) {
  for (std::uint32_t q = 2; q <= 30; ++q) {
    for (const auto& chi : lfw::enumerate_characters(q)) {
      EXPECT_NEAR(chi(-1).real(), chi.parity() ? -1.0 : 1.0, 1e-15) << chi.id().str();
    }
  }
}

TEST(Characters, OrthogonalityExact) {
  for (std::uint32_t q = 1; q <= 24; ++q) {
    const auto chars = lfw::enumerate_characters(q);
    const double phi = static_cast<double>(chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = 0; j < chars.size(); ++j) {
        cplx s = 0.0;
        for (std::uint32_t a = 0; a < q; ++a) s += chars[i](a) * std::conj(chars[j](a));
        EXPECT_LT(std::abs(s - (i == j ? phi : 0.0)), 1e-12);
      }
    }
  }
}

TEST(Characters, ConjugateAndPrincipal) {
  const auto chi = lfw::character({13, 5});
  const auto bar = chi.conjugate();
  for (int n = 0; n < 13; ++n) EXPECT_NEAR(std::abs(bar(n) - std::conj(chi(n))), 0.0, 1e-15);
  const auto p = lfw::principal_character(12);
  for (int n = 0; n < 12; ++n) EXPECT_EQ(p(n), std::gcd(n, 12) == 1 ? cplx(1.0) : cplx(0.0));
}

TEST(Characters, GaussSumIdentities) {
  for (std::uint32_t q = 1; q <= 24; ++q) {
    for (const auto& chi : lfw::enumerate_characters(q)) {
      if (!chi.is_primitive()) continue;
      const cplx t = lfw::gauss_sum(chi).tau;
      const cplx tb = lfw::gauss_sum(chi.conjugate()).tau;
      EXPECT_NEAR(std::norm(t), q, 1e-10 * q) << chi.id().str();
      EXPECT_LT(std::abs(t * tb - chi(-1) * static_cast<double>(q)), 1e-10 * q) << chi.id().str();
      EXPECT_NEAR(std::abs(lfw::gauss_sum(chi).epsilon), 1.0, 1e-12);
    }
  }
}

TEST(Characters, QuadraticGaussSumsClosedForm) {
  EXPECT_LT(std::abs(lfw::gauss_sum(lfw::character({5, 2})).tau - std::sqrt(5.0)), 1e-13);
  EXPECT_LT(std::abs(lfw::gauss_sum(lfw::character({4, 1})).tau - cplx(0.0, 2.0)), 1e-13);
  EXPECT_LT(std::abs(lfw::gauss_sum(lfw::character({3, 1})).tau - cplx(0.0, std::sqrt(3.0))), 1e-13);
  EXPECT_LT(std::abs(lfw::gauss_sum(lfw::character({13, 6})).tau - std::sqrt(13.0)), 1e-12);
}

TEST(Characters, InductionAndPrimitivePart) {
  const auto chi4 = lfw::character({4, 1});
  const auto lifted = lfw::induce(chi4, 12);
  EXPECT_EQ(lifted.modulus(), 12u);
  EXPECT_EQ(lifted.conductor(), 4u);
  for (int n = 0; n < 24; ++n) {
    EXPECT_EQ(lifted(n), std::gcd(n, 12) == 1 ? chi4(n) : cplx(0.0)) << n;
  }
  const auto part = lfw::conductor_and_primitive_part(lifted);
  EXPECT_EQ(part.conductor, 4u);
  EXPECT_TRUE(part.primitive == chi4);
  for (std::uint32_t q = 1; q <= 40; ++q) {
    for (const auto& chi : lfw::enumerate_characters(q)) {
      const auto pp = lfw::conductor_and_primitive_part(chi);
      EXPECT_TRUE(pp.primitive.is_primitive());
      EXPECT_TRUE(lfw::induce(pp.primitive, q) == chi) << chi.id().str();
    }
  }
}

TEST(Characters, InduceExamples) {
  EXPECT_TRUE(lfw::induce(lfw::principal_character(1), 6) == lfw::principal_character(6));
  const auto chi8 = lfw::induce(lfw::character({4, 1}), 8);
  EXPECT_EQ(chi8(5), cplx(1.0));
  EXPECT_EQ(chi8(6), cplx(0.0));
  EXPECT_TRUE(lfw::induce(lfw::character({4, 1}), 4) == lfw::character({4, 1}));
  EXPECT_EQ(lfw::conductor_and_primitive_part(lfw::principal_character(12)).conductor, 1u);
  EXPECT_EQ(lfw::gauss_sum(lfw::principal_character(1)).tau, cplx(1.0));
}

TEST(Characters, Errors) {
  expect_error_kind([] { lfw::enumerate_characters(0); }, lfw::ErrorKind::invalid_modulus);
  expect_error_kind([] { lfw::induce(lfw::character({4, 1}), 6); }, lfw::ErrorKind::invalid_inducing);
  EXPECT_THROW(lfw::character({5, 4}), lfw::Error);
}

TEST(Characters, IdentifierText) {
  EXPECT_EQ((lfw::CharacterId{5, 2}).str(), "chi_5.2");
  EXPECT_EQ(lfw::CharacterId::parse("chi_12.3"), (lfw::CharacterId{12, 3}));
  EXPECT_EQ(lfw::CharacterId::parse("7.1"), (lfw::CharacterId{7, 1}));
  EXPECT_THROW(lfw::CharacterId::parse("seven"), lfw::Error);
}
