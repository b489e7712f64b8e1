#include "lfw/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>

#include "lfw/errors.hpp"

namespace lfw {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kStirlingCutoff = 15.0;

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::nearbyint(z.real()) == z.real();
}

}  // namespace

cplx log_gamma_lanczos(cplx z) {
  // Valid for Re z >= 1/2.
  const cplx x = z - 1.0;
  cplx a = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) a += kLanczos[k] / (x + static_cast<double>(k));
  const cplx t = x + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

cplx log_gamma_stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx corr = 0.0;
  cplx pw = inv;
  for (int k = 1; k <= 10; ++k) {
    const double b2k = boost::math::bernoulli_b2n<double>(k);
    corr += b2k / (2.0 * k * (2.0 * k - 1.0)) * pw;
    pw *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + corr;
}

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) fail(ErrorKind::pole, "log_gamma at nonpositive integer");
  if (z.real() < 0.0) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(std::numbers::pi) - log_sin(std::numbers::pi * z) - log_gamma(1.0 - z);
  }
  if (std::abs(z) >= kStirlingCutoff) return log_gamma_stirling(z);
  if (z.real() < 0.5) {
    // Upward recursion keeps the standard branch (sum of principal logs).
    return log_gamma(z + 1.0) - std::log(z);
  }
  return log_gamma_lanczos(z);
}

cplx log_sin(cplx z) {
  const cplx i(0.0, 1.0);
  if (z.imag() > 0.0) {
    // sin z = (i/2) e^{-iz} (1 - e^{2iz}), |e^{2iz}| < 1
    return std::log(0.5 * i) - i * z + std::log(1.0 - std::exp(2.0 * i * z));
  }
  if (z.imag() < 0.0) {
    // sin z = (-i/2) e^{iz} (1 - e^{-2iz})
    return std::log(-0.5 * i) + i * z + std::log(1.0 - std::exp(-2.0 * i * z));
  }
  return std::log(cplx(std::sin(z.real()), 0.0));
}

cplx log_cos(cplx z) {
  const cplx i(0.0, 1.0);
  if (z.imag() > 0.0) {
    return std::log(0.5) - i * z + std::log(1.0 + std::exp(2.0 * i * z));
  }
  if (z.imag() < 0.0) {
    return std::log(0.5) + i * z + std::log(1.0 + std::exp(-2.0 * i * z));
  }
  return std::log(cplx(std::cos(z.real()), 0.0));
}

}  // namespace lfw
