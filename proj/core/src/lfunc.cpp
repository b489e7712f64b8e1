#include "lfw/lfunc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>

#include "lfw/arithmetic.hpp"
#include "lfw/errors.hpp"
#include "lfw/gamma.hpp"
#include "lfw/summation.hpp"

namespace lfw {
namespace {

constexpr int kMaxBernoulli = 30;

// B_{2j} / (2j)! for j = 1..kMaxBernoulli
const std::array<double, kMaxBernoulli + 1>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kMaxBernoulli + 1> t{};
    double fact = 1.0;
    for (int j = 1; j <= kMaxBernoulli; ++j) {
      fact *= (2.0 * j - 1.0) * (2.0 * j);
      t[j] = boost::math::bernoulli_b2n<double>(j) / fact;
    }
    return t;
  }();
  return table;
}

cplx power_neg(double x, cplx s) { return std::exp(-s * std::log(x)); }

// (e^z - 1) / z
cplx exprel(cplx z) {
  if (std::abs(z) < 0.5) {
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int k = 2; k < 30; ++k) {
      term *= z / static_cast<double>(k);
      sum += term;
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

// sum_{n<M} (nq + a)^{-s} + (1/2) N^{-s} + Bernoulli corrections, N = Mq + a.
cplx em_head(cplx s, double q, double a, int M, int order) {
  CompensatedComplexSum acc;
  for (int n = 0; n < M; ++n) acc.add(power_neg(n * q + a, s));
  const double N = M * q + a;
  const cplx base = power_neg(N, s);
  acc.add(0.5 * base);
  const auto& b = bernoulli_over_factorial();
  const double ratio = q / N;
  // term_j = b_j (s)_{2j-1} (q/N)^{2j-1} N^{-s}
  cplx poch_pow = s * ratio * base;
  for (int j = 1; j <= std::min(order, kMaxBernoulli); ++j) {
    acc.add(b[j] * poch_pow);
    poch_pow *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j) * ratio * ratio;
  }
  return acc.value();
}

void check_params(const EvalParams& p) {
  if (p.em_order < 0 || p.em_order > kMaxBernoulli) {
    fail(ErrorKind::invalid_argument, "em_order must lie in [0, 30]");
  }
  if (!(p.deriv_radius > 0.0) || p.deriv_nodes < 8) {
    fail(ErrorKind::invalid_argument, "derivative circle needs a positive radius and at least 8 nodes");
  }
}

}  // namespace

int em_terms(cplx s, const EvalParams& p) {
  const int by_height = static_cast<int>(std::ceil(0.7 * std::abs(s))) + p.em_order;
  return std::max({p.em_shift, 10, by_height});
}

cplx hurwitz_zeta(cplx s, double a, const EvalParams& p) {
  check_params(p);
  if (s == cplx(1.0, 0.0)) fail(ErrorKind::pole, "hurwitz_zeta has a pole at s = 1");
  if (!(a > 0.0 && a <= 1.0)) fail(ErrorKind::domain, "hurwitz_zeta needs a in (0, 1]");
  const int M = em_terms(s, p);
  const double N = M + a;
  return em_head(s, 1.0, a, M, p.em_order) + std::exp((1.0 - s) * std::log(N)) / (s - 1.0);
}

cplx L_tilde(cplx s, const Character& chi, const EvalParams& p) {
  check_params(p);
  const std::uint32_t q = chi.modulus();
  const int M = em_terms(s, p);
  const double qd = q;
  CompensatedComplexSum head;
  CompensatedComplexSum tail;
  for (std::uint32_t a = 1; a <= q; ++a) {
    const auto k = chi.exponent(a);
    if (!k) continue;
    const cplx c = unit_root(*k, chi.denominator());
    head.add(c * em_head(s, qd, a, M, p.em_order));
    const double w = std::log(M * qd + a);
    tail.add(c * (w * exprel(-(s - 1.0) * w)));
  }
  // (1/q) sum chi(a) ((Mq+a)^{1-s} - 1)/(s-1); the -1 terms vanish unless chi is principal.
  return head.value() - tail.value() / qd;
}

cplx L(cplx s, const Character& chi, const EvalParams& p) {
  if (!chi.is_principal()) return L_tilde(s, chi, p);
  if (s == cplx(1.0, 0.0)) fail(ErrorKind::pole, "L(s, chi) has a pole at s = 1 for principal chi");
  const double cq = static_cast<double>(chi.group().size()) / chi.modulus();
  return L_tilde(s, chi, p) + cq / (s - 1.0);
}

LJet L_jet(cplx s, const Character& chi, const EvalParams& p) { return L_jet(s, chi, p.deriv_radius, p); }

LJet L_jet(cplx s, const Character& chi, double radius, const EvalParams& p) {
  check_params(p);
  const bool principal = chi.is_principal();
  if (principal && std::abs(s - 1.0) <= radius) {
    fail(ErrorKind::domain, "derivative circle of radius " + std::to_string(radius) + " encloses s = 1");
  }
  const int n = p.deriv_nodes;
  CompensatedComplexSum d1;
  CompensatedComplexSum d2;
  for (int j = 0; j < n; ++j) {
    const cplx w = unit_root(j, n);
    const cplx f = L_tilde(s + radius * w, chi, p);
    d1.add(f * std::conj(w));
    d2.add(f * std::conj(w * w));
  }
  LJet jet;
  jet.value = L_tilde(s, chi, p);
  jet.first = d1.value() / (n * radius);
  jet.second = 2.0 * d2.value() / (n * radius * radius);
  if (principal) {
    const double cq = static_cast<double>(chi.group().size()) / chi.modulus();
    const cplx inv = 1.0 / (s - 1.0);
    jet.value += cq * inv;
    jet.first -= cq * inv * inv;
    jet.second += 2.0 * cq * inv * inv * inv;
  }
  return jet;
}

cplx L_derivative(cplx s, const Character& chi, int order, const EvalParams& p) {
  if (order != 1 && order != 2) fail(ErrorKind::invalid_argument, "derivative order must be 1 or 2");
  const LJet jet = L_jet(s, chi, p);
  return order == 1 ? jet.first : jet.second;
}

cplx D(cplx s, const Character& chi, const EvalParams& p) {
  double radius = p.deriv_radius;
  if (chi.is_principal()) {
    if (s == cplx(1.0, 0.0)) fail(ErrorKind::pole, "D(s, chi) has a pole at s = 1 for principal chi");
    radius = std::min(radius, 0.5 * std::abs(s - 1.0));
  }
  const LJet jet = L_jet(s, chi, radius, p);
  if (std::abs(jet.value) < 1e-9 * std::abs(jet.first)) {
    fail(ErrorKind::near_zero, "L(s, chi) vanishes numerically at s = " + std::to_string(s.real()) + " + " +
                                   std::to_string(s.imag()) + "i");
  }
  return jet.first * jet.first / jet.value;
}

FunctionalFactor::FunctionalFactor(const Character& primitive)
    : q_(primitive.modulus()), kappa_(primitive.parity()) {
  if (!primitive.is_primitive()) {
    fail(ErrorKind::domain, "functional-equation factor needs a primitive character, got " + primitive.id().str());
  }
  const GaussData g = gauss_sum(primitive);
  tau_ = g.tau;
  epsilon_ = g.epsilon;
  log_epsilon_ = std::log(epsilon_);
}

cplx FunctionalFactor::log_value(cplx s) const {
  const double pi = std::numbers::pi;
  const double log2 = std::numbers::ln2;
  const double logpi = std::log(pi);
  const double logq = std::log(q_);
  if (s.real() < 0.5) {
    return log_epsilon_ + s * log2 + (s - 1.0) * logpi + (0.5 - s) * logq + log_gamma(1.0 - s) +
           log_sin(0.5 * pi * (s + static_cast<double>(kappa_)));
  }
  return log_epsilon_ + (s - 1.0) * log2 + s * logpi + (0.5 - s) * logq - log_gamma(s) -
         log_cos(0.5 * pi * (s - static_cast<double>(kappa_)));
}

cplx FunctionalFactor::operator()(cplx s) const {
  if (s.imag() == 0.0) {
    const double x = s.real();
    const double shifted = x - kappa_;
    if (std::nearbyint(shifted) == shifted) {
      const long m = std::lround(shifted);
      if (m > 0 && m % 2 != 0) {
        fail(ErrorKind::pole, "functional-equation factor has a pole at s = " + std::to_string(x));
      }
      // sin(pi (s + kappa) / 2) = 0 at s + kappa even and s <= 0
      if (x <= 0.0 && (m % 2 == 0)) return 0.0;
    }
  }
  return std::exp(log_value(s));
}

cplx M_factor(cplx s, const Character& primitive) { return FunctionalFactor(primitive)(s); }

cplx M_asymptotic(double c, double t, const Character& primitive) {
  if (!(t >= 1.0)) fail(ErrorKind::domain, "asymptotic form needs t >= 1");
  const double pi = std::numbers::pi;
  const double q = primitive.modulus();
  const cplx tau = gauss_sum(primitive).tau;
  const cplx i(0.0, 1.0);
  const double phase = t * std::log(q * t / (2.0 * pi * std::numbers::e)) - 0.25 * pi;
  return tau * std::pow(q, c - 1.0) * std::pow(t / (2.0 * pi), c - 0.5) * std::exp(i * phase);
}

double M_asymptotic_error(double c, double t, const Character& primitive) {
  const cplx exact = M_factor(cplx(1.0 - c, -t), primitive);
  return std::abs(exact / M_asymptotic(c, t, primitive) - 1.0);
}

cplx D_infinity(cplx s, std::uint64_t q) {
  if (s == cplx(1.0, 0.0)) fail(ErrorKind::pole, "D_infinity has a pole at s = 1");
  const SingularPart sp = singular_part(q);
  const cplx w = 1.0 / (s - 1.0);
  return ((sp.cubic * w + sp.quadratic) * w + sp.simple) * w;
}

cplx D_residue_contour(std::uint64_t q, double X, double radius, int nodes, const EvalParams& p) {
  if (!(radius > 0.0 && radius < 1.0) || nodes < 8) {
    fail(ErrorKind::invalid_argument, "residue contour needs 0 < radius < 1 and at least 8 nodes");
  }
  const Character chi0 = principal_character(static_cast<std::uint32_t>(q));
  const double logx = std::log(X);
  CompensatedComplexSum acc;
  for (int j = 0; j < nodes; ++j) {
    const cplx w = std::polar(radius, 2.0 * std::numbers::pi * j / nodes);
    const cplx s = 1.0 + w;
    acc.add(D(s, chi0, p) * std::exp(s * logx) / s * w);
  }
  return acc.value() / static_cast<double>(nodes);
}

}  // namespace lfw
