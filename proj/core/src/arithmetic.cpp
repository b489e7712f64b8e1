#include "lfw/arithmetic.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "lfw/errors.hpp"
#include "lfw/summation.hpp"

namespace lfw {

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  if (n == 0) fail(ErrorKind::invalid_argument, "factorize(0)");
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

int mobius(std::uint64_t n) {
  const auto f = factorize(n);
  for (const auto& pp : f) {
    if (pp.exponent > 1) return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

double mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  const auto f = factorize(n);
  return f.size() == 1 ? std::log(static_cast<double>(f.front().prime)) : 0.0;
}

double ell(std::uint64_t n) {
  if (n < 2) return 0.0;
  double total = 0.0;
  for (const auto& [p, e] : factorize(n)) {
    const double logp = std::log(static_cast<double>(p));
    std::uint64_t pj = 1;
    for (unsigned j = 1; j <= e; ++j) {
      pj *= p;
      total += logp * std::log(static_cast<double>(n / pj));
    }
  }
  return total;
}

EllTable::EllTable(std::size_t n, std::size_t max_sieve) {
  if (n < 1) fail(ErrorKind::invalid_argument, "EllTable needs N >= 1");
  if (n > max_sieve) {
    fail(ErrorKind::resource, "sieve size " + std::to_string(n) + " exceeds arith.max_sieve = " +
                                  std::to_string(max_sieve));
  }
  lambda_.assign(n + 1, 0.0);
  ell_.assign(n + 1, 0.0);

  // Linear sieve for the primes up to n.
  std::vector<std::uint32_t> least(n + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= n; ++i) {
    if (least[i] == 0) {
      least[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes) {
      if (p > least[i] || static_cast<std::size_t>(p) * i > n) break;
      least[p * i] = p;
    }
  }
  least = {};

  std::vector<double> logs(n + 1, 0.0);
  for (std::size_t m = 2; m <= n; ++m) logs[m] = std::log(static_cast<double>(m));

  for (const std::uint32_t p : primes) {
    const double logp = logs[p];
    for (std::size_t pk = p; pk <= n; pk *= p) {
      lambda_[pk] = logp;
      for (std::size_t m = 1, idx = pk; idx <= n; ++m, idx += pk) ell_[idx] += logp * logs[m];
      if (pk > n / p) break;
    }
  }
}

std::vector<double> ell_prefix_sums(std::size_t n, std::size_t max_sieve) {
  const EllTable table(n, max_sieve);
  const auto v = table.values();
  return {v.begin(), v.end()};
}

GqDerivatives g_q_derivatives(std::uint64_t q) {
  if (q == 0) fail(ErrorKind::invalid_modulus, "g_q needs q >= 1");
  // Truncated Taylor products (value, d/ds, d^2/ds^2) at s = 1.
  double v = 1.0, d1 = 0.0, d2 = 0.0;
  for (const auto& pp : factorize(q)) {
    const double p = static_cast<double>(pp.prime);
    const double lp = std::log(p);
    const double f0 = 1.0 - 1.0 / p;
    const double f1 = lp / p;
    const double f2 = -lp * lp / p;
    const double nv = v * f0;
    const double n1 = v * f1 + d1 * f0;
    const double n2 = v * f2 + 2.0 * d1 * f1 + d2 * f0;
    v = nv;
    d1 = n1;
    d2 = n2;
  }
  return {v, d1, d2};
}

namespace {

// r-th derivative of (log x)^n / x for n in {0, 1}.
double stieltjes_summand_derivative(int n, int r, double x) {
  const double fact = boost::math::factorial<double>(static_cast<unsigned>(r));
  const double sign = (r % 2 == 0) ? 1.0 : -1.0;
  const double base = sign * fact / std::pow(x, r + 1);
  if (n == 0) return base;
  double harmonic = 0.0;
  for (int k = 1; k <= r; ++k) harmonic += 1.0 / k;
  return base * (std::log(x) - harmonic);
}

}  // namespace

double stieltjes_truncated(int n, std::uint64_t terms, int corrections) {
  if (n < 0 || n > 1) fail(ErrorKind::unsupported_index, "only gamma_0 and gamma_1 are provided");
  if (terms < 2) fail(ErrorKind::invalid_argument, "stieltjes truncation needs at least 2 terms");
  CompensatedSum acc;
  for (std::uint64_t k = terms; k >= 1; --k) {
    const double x = static_cast<double>(k);
    acc.add(n == 0 ? 1.0 / x : std::log(x) / x);
  }
  const double big_n = static_cast<double>(terms);
  const double log_n = std::log(big_n);
  acc.add(-std::pow(log_n, n + 1) / (n + 1));
  acc.add(-0.5 * stieltjes_summand_derivative(n, 0, big_n));
  for (int j = 1; j <= corrections; ++j) {
    const double coeff = boost::math::bernoulli_b2n<double>(j) /
                         boost::math::factorial<double>(static_cast<unsigned>(2 * j));
    acc.add(-coeff * stieltjes_summand_derivative(n, 2 * j - 1, big_n));
  }
  return acc.value();
}

StieltjesSelfCheck stieltjes_self_check(int n) {
  const double coarse = stieltjes_truncated(n, 1000, 6);
  const double fine = stieltjes_truncated(n, 2000, 6);
  const double diff = std::fabs(coarse - fine);
  const int digits = diff == 0.0 ? 16 : static_cast<int>(std::floor(-std::log10(diff)));
  return {coarse, fine, digits};
}

double stieltjes(int n) {
  if (n < 0 || n > 1) fail(ErrorKind::unsupported_index, "only gamma_0 and gamma_1 are provided");
  static std::once_flag once;
  static std::array<double, 2> cached{};
  std::call_once(once, [] {
    for (int k = 0; k < 2; ++k) {
      const auto check = stieltjes_self_check(k);
      if (check.stable_digits < 12) {
        fail(ErrorKind::verification, "Stieltjes constant self-check lost stability (gamma_" +
                                          std::to_string(k) + ")");
      }
      cached[k] = check.fine;
    }
  });
  return cached[static_cast<std::size_t>(n)];
}

SingularPart singular_part(std::uint64_t q) {
  // L(s, chi_0) = g_q(s) zeta(s) = A/w + B + C w + ... with w = s - 1, and
  // D = L'^2 / L = A/w^3 - B/w^2 + (B^2/A - 3C)/w + O(1).
  const auto g = g_q_derivatives(q);
  const double g0 = stieltjes(0);
  const double g1 = stieltjes(1);
  const double a = g.value;
  const double b = g.value * g0 + g.first;
  const double c = -g.value * g1 + g.first * g0 + 0.5 * g.second;
  return {a, -b, b * b / a - 3.0 * c};
}

SingularPolynomial singular_polynomial(std::uint64_t q) {
  // Residue of D_inf(s) X^s / s at s = 1, expanded with X^s/s = X e^{wL}/(1+w).
  const auto sp = singular_part(q);
  return {q, 0.5 * sp.cubic, sp.quadratic - sp.cubic, sp.simple - sp.quadratic + sp.cubic};
}

double SingularPolynomial::value(double x) const {
  if (!(x > 0.0)) fail(ErrorKind::domain, "P_q(X) needs X > 0");
  const double l = std::log(x);
  return x * (c2 * l * l + c1 * l + c0);
}

double SingularPolynomial::derivative(double u) const {
  if (!(u > 0.0)) fail(ErrorKind::domain, "P_q'(u) needs u > 0");
  const double l = std::log(u);
  return c2 * (l * l + 2.0 * l) + c1 * (l + 1.0) + c0;
}

double eval_P(std::uint64_t q, double x) { return singular_polynomial(q).value(x); }
double eval_P_prime(std::uint64_t q, double u) { return singular_polynomial(q).derivative(u); }

}  // namespace lfw
