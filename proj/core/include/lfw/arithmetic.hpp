#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lfw {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

std::vector<PrimePower> factorize(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(std::uint64_t n);
int mobius(std::uint64_t n);

// von Mangoldt Lambda(n): log p for n = p^k, otherwise 0.
double mangoldt(std::uint64_t n);

// l(n) = (Lambda * log)(n) = sum_{ab=n} Lambda(a) log b, from the factorisation.
double ell(std::uint64_t n);

inline constexpr std::size_t kDefaultMaxSieve = 20'000'000;

// Lambda and l for 1..N by a linear sieve followed by the prime-power
// convolution. Index 0 is unused and holds 0.
class EllTable {
 public:
  explicit EllTable(std::size_t n, std::size_t max_sieve = kDefaultMaxSieve);

  std::size_t size() const noexcept { return ell_.size() - 1; }
  double operator[](std::size_t n) const noexcept { return ell_[n]; }
  double mangoldt(std::size_t n) const noexcept { return lambda_[n]; }
  std::span<const double> values() const noexcept { return {ell_.data() + 1, size()}; }

 private:
  std::vector<double> lambda_;
  std::vector<double> ell_;
};

// l(1..N) as a plain array (first element is l(1)).
std::vector<double> ell_prefix_sums(std::size_t n, std::size_t max_sieve = kDefaultMaxSieve);

// g_q(s) = prod_{p | q} (1 - p^{-s}) and its first two derivatives at s = 1.
struct GqDerivatives {
  double value;
  double first;
  double second;
};
GqDerivatives g_q_derivatives(std::uint64_t q);

// Stieltjes constants gamma_0, gamma_1 from the defining limit with
// Euler-Maclaurin tail corrections. Cached after the first call.
double stieltjes(int n);

// One evaluation of the corrected limit at truncation `terms` using
// `corrections` Bernoulli terms.
double stieltjes_truncated(int n, std::uint64_t terms, int corrections);

struct StieltjesSelfCheck {
  double coarse;
  double fine;
  int stable_digits;
};
StieltjesSelfCheck stieltjes_self_check(int n);

// Laurent coefficients of D(s, chi_{0,q}) at s = 1:
//   cubic/(s-1)^3 + quadratic/(s-1)^2 + simple/(s-1).
struct SingularPart {
  double cubic;
  double quadratic;
  double simple;
};
SingularPart singular_part(std::uint64_t q);

// P_q(X) = c2 X (log X)^2 + c1 X log X + c0 X, the residue at s = 1 of
// D(s, chi_{0,q}) X^s / s.
struct SingularPolynomial {
  std::uint64_t q;
  double c2;
  double c1;
  double c0;

  double value(double x) const;
  double derivative(double u) const;
};
SingularPolynomial singular_polynomial(std::uint64_t q);

double eval_P(std::uint64_t q, double x);
double eval_P_prime(std::uint64_t q, double u);

}  // namespace lfw
