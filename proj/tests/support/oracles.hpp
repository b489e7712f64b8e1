#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: characters are tabulated by hand, L-values come from
// accelerated alternating series and log-gamma from a shifted Stirling series.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// Lambda(n) by trial division.
double mangoldt(std::uint64_t n);
// sum_{d | n} Lambda(d) log(n / d)
double ell(std::uint64_t n);

// Character values chi(0..q-1) of the cyclic case: chi(g^e) = exp(2 pi i j e / order).
std::vector<cplx> cyclic_character(std::uint32_t q, std::uint32_t generator, std::uint32_t j);
// Smallest d | q such that chi is identically 1 on units congruent to 1 mod d.
std::uint32_t conductor(const std::vector<cplx>& values);

// Cohen, Rodriguez Villegas and Zagier acceleration of sum_k (-1)^k a(k).
// With n = 64 the error on the critical line is about 5.8^-64 e^(pi |t| / 2), so keep |t| <= 40.
cplx alternating_sum(const std::function<cplx(int)>& a, int n = 64);

cplx zeta(cplx s);
// L(s, chi_-4) = sum_k (-1)^k (2k + 1)^{-s}
cplx beta(cplx s);

cplx log_gamma(cplx z);

// e^{i theta} L(1/2 + it) for zeta and chi_-4, real up to rounding.
double hardy_z_zeta(double t);
double hardy_z_beta(double t);

double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-13);

// Direct sum_{n <= x} l(n) chi(n) with a tabulated character.
cplx ell_char_sum(const std::vector<cplx>& chi, std::uint64_t x);

}  // namespace oracle
