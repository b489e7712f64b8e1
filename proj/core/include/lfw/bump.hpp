#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace lfw {

// amplitude * exp(-1 / (1 - x^2)) with x = (2u - a - b) / (b - a) on (a, b), zero outside.
class Bump {
 public:
  explicit Bump(double a = 0.5, double b = 2.0, double amplitude = 1.0);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double amplitude() const noexcept { return amplitude_; }

  double eval(double u) const noexcept;
  double operator()(double u) const noexcept { return eval(u); }
  double derivative(double u) const noexcept;

  // int_a^b B(u) u^{s-1} du, adaptive to 1e-10 absolute.
  std::complex<double> mellin(std::complex<double> s) const;
  // Same integral with a single fixed Gauss-Legendre rule.
  std::complex<double> mellin_fixed(std::complex<double> s, std::size_t nodes) const;

  std::string id() const;

 private:
  double a_;
  double b_;
  double amplitude_;
};

}  // namespace lfw
