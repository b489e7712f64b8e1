#include "lfw/bump.hpp"

#include <cmath>
#include <sstream>

#include "lfw/errors.hpp"
#include "lfw/quadrature.hpp"

namespace lfw {

Bump::Bump(double a, double b, double amplitude) : a_(a), b_(b), amplitude_(amplitude) {
  if (!(a > 0.0) || !(b > a) || !std::isfinite(b) || !std::isfinite(amplitude)) {
    fail(ErrorKind::invalid_argument, "bump support must satisfy 0 < a < b");
  }
}

double Bump::eval(double u) const noexcept {
  if (u <= a_ || u >= b_) return 0.0;
  const double x = (2.0 * u - a_ - b_) / (b_ - a_);
  const double d = 1.0 - x * x;
  if (d <= 0.0) return 0.0;
  return amplitude_ * std::exp(-1.0 / d);
}

double Bump::derivative(double u) const noexcept {
  if (u <= a_ || u >= b_) return 0.0;
  const double x = (2.0 * u - a_ - b_) / (b_ - a_);
  const double d = 1.0 - x * x;
  if (d <= 0.0) return 0.0;
  return amplitude_ * std::exp(-1.0 / d) * (-2.0 * x / (d * d)) * (2.0 / (b_ - a_));
}

std::complex<double> Bump::mellin(std::complex<double> s) const {
  const auto f = [&](double u) { return eval(u) * std::exp((s - 1.0) * std::log(u)); };
  return integrate_adaptive(f, a_, b_, 1e-10).value;
}

std::complex<double> Bump::mellin_fixed(std::complex<double> s, std::size_t nodes) const {
  const auto f = [&](double u) { return eval(u) * std::exp((s - 1.0) * std::log(u)); };
  return integrate(f, a_, b_, 1, nodes);
}

std::string Bump::id() const {
  std::ostringstream os;
  os << "bump(" << a_ << "," << b_ << "," << amplitude_ << ")";
  return os.str();
}

}  // namespace lfw
