#pragma once

#include <cmath>
#include <complex>

namespace lfw {

// Neumaier's variant of Kahan summation. Error is bounded independently of
// the number of terms, which keeps long oscillatory sums reproducible.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void merge(const CompensatedComplexSum& other) noexcept {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

template <class T>
struct compensated_for;
template <>
struct compensated_for<double> {
  using type = CompensatedSum;
};
template <>
struct compensated_for<std::complex<double>> {
  using type = CompensatedComplexSum;
};
template <class T>
using compensated_for_t = typename compensated_for<T>::type;

}  // namespace lfw
