#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "lfw/errors.hpp"
#include "lfw/summation.hpp"

namespace lfw {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// Cached n-point rule; nodes found by Newton iteration on P_n.
const GaussLegendreRule& gauss_legendre(std::size_t n);

// Composite Gauss-Legendre: `panels` equal subintervals of [a, b], `order`
// nodes each.
template <class F>
auto integrate(F&& f, double a, double b, std::size_t panels, std::size_t order = 32) {
  using T = std::decay_t<decltype(f(a))>;
  const auto& rule = gauss_legendre(order);
  const double width = (b - a) / static_cast<double>(panels);
  compensated_for_t<T> acc;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc.add(f(mid + half * rule.nodes[i]) * (rule.weights[i] * half));
    }
  }
  return acc.value();
}

template <class T>
struct QuadratureResult {
  T value;
  double error_estimate;
  std::size_t panels;
};

// Doubles the panel count until two successive estimates agree to abs_tol.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double abs_tol, std::size_t order = 32,
                        std::size_t max_panels = std::size_t{1} << 14) {
  using T = std::decay_t<decltype(f(a))>;
  std::size_t panels = 1;
  T prev = integrate(f, a, b, panels, order);
  while (panels < max_panels) {
    panels *= 2;
    T cur = integrate(f, a, b, panels, order);
    const double err = std::abs(cur - prev);
    if (err <= abs_tol) return QuadratureResult<T>{cur, err, panels};
    prev = cur;
  }
  fail(ErrorKind::domain, "adaptive quadrature did not converge within panel limit");
}

}  // namespace lfw
