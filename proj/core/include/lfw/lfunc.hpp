#pragma once

#include <cstdint>

#include "lfw/characters.hpp"

namespace lfw {

struct EvalParams {
  int em_shift = 10;         // minimum Euler-Maclaurin start index M
  int em_order = 8;          // Bernoulli correction terms
  double deriv_radius = 0.25;
  int deriv_nodes = 64;
  double target_abs_err = 1e-10;
};

// Start index actually used at s: the configured shift raised so that the
// Bernoulli corrections converge fast enough on the critical strip.
int em_terms(cplx s, const EvalParams& p);

// Hurwitz zeta(s, a) for a in (0, 1]. Pole error at s = 1.
cplx hurwitz_zeta(cplx s, double a, const EvalParams& p = {});

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q). Pole error at s = 1 for principal chi.
cplx L(cplx s, const Character& chi, const EvalParams& p = {});

// L(s, chi) - delta_chi c_q / (s - 1) with c_q = phi(q)/q; entire.
cplx L_tilde(cplx s, const Character& chi, const EvalParams& p = {});

struct LJet {
  cplx value;
  cplx first;
  cplx second;
};

// Value and first two derivatives from one Cauchy circle of the given radius.
// For principal chi the circle is applied to L_tilde and the pole term is
// differentiated exactly; the circle must then stay away from s = 1.
LJet L_jet(cplx s, const Character& chi, const EvalParams& p = {});
LJet L_jet(cplx s, const Character& chi, double radius, const EvalParams& p);

cplx L_derivative(cplx s, const Character& chi, int order, const EvalParams& p = {});

// L'(s)^2 / L(s). Near-zero error when |L| < 1e-9 |L'|.
cplx D(cplx s, const Character& chi, const EvalParams& p = {});

// The asymmetric functional-equation factor of a primitive character,
// L(s, X) = M_X(s) L(1 - s, conj X), assembled in log space.
class FunctionalFactor {
 public:
  explicit FunctionalFactor(const Character& primitive);

  cplx operator()(cplx s) const;
  cplx log_value(cplx s) const;
  cplx epsilon() const noexcept { return epsilon_; }
  cplx tau() const noexcept { return tau_; }

 private:
  double q_;
  int kappa_;
  cplx tau_;
  cplx epsilon_;
  cplx log_epsilon_;
};

cplx M_factor(cplx s, const Character& primitive);

// Leading term of M_X(1 - c - it) for large t.
cplx M_asymptotic(double c, double t, const Character& primitive);

// |M_X(1 - c - it) / M_asymptotic(c, t) - 1|
double M_asymptotic_error(double c, double t, const Character& primitive);

// Singular part of D(s, chi_{0,q}) at s = 1. Pole error at s = 1.
cplx D_infinity(cplx s, std::uint64_t q);

// (1 / 2 pi i) times the integral of D(s, chi_{0,q}) X^s / s around |s - 1| = radius,
// by the trapezoid rule with `nodes` points.
cplx D_residue_contour(std::uint64_t q, double X, double radius = 0.3, int nodes = 256, const EvalParams& p = {});

}  // namespace lfw
