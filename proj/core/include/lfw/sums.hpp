#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfw/arithmetic.hpp"
#include "lfw/bump.hpp"
#include "lfw/characters.hpp"
#include "lfw/lfunc.hpp"
#include "lfw/zeros.hpp"

namespace lfw {

// xi = h / k with h, k > 0 coprime.
struct Rational {
  std::uint64_t h = 1;
  std::uint64_t k = 1;

  Rational() = default;
  Rational(std::uint64_t h, std::uint64_t k);
  double value() const noexcept { return static_cast<double>(h) / static_cast<double>(k); }
  std::string str() const { return std::to_string(h) + "/" + std::to_string(k); }
  static Rational parse(const std::string& text);
  bool operator==(const Rational&) const = default;
};

enum class ReportKind { ultraclean_ii, ultraclean_iii, twist_T, twist_smoothed, eureka, meowing };
std::string to_string(ReportKind kind);
ReportKind parse_report_kind(const std::string& text);

enum class Phase {
  reduced,  // e(-n xi / conductor), the convention used throughout
  literal,  // e(-n xi)
};

struct GridPoint {
  double x = 0.0;
  cplx lhs;
  cplx rhs;
  double residual = 0.0;
  std::optional<double> literal_residual;  // twist reports: rhs with the literal phase
  std::size_t terms = 0;                   // number of zeros or integers that entered lhs
};

struct FitResult {
  double alpha = 0.0;
  double std_error = 0.0;
  std::size_t used = 0;
  std::size_t dropped = 0;
};

// Least-squares slope of log residual against log X; nonpositive residuals
// are dropped and counted. Fit error with fewer than three usable points.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& points);

struct VerificationReport {
  ReportKind kind = ReportKind::ultraclean_ii;
  CharacterId character;
  std::uint32_t conductor = 1;
  int parity = 0;
  std::optional<Rational> xi;
  std::optional<Bump> bump;
  std::vector<GridPoint> points;
  FitResult fit;
  std::optional<FitResult> literal_fit;
  double threshold = 0.75;
  bool passed = false;
  std::vector<std::pair<std::string, double>> extras;
};

// Sum over n <= X of l(n) chi(n). The table must cover floor(X).
cplx ell_char_sum(const Character& chi, double X, const EllTable& table);
// Sum over n of l(n) chi(n) B(n / X).
cplx ell_char_sum_smoothed(const Character& chi, const Bump& bump, double X, const EllTable& table);
// X * int B(v) P'_q(Xv) dv, the smoothed main term for principal chi mod q.
double smoothed_main_term(std::uint64_t q, const Bump& bump, double X);

VerificationReport compare_ultraclean_ii(const Character& chi, const std::vector<double>& grid, const EllTable& table);
VerificationReport compare_ultraclean_iii(const Character& chi, const Bump& bump, const std::vector<double>& grid,
                                          const EllTable& table);

// conj X(h) X(k) mu(k) / phi(qk) when gcd(h, qk) = 1, else 0.
cplx C_constant(const Character& primitive, const Rational& xi);
// int B(u / (qX)) P'_{qk}(u) du with q the conductor.
double F_integral(std::uint64_t q, std::uint64_t k, const Bump& bump, double X);

// L'(rho, chi) from L'(rho, X) for chi induced from X, at a zero of L(s, X).
cplx induced_lprime(const Character& chi, const Character& primitive, cplx rho, cplx lprime_primitive);

// Zero-side sums over zeros of the primitive character inducing chi.
cplx sigma1(const Character& chi, const Rational& xi, double T, const ZeroList& zeros);
cplx sigma4(const Character& chi, const Rational& xi, const Bump& bump, double X, const ZeroList& zeros);
std::size_t sigma4_terms(const Rational& xi, const Bump& bump, double X, const ZeroList& zeros);

// Arithmetic-side twisted sums with weight tau(conj X)/q_X.
cplx sigma2(const Character& chi, const Rational& xi, double T, const EllTable& table, Phase phase = Phase::reduced);
cplx sigma3(const Character& chi, const Rational& xi, double u, const EllTable& table, Phase phase = Phase::reduced);
cplx sigma5(const Character& chi, const Rational& xi, const Bump& bump, double X, const EllTable& table,
            Phase phase = Phase::reduced);
// -int B'(u) sigma3(q X u) du evaluated by quadrature between the jumps of sigma3.
cplx sigma5_by_parts(const Character& chi, const Rational& xi, const Bump& bump, double X, const EllTable& table);

VerificationReport compare_twist_T(const Character& chi, const Rational& xi, const std::vector<double>& heights,
                                   const ZeroList& zeros, const EllTable& table);
VerificationReport compare_twist_smoothed(const Character& chi, const Rational& xi, const Bump& bump,
                                          const std::vector<double>& grid, const ZeroList& zeros,
                                          const EllTable& table);

// chi = induce(X, q_X k); lhs = sigma4 with L'(rho, chi), rhs = C F.
GridPoint eureka_residual(const Character& primitive, const Rational& xi, const Bump& bump, double X,
                          const ZeroList& zeros);
VerificationReport compare_eureka(const Character& primitive, const Rational& xi, const Bump& bump,
                                  const std::vector<double>& grid, const ZeroList& zeros);

// lhs = sigma5 for chi = induce(X, q_X k); rhs = C F.
GridPoint meowing_check(const Character& primitive, const Rational& xi, const Bump& bump, double X,
                        const EllTable& table);
VerificationReport compare_meowing(const Character& primitive, const Rational& xi, const Bump& bump,
                                   const std::vector<double>& grid, const EllTable& table);

// The meowing left side rebuilt from the full set of characters mod q_X k by
// orthogonality; equal to meowing_check(...).lhs as an algebraic identity.
cplx meowing_by_characters(const Character& primitive, const Rational& xi, const Bump& bump, double X,
                           const EllTable& table);

// Largest integer needed from the l table by each arithmetic sum.
std::size_t sieve_needed_smoothed(std::uint64_t scale, const Bump& bump, double X);

}  // namespace lfw
