#include "lfw/sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lfw/errors.hpp"
#include "lfw/parallel.hpp"
#include "lfw/quadrature.hpp"
#include "lfw/summation.hpp"

namespace lfw {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_table(const EllTable& table, std::size_t n) {
  if (n > table.size()) {
    fail(ErrorKind::resource, "sum needs l(n) up to " + std::to_string(n) + " but the sieve holds " +
                                  std::to_string(table.size()));
  }
}

std::size_t floor_index(double x) { return x < 1.0 ? 0 : static_cast<std::size_t>(std::floor(x)); }

// chi(n) e(-n h / d) as one root of unity of order dividing lambda d.
cplx twisted_value(const Character& chi, std::size_t n, std::uint64_t h, std::uint64_t d) {
  const auto k = chi.exponent(static_cast<std::int64_t>(n));
  if (!k) return 0.0;
  const std::int64_t lambda = chi.denominator();
  const std::int64_t dd = static_cast<std::int64_t>(d);
  const std::int64_t nh = static_cast<std::int64_t>((n % d) * (h % d) % d);
  return unit_root(static_cast<std::int64_t>(*k) * dd - nh * lambda, lambda * dd);
}

struct Twist {
  PrimitivePart prim;
  cplx weight;  // tau(conj X) / q_X
  std::uint64_t denominator;
  std::uint64_t h;
};

Twist make_twist(const Character& chi, const Rational& xi, Phase phase) {
  Twist t{conductor_and_primitive_part(chi), 0.0, 1, xi.h};
  t.weight = gauss_sum(t.prim.primitive.conjugate()).tau / static_cast<double>(t.prim.conductor);
  t.denominator = phase == Phase::reduced ? t.prim.conductor * xi.k : xi.k;
  return t;
}

cplx twisted_prefix(const Character& chi, const Twist& tw, std::size_t n_max, const EllTable& table) {
  require_table(table, n_max);
  const cplx s = parallel::reduce<cplx>(1, n_max + 1, [&](std::size_t n) {
    const double l = table[n];
    return l == 0.0 ? cplx(0.0) : l * twisted_value(chi, n, tw.h, tw.denominator);
  });
  return tw.weight * s;
}

void check_zero_coverage(const ZeroList& zeros, const Character& primitive, double lower, double upper) {
  if (zeros.character != primitive.id()) {
    fail(ErrorKind::invalid_argument, "zero list belongs to " + zeros.character.str() + ", expected zeros of " +
                                          primitive.id().str());
  }
  if (!zeros.complete || zeros.t_min > lower || zeros.t_max < upper) {
    fail(ErrorKind::coverage, "zero list for " + zeros.character.str() + " covers (" + std::to_string(zeros.t_min) +
                                  ", " + std::to_string(zeros.t_max) + "]" + (zeros.complete ? "" : " incompletely") +
                                  " but (" + std::to_string(lower) + ", " + std::to_string(upper) + "] is needed");
  }
}

// Lowest ordinate a zero list must start below to count as covering (0, T].
constexpr double kZeroListFloor = 1.0;

cplx zero_term(const Character& chi, const Character& primitive, const FunctionalFactor& m_conj, const Rational& xi,
               const Zero& z) {
  const cplx rho(0.5, z.gamma);
  const cplx lp = induced_lprime(chi, primitive, rho, z.lprime);
  return std::exp(-rho * std::log(xi.value())) * lp * m_conj(1.0 - rho);
}

FitResult fit_points(const std::vector<GridPoint>& pts, bool literal) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : pts) xy.emplace_back(p.x, literal ? p.literal_residual.value_or(0.0) : p.residual);
  return fit_exponent(xy);
}

VerificationReport base_report(ReportKind kind, const Character& chi) {
  VerificationReport r;
  r.kind = kind;
  r.character = chi.id();
  r.conductor = chi.conductor();
  r.parity = chi.parity();
  return r;
}

void finish(VerificationReport& r, bool with_literal) {
  r.fit = fit_points(r.points, false);
  if (with_literal) r.literal_fit = fit_points(r.points, true);
  r.passed = r.fit.alpha <= r.threshold;
}

}  // namespace

Rational::Rational(std::uint64_t h_, std::uint64_t k_) : h(h_), k(k_) {
  if (h == 0 || k == 0) fail(ErrorKind::invalid_argument, "xi = h/k needs h, k > 0");
  if (std::gcd(h, k) != 1) fail(ErrorKind::invalid_argument, "xi = " + str() + " is not in lowest terms");
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const std::string hs = text.substr(0, slash);
    const unsigned long long hv = std::stoull(hs, &used);
    if (used != hs.size()) throw std::invalid_argument("h");
    unsigned long long kv = 1;
    if (slash != std::string::npos) {
      const std::string ks = text.substr(slash + 1);
      kv = std::stoull(ks, &used);
      if (used != ks.size()) throw std::invalid_argument("k");
    }
    return Rational(hv, kv);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "cannot parse rational '" + text + "'");
  }
}

std::string to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::ultraclean_ii: return "ultraclean_ii";
    case ReportKind::ultraclean_iii: return "ultraclean_iii";
    case ReportKind::twist_T: return "twist_T";
    case ReportKind::twist_smoothed: return "twist_smoothed";
    case ReportKind::eureka: return "eureka";
    case ReportKind::meowing: return "meowing";
  }
  return "unknown";
}

ReportKind parse_report_kind(const std::string& text) {
  for (auto k : {ReportKind::ultraclean_ii, ReportKind::ultraclean_iii, ReportKind::twist_T,
                 ReportKind::twist_smoothed, ReportKind::eureka, ReportKind::meowing}) {
    if (to_string(k) == text) return k;
  }
  fail(ErrorKind::parse, "unknown report kind '" + text + "'");
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points) {
  FitResult r;
  std::vector<double> xs, ys;
  for (const auto& [x, res] : points) {
    if (x > 0.0 && res > 0.0 && std::isfinite(res)) {
      xs.push_back(std::log(x));
      ys.push_back(std::log(res));
    } else {
      ++r.dropped;
    }
  }
  r.used = xs.size();
  if (r.used < 3) {
    fail(ErrorKind::fit, "exponent fit needs at least 3 positive residuals, got " + std::to_string(r.used));
  }
  const double n = static_cast<double>(r.used);
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0.0) fail(ErrorKind::fit, "exponent fit needs at least two distinct X values");
  r.alpha = sxy / sxx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (my + r.alpha * (xs[i] - mx));
    ssr += e * e;
  }
  r.std_error = std::sqrt(ssr / (n - 2.0) / sxx);
  return r;
}

cplx ell_char_sum(const Character& chi, double X, const EllTable& table) {
  const std::size_t n_max = floor_index(X);
  require_table(table, n_max);
  return parallel::reduce<cplx>(1, n_max + 1, [&](std::size_t n) {
    const double l = table[n];
    return l == 0.0 ? cplx(0.0) : l * chi(static_cast<std::int64_t>(n));
  });
}

cplx ell_char_sum_smoothed(const Character& chi, const Bump& bump, double X, const EllTable& table) {
  const std::size_t lo = floor_index(bump.a() * X) + 1;
  const std::size_t hi = sieve_needed_smoothed(1, bump, X);
  require_table(table, hi);
  return parallel::reduce<cplx>(lo, hi + 1, [&](std::size_t n) {
    const double l = table[n];
    return l == 0.0 ? cplx(0.0) : l * bump(static_cast<double>(n) / X) * chi(static_cast<std::int64_t>(n));
  });
}

double smoothed_main_term(std::uint64_t q, const Bump& bump, double X) { return F_integral(1, q, bump, X); }

VerificationReport compare_ultraclean_ii(const Character& chi, const std::vector<double>& grid,
                                         const EllTable& table) {
  VerificationReport r = base_report(ReportKind::ultraclean_ii, chi);
  for (double X : grid) {
    if (X < 10.0) fail(ErrorKind::invalid_argument, "ultraclean grid needs X >= 10");
    GridPoint p;
    p.x = X;
    p.lhs = ell_char_sum(chi, X, table);
    p.rhs = chi.is_principal() ? eval_P(chi.modulus(), X) : 0.0;
    p.residual = std::abs(p.lhs - p.rhs);
    p.terms = floor_index(X);
    r.points.push_back(p);
  }
  finish(r, false);
  return r;
}

VerificationReport compare_ultraclean_iii(const Character& chi, const Bump& bump, const std::vector<double>& grid,
                                          const EllTable& table) {
  VerificationReport r = base_report(ReportKind::ultraclean_iii, chi);
  r.bump = bump;
  for (double X : grid) {
    if (X < 10.0) fail(ErrorKind::invalid_argument, "ultraclean grid needs X >= 10");
    GridPoint p;
    p.x = X;
    p.lhs = ell_char_sum_smoothed(chi, bump, X, table);
    p.rhs = chi.is_principal() ? smoothed_main_term(chi.modulus(), bump, X) : 0.0;
    p.residual = std::abs(p.lhs - p.rhs);
    p.terms = sieve_needed_smoothed(1, bump, X) - floor_index(bump.a() * X);
    r.points.push_back(p);
  }
  finish(r, false);
  return r;
}

cplx C_constant(const Character& primitive, const Rational& xi) {
  if (!primitive.is_primitive()) fail(ErrorKind::domain, "C constant needs a primitive character");
  const std::uint64_t q = std::uint64_t{primitive.modulus()} * xi.k;
  if (std::gcd(xi.h, q) != 1) return 0.0;
  const int mu = mobius(xi.k);
  if (mu == 0) return 0.0;
  const cplx v = std::conj(primitive(static_cast<std::int64_t>(xi.h))) * primitive(static_cast<std::int64_t>(xi.k));
  return v * (static_cast<double>(mu) / static_cast<double>(euler_phi(q)));
}

double F_integral(std::uint64_t q, std::uint64_t k, const Bump& bump, double X) {
  const SingularPolynomial poly = singular_polynomial(q * k);
  const double scale = static_cast<double>(q) * X;
  const double lx = std::max(1.0, std::log(X));
  const auto f = [&](double v) { return bump(v) * poly.derivative(scale * v); };
  const double tol = 1e-10 * X * lx * lx / scale;
  return scale * integrate_adaptive(f, bump.a(), bump.b(), tol).value;
}

cplx induced_lprime(const Character& chi, const Character& primitive, cplx rho, cplx lprime_primitive) {
  cplx factor = 1.0;
  for (const auto& pp : factorize(chi.modulus())) {
    if (primitive.modulus() % pp.prime == 0) continue;
    const double p = static_cast<double>(pp.prime);
    factor *= 1.0 - primitive(static_cast<std::int64_t>(pp.prime)) * std::exp(-rho * std::log(p));
  }
  return lprime_primitive * factor;
}

cplx sigma1(const Character& chi, const Rational& xi, double T, const ZeroList& zeros) {
  const auto prim = conductor_and_primitive_part(chi);
  check_zero_coverage(zeros, prim.primitive, kZeroListFloor, T);
  const FunctionalFactor m_conj(prim.primitive.conjugate());
  CompensatedComplexSum acc;
  for (const auto& z : zeros.zeros) {
    if (z.gamma > T) break;
    acc.add(zero_term(chi, prim.primitive, m_conj, xi, z));
  }
  return acc.value();
}

std::size_t sigma4_terms(const Rational& xi, const Bump& bump, double X, const ZeroList& zeros) {
  const double scale = kTwoPi * xi.value() * X;
  std::size_t n = 0;
  for (const auto& z : zeros.zeros) n += bump(z.gamma / scale) != 0.0;
  return n;
}

cplx sigma4(const Character& chi, const Rational& xi, const Bump& bump, double X, const ZeroList& zeros) {
  const auto prim = conductor_and_primitive_part(chi);
  const double scale = kTwoPi * xi.value() * X;
  check_zero_coverage(zeros, prim.primitive, bump.a() * scale, bump.b() * scale);
  const FunctionalFactor m_conj(prim.primitive.conjugate());
  CompensatedComplexSum acc;
  for (const auto& z : zeros.zeros) {
    const double w = bump(z.gamma / scale);
    if (w == 0.0) continue;
    acc.add(w * zero_term(chi, prim.primitive, m_conj, xi, z));
  }
  return acc.value();
}

cplx sigma2(const Character& chi, const Rational& xi, double T, const EllTable& table, Phase phase) {
  const Twist tw = make_twist(chi, xi, phase);
  const double bound = static_cast<double>(tw.prim.conductor) * T / (kTwoPi * xi.value());
  return twisted_prefix(chi, tw, floor_index(bound), table);
}

cplx sigma3(const Character& chi, const Rational& xi, double u, const EllTable& table, Phase phase) {
  return twisted_prefix(chi, make_twist(chi, xi, phase), floor_index(u), table);
}

cplx sigma5(const Character& chi, const Rational& xi, const Bump& bump, double X, const EllTable& table,
            Phase phase) {
  const Twist tw = make_twist(chi, xi, phase);
  const double scale = static_cast<double>(tw.prim.conductor) * X;
  const std::size_t lo = floor_index(bump.a() * scale) + 1;
  const std::size_t hi = sieve_needed_smoothed(tw.prim.conductor, bump, X);
  require_table(table, hi);
  const cplx s = parallel::reduce<cplx>(lo, hi + 1, [&](std::size_t n) {
    const double l = table[n];
    if (l == 0.0) return cplx(0.0);
    return l * bump(static_cast<double>(n) / scale) * twisted_value(chi, n, tw.h, tw.denominator);
  });
  return tw.weight * s;
}

cplx sigma5_by_parts(const Character& chi, const Rational& xi, const Bump& bump, double X, const EllTable& table) {
  const Twist tw = make_twist(chi, xi, Phase::reduced);
  const double scale = static_cast<double>(tw.prim.conductor) * X;
  const std::size_t hi = sieve_needed_smoothed(tw.prim.conductor, bump, X);
  require_table(table, hi);
  // Sigma3(scale u) = S_n on [n / scale, (n + 1) / scale).
  const std::size_t first = floor_index(bump.a() * scale);
  CompensatedComplexSum prefix;
  for (std::size_t n = 1; n <= first; ++n) {
    if (table[n] != 0.0) prefix.add(tw.weight * (table[n] * twisted_value(chi, n, tw.h, tw.denominator)));
  }
  const auto dB = [&](double u) { return bump.derivative(u); };
  CompensatedComplexSum total;
  for (std::size_t n = first; n <= hi; ++n) {
    if (n > first && table[n] != 0.0) {
      prefix.add(tw.weight * (table[n] * twisted_value(chi, n, tw.h, tw.denominator)));
    }
    const double lo_u = std::max(bump.a(), static_cast<double>(n) / scale);
    const double hi_u = std::min(bump.b(), static_cast<double>(n + 1) / scale);
    if (hi_u <= lo_u) continue;
    const double piece = integrate(dB, lo_u, hi_u, 1, 24);
    total.add(-piece * prefix.value());
  }
  return total.value();
}

VerificationReport compare_twist_T(const Character& chi, const Rational& xi, const std::vector<double>& heights,
                                   const ZeroList& zeros, const EllTable& table) {
  VerificationReport r = base_report(ReportKind::twist_T, chi);
  r.xi = xi;
  for (double T : heights) {
    GridPoint p;
    p.x = T;
    p.lhs = sigma1(chi, xi, T, zeros);
    p.rhs = sigma2(chi, xi, T, table, Phase::reduced);
    p.residual = std::abs(p.lhs - p.rhs);
    p.literal_residual = std::abs(p.lhs - sigma2(chi, xi, T, table, Phase::literal));
    p.terms = static_cast<std::size_t>(std::count_if(zeros.zeros.begin(), zeros.zeros.end(),
                                                     [&](const Zero& z) { return z.gamma <= T; }));
    r.points.push_back(p);
  }
  finish(r, true);
  return r;
}

VerificationReport compare_twist_smoothed(const Character& chi, const Rational& xi, const Bump& bump,
                                          const std::vector<double>& grid, const ZeroList& zeros,
                                          const EllTable& table) {
  VerificationReport r = base_report(ReportKind::twist_smoothed, chi);
  r.xi = xi;
  r.bump = bump;
  double worst_parts = 0.0;
  for (double X : grid) {
    GridPoint p;
    p.x = X;
    p.lhs = sigma4(chi, xi, bump, X, zeros);
    p.rhs = sigma5(chi, xi, bump, X, table, Phase::reduced);
    p.residual = std::abs(p.lhs - p.rhs);
    p.literal_residual = std::abs(p.lhs - sigma5(chi, xi, bump, X, table, Phase::literal));
    p.terms = sigma4_terms(xi, bump, X, zeros);
    const cplx parts = sigma5_by_parts(chi, xi, bump, X, table);
    worst_parts = std::max(worst_parts, std::abs(parts - p.rhs) / std::max(std::abs(p.rhs), 1e-300));
    r.points.push_back(p);
  }
  finish(r, true);
  r.extras.emplace_back("by_parts_max_rel_err", worst_parts);
  return r;
}

GridPoint eureka_residual(const Character& primitive, const Rational& xi, const Bump& bump, double X,
                          const ZeroList& zeros) {
  if (!primitive.is_primitive()) fail(ErrorKind::domain, "eureka residual needs a primitive character");
  const Character chi = induce(primitive, primitive.modulus() * static_cast<std::uint32_t>(xi.k));
  GridPoint p;
  p.x = X;
  p.lhs = sigma4(chi, xi, bump, X, zeros);
  p.rhs = C_constant(primitive, xi) * F_integral(primitive.modulus(), xi.k, bump, X);
  p.residual = std::abs(p.lhs - p.rhs);
  p.terms = sigma4_terms(xi, bump, X, zeros);
  return p;
}

VerificationReport compare_eureka(const Character& primitive, const Rational& xi, const Bump& bump,
                                  const std::vector<double>& grid, const ZeroList& zeros) {
  VerificationReport r = base_report(ReportKind::eureka, primitive);
  r.xi = xi;
  r.bump = bump;
  for (double X : grid) r.points.push_back(eureka_residual(primitive, xi, bump, X, zeros));
  finish(r, false);
  r.extras.emplace_back("C_re", C_constant(primitive, xi).real());
  r.extras.emplace_back("C_im", C_constant(primitive, xi).imag());
  return r;
}

GridPoint meowing_check(const Character& primitive, const Rational& xi, const Bump& bump, double X,
                        const EllTable& table) {
  if (!primitive.is_primitive()) fail(ErrorKind::domain, "meowing check needs a primitive character");
  const Character chi = induce(primitive, primitive.modulus() * static_cast<std::uint32_t>(xi.k));
  GridPoint p;
  p.x = X;
  p.lhs = sigma5(chi, xi, bump, X, table, Phase::reduced);
  const cplx c = C_constant(primitive, xi);
  p.rhs = c == 0.0 ? cplx(0.0) : c * F_integral(primitive.modulus(), xi.k, bump, X);
  p.residual = std::abs(p.lhs - p.rhs);
  const double scale = primitive.modulus() * X;
  p.terms = sieve_needed_smoothed(primitive.modulus(), bump, X) - floor_index(bump.a() * scale);
  return p;
}

VerificationReport compare_meowing(const Character& primitive, const Rational& xi, const Bump& bump,
                                   const std::vector<double>& grid, const EllTable& table) {
  VerificationReport r = base_report(ReportKind::meowing, primitive);
  r.xi = xi;
  r.bump = bump;
  for (double X : grid) r.points.push_back(meowing_check(primitive, xi, bump, X, table));
  finish(r, false);
  r.extras.emplace_back("C_re", C_constant(primitive, xi).real());
  r.extras.emplace_back("C_im", C_constant(primitive, xi).imag());
  r.extras.emplace_back("k", static_cast<double>(xi.k));
  return r;
}

cplx meowing_by_characters(const Character& primitive, const Rational& xi, const Bump& bump, double X,
                           const EllTable& table) {
  if (!primitive.is_primitive()) fail(ErrorKind::domain, "meowing decomposition needs a primitive character");
  const std::uint32_t q = primitive.modulus() * static_cast<std::uint32_t>(xi.k);
  const auto chars = enumerate_characters(q);
  const double scale = primitive.modulus() * X;
  const std::size_t lo = floor_index(bump.a() * scale) + 1;
  const std::size_t hi = sieve_needed_smoothed(primitive.modulus(), bump, X);
  require_table(table, hi);
  std::vector<cplx> inner;
  inner.reserve(chars.size());
  for (const auto& c : chars) {
    CompensatedComplexSum s;
    for (std::size_t n = lo; n <= hi; ++n) {
      if (table[n] == 0.0) continue;
      s.add(table[n] * bump(static_cast<double>(n) / scale) * c(static_cast<std::int64_t>(n)));
    }
    inner.push_back(s.value());
  }
  CompensatedComplexSum outer;
  for (std::uint32_t a = 1; a < std::max<std::uint32_t>(q, 2); ++a) {
    if (std::gcd(a, q) != 1) continue;
    CompensatedComplexSum over_chars;
    for (std::size_t j = 0; j < chars.size(); ++j) over_chars.add(std::conj(chars[j](a)) * inner[j]);
    const std::int64_t phase = -static_cast<std::int64_t>((a % q) * (xi.h % q) % q);
    outer.add(unit_root(phase, q) * primitive(a) * over_chars.value());
  }
  const cplx weight = gauss_sum(primitive.conjugate()).tau / static_cast<double>(primitive.modulus());
  return weight * outer.value() / static_cast<double>(chars.size());
}

std::size_t sieve_needed_smoothed(std::uint64_t scale, const Bump& bump, double X) {
  return floor_index(bump.b() * static_cast<double>(scale) * X);
}

}  // namespace lfw
