#include "lfw/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "lfw/arithmetic.hpp"
#include "lfw/characters.hpp"
#include "lfw/errors.hpp"
#include "lfw/lfunc.hpp"
#include "lfw/sums.hpp"

namespace lfw {
namespace {

struct Worst {
  double value = 0.0;
  std::string where;
  void update(double err, const std::string& at) {
    if (!(err <= value)) {
      value = err;
      where = at;
    }
  }
};

std::string at(const Character& chi, cplx s) {
  return chi.id().str() + " at " + std::to_string(s.real()) + "+" + std::to_string(s.imag()) + "i";
}

std::vector<Character> primitive_up_to(std::uint32_t qmax) {
  std::vector<Character> out;
  for (std::uint32_t q = 1; q <= qmax; ++q) {
    for (auto& chi : enumerate_characters(q)) {
      if (chi.is_primitive()) out.push_back(chi);
    }
  }
  return out;
}

Worst functional_equation(const RunConfig& cfg) {
  const auto pts = halton_strip_points(static_cast<std::size_t>(cfg.integer("selftest.points")),
                                       static_cast<std::uint64_t>(cfg.integer("selftest.sequence_offset")), 0.1, 0.9,
                                       2.0, 40.0);
  const EvalParams p = cfg.eval_params();
  Worst w;
  for (const auto& chi : primitive_up_to(static_cast<std::uint32_t>(cfg.integer("selftest.max_modulus")))) {
    const FunctionalFactor m(chi);
    const Character bar = chi.conjugate();
    for (cplx s : pts) {
      const cplx lhs = L(s, chi, p);
      const cplx rhs = m(s) * L(1.0 - s, bar, p);
      w.update(std::abs(lhs - rhs) / std::abs(lhs), at(chi, s));
    }
  }
  return w;
}

Worst gauss_identities() {
  Worst w;
  for (const auto& chi : primitive_up_to(24)) {
    const double q = chi.modulus();
    const cplx t = gauss_sum(chi).tau;
    const cplx tb = gauss_sum(chi.conjugate()).tau;
    const double sign = chi.parity() ? -1.0 : 1.0;
    w.update(std::fabs(std::norm(t) - q) / q, chi.id().str() + " |tau|^2");
    w.update(std::abs(t * tb - sign * q) / q, chi.id().str() + " tau tau_bar");
  }
  return w;
}

Worst orthogonality() {
  Worst w;
  for (std::uint32_t q = 1; q <= 24; ++q) {
    const auto chars = enumerate_characters(q);
    const double phi = static_cast<double>(euler_phi(q));
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        cplx s = 0.0;
        for (const auto& c : chars) s += c(a) * std::conj(c(b));
        const bool same = gcd(a, q) == 1 && a == b;
        w.update(std::abs(s - (same ? phi : 0.0)), "q=" + std::to_string(q));
      }
    }
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = 0; j < chars.size(); ++j) {
        cplx s = 0.0;
        for (std::uint32_t a = 0; a < q; ++a) s += chars[i](a) * std::conj(chars[j](a));
        w.update(std::abs(s - (i == j ? phi : 0.0)), "q=" + std::to_string(q));
      }
    }
  }
  return w;
}

Worst residue_bridge(const RunConfig& cfg) {
  Worst w;
  for (std::uint64_t q : {1, 3, 4}) {
    for (double X : {10.0, 100.0}) {
      const cplx c = D_residue_contour(q, X, 0.3, 256, cfg.eval_params());
      const double P = eval_P(q, X);
      w.update(std::abs(c - P) / std::fabs(P), "q=" + std::to_string(q) + " X=" + std::to_string(X));
    }
  }
  return w;
}

Worst derivatives(const RunConfig& cfg) {
  const auto pts = halton_strip_points(20, static_cast<std::uint64_t>(cfg.integer("selftest.sequence_offset")), 0.1,
                                       1.5, 2.0, 40.0);
  const EvalParams p = cfg.eval_params();
  const double h = 1e-4;
  Worst w;
  for (std::uint32_t q : {1u, 3u, 4u, 5u}) {
    for (const auto& chi : enumerate_characters(q)) {
      if (!chi.is_primitive()) continue;
      for (cplx s : pts) {
        const cplx cauchy = L_derivative(s, chi, 1, p);
        const cplx fd = (L(s + h, chi, p) - L(s - h, chi, p)) / (2.0 * h);
        w.update(std::abs(cauchy - fd) / std::abs(cauchy), at(chi, s));
      }
    }
  }
  return w;
}

Worst sieve() {
  const std::size_t N = 10000;
  EllTable table(N);
  Worst w;
  for (std::size_t n = 1; n <= N; ++n) {
    // Divisor sum straight from the definition.
    double direct = 0.0;
    for (std::size_t a = 1; a * a <= n; ++a) {
      if (n % a != 0) continue;
      const std::size_t b = n / a;
      direct += mangoldt(a) * std::log(static_cast<double>(b));
      if (b != a) direct += mangoldt(b) * std::log(static_cast<double>(a));
    }
    w.update(std::fabs(table[n] - direct), "n=" + std::to_string(n));
  }
  return w;
}

Worst stieltjes_digits() {
  Worst w;
  for (int n : {0, 1}) {
    const auto c = stieltjes_self_check(n);
    w.update(std::fabs(c.coarse - c.fine), "gamma_" + std::to_string(n));
  }
  return w;
}

Worst bump_nodes(const RunConfig& cfg) {
  const Bump b = cfg.bump();
  Worst w;
  for (cplx s : {cplx(2.0, 0.0), cplx(0.5, 3.0), cplx(1.0, 10.0)}) {
    w.update(std::abs(b.mellin_fixed(s, 64) - b.mellin_fixed(s, 128)), "s=" + std::to_string(s.imag()));
  }
  return w;
}

Worst by_parts(const RunConfig& cfg) {
  const Bump b = cfg.bump();
  Worst w;
  for (const auto& [id, xi] : {std::pair{CharacterId{1, 0}, Rational(1, 1)}, std::pair{CharacterId{4, 1}, Rational(1, 2)},
                               std::pair{CharacterId{5, 2}, Rational(2, 3)}}) {
    const Character chi = character(id);
    const double X = 50.0;
    EllTable table(sieve_needed_smoothed(chi.conductor(), b, X) + 1, cfg.max_sieve());
    const cplx direct = sigma5(chi, xi, b, X, table);
    const cplx parts = sigma5_by_parts(chi, xi, b, X, table);
    w.update(std::abs(direct - parts) / std::abs(direct), id.str() + " xi=" + xi.str() + " X=50");
  }
  return w;
}

Worst meowing_decomposition(const RunConfig& cfg) {
  const Bump b = cfg.bump();
  const Character chi = character({4, 1});
  const Rational xi(1, 3);
  const double X = 100.0;
  EllTable table(sieve_needed_smoothed(4, b, X) + 1, cfg.max_sieve());
  const cplx lhs = meowing_check(chi, xi, b, X, table).lhs;
  const cplx rebuilt = meowing_by_characters(chi, xi, b, X, table);
  Worst w;
  w.update(std::abs(lhs - rebuilt) / std::max(1.0, std::abs(lhs)), "chi_4.1 xi=1/3 X=100");
  return w;
}

}  // namespace

std::vector<SelftestCheck> run_selftest(const RunConfig& cfg) {
  struct Entry {
    std::string name;
    double tolerance;
    std::function<Worst()> run;
  };
  const std::vector<Entry> entries = {
      {"functional_equation", 1e-8, [&] { return functional_equation(cfg); }},
      {"gauss_identities", 1e-10, [] { return gauss_identities(); }},
      {"orthogonality", 1e-12, [] { return orthogonality(); }},
      {"residue_bridge", 1e-5, [&] { return residue_bridge(cfg); }},
      {"derivative_cauchy_vs_difference", 1e-6, [&] { return derivatives(cfg); }},
      {"ell_sieve_vs_divisor_sum", 1e-12, [] { return sieve(); }},
      {"stieltjes_stability", 1e-12, [] { return stieltjes_digits(); }},
      {"bump_mellin_node_doubling", 1e-12, [&] { return bump_nodes(cfg); }},
      {"summation_by_parts", 1e-6, [&] { return by_parts(cfg); }},
      {"meowing_decomposition", 1e-10, [&] { return meowing_decomposition(cfg); }},
  };
  std::vector<SelftestCheck> out;
  for (const auto& e : entries) {
    SelftestCheck c;
    c.name = e.name;
    c.tolerance = e.tolerance;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Worst w = e.run();
      c.worst = w.value;
      c.detail = w.where;
      c.passed = w.value <= e.tolerance;
    } catch (const std::exception& ex) {
      c.passed = false;
      c.detail = ex.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lfw
