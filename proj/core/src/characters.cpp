#include "lfw/characters.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "lfw/arithmetic.hpp"
#include "lfw/errors.hpp"
#include "lfw/summation.hpp"

namespace lfw {
namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    const std::int64_t qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint32_t primitive_root_mod_prime(std::uint32_t p) {
  if (p == 2) return 1;
  const auto f = factorize(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& pp : f) {
      if (powmod(g, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(ErrorKind::invalid_modulus, "no primitive root found");
}

std::uint64_t normalize(std::int64_t n, std::uint64_t q) {
  const std::int64_t r = n % static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

cplx unit_root(std::int64_t k, std::int64_t n) {
  std::int64_t r = k % n;
  if (r < 0) r += n;
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  if (2 * r > n) r -= n;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

std::string CharacterId::str() const {
  return "chi_" + std::to_string(modulus) + "." + std::to_string(index);
}

CharacterId CharacterId::parse(const std::string& text) {
  std::string body = text;
  if (body.rfind("chi_", 0) == 0) body = body.substr(4);
  const auto dot = body.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == body.size()) {
    fail(ErrorKind::parse, "character selector '" + text + "' is not of the form q.index");
  }
  try {
    std::size_t used = 0;
    const unsigned long q = std::stoul(body.substr(0, dot), &used);
    if (used != dot) throw std::invalid_argument("q");
    const std::string tail = body.substr(dot + 1);
    const unsigned long idx = std::stoul(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("index");
    return {static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(idx)};
  } catch (const std::exception&) {
    fail(ErrorKind::parse, "character selector '" + text + "' is not of the form q.index");
  }
}

std::shared_ptr<const DirichletGroup> DirichletGroup::get(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::weak_ptr<const DirichletGroup>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[q];
  if (auto sp = slot.lock()) return sp;
  auto sp = std::make_shared<const DirichletGroup>(q);
  slot = sp;
  return sp;
}

DirichletGroup::DirichletGroup(std::uint32_t q) : q_(q), phi_(1), lambda_(1) {
  if (q == 0) fail(ErrorKind::invalid_modulus, "modulus must be positive");
  if (q > kMaxModulus) fail(ErrorKind::invalid_modulus, "modulus " + std::to_string(q) + " too large");
  phi_ = static_cast<std::uint32_t>(euler_phi(q));

  unit_.resize(q);
  for (std::uint32_t n = 0; n < q; ++n) unit_[n] = std::gcd(n, q) == 1 ? 1 : 0;

  for (const auto& [p64, e] : factorize(q)) {
    const auto p = static_cast<std::uint32_t>(p64);
    std::uint32_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    const std::uint64_t cofactor = q / pe;
    auto lift = [&](std::uint64_t g) {
      if (cofactor == 1) return static_cast<std::uint32_t>(g % pe);
      // r = 1 (mod cofactor), r = g (mod pe)
      const std::uint64_t t = ((g + pe - 1) % pe) * inverse_mod(cofactor % pe, pe) % pe;
      return static_cast<std::uint32_t>((1 + cofactor * t) % q);
    };

    Component comp{p, pe, static_cast<std::uint32_t>(gens_.size()), 0, {}, {}};
    if (p != 2) {
      std::uint64_t g = primitive_root_mod_prime(p);
      if (e >= 2 && powmod(g, p - 1, std::uint64_t{p} * p) == 1) g += p;
      const std::uint32_t order = pe / p * (p - 1);
      comp.log0.assign(pe, kNoLog);
      std::uint64_t x = 1;
      for (std::uint32_t k = 0; k < order; ++k) {
        comp.log0[x] = k;
        x = x * g % pe;
      }
      gens_.push_back({lift(g), order, p, pe});
      comp.generator_count = 1;
    } else if (e == 2) {
      comp.log0.assign(4, kNoLog);
      comp.log0[1] = 0;
      comp.log0[3] = 1;
      gens_.push_back({lift(3), 2, 2, 4});
      comp.generator_count = 1;
    } else if (e >= 3) {
      const std::uint32_t m = pe / 4;
      comp.log0.assign(pe, kNoLog);
      comp.log1.assign(pe, kNoLog);
      std::uint64_t x = 1;
      for (std::uint32_t b = 0; b < m; ++b) {
        comp.log0[x] = 0;
        comp.log1[x] = b;
        comp.log0[pe - x] = 1;
        comp.log1[pe - x] = b;
        x = x * 5 % pe;
      }
      gens_.push_back({lift(pe - 1), 2, 2, pe});
      gens_.push_back({lift(5), m, 2, pe});
      comp.generator_count = 2;
    }
    for (std::uint32_t j = 0; j < comp.generator_count; ++j) {
      gen_component_.push_back(static_cast<std::uint32_t>(comps_.size()));
    }
    comps_.push_back(std::move(comp));
  }
  for (const auto& g : gens_) lambda_ = std::lcm(lambda_, g.order);
}

bool DirichletGroup::is_unit(std::int64_t n) const { return unit_[normalize(n, q_)] != 0; }

std::optional<std::vector<std::uint32_t>> DirichletGroup::discrete_log(std::int64_t n) const {
  const std::uint64_t r = normalize(n, q_);
  if (!unit_[r]) return std::nullopt;
  std::vector<std::uint32_t> logs;
  logs.reserve(gens_.size());
  for (const auto& c : comps_) {
    if (c.generator_count == 0) continue;
    const std::uint64_t x = r % c.prime_power;
    logs.push_back(c.log0[x]);
    if (c.generator_count == 2) logs.push_back(c.log1[x]);
  }
  return logs;
}

std::uint32_t DirichletGroup::residue_exponent(std::uint32_t generator, std::int64_t n) const {
  const std::uint64_t r = normalize(n, q_);
  const auto& c = comps_[gen_component_[generator]];
  const std::uint64_t x = r % c.prime_power;
  return generator == c.first_generator ? c.log0[x] : c.log1[x];
}

std::uint32_t DirichletGroup::index_of(std::span<const std::uint32_t> exponents) const {
  if (exponents.size() != gens_.size()) fail(ErrorKind::invalid_argument, "exponent vector length mismatch");
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (exponents[j] >= gens_[j].order) fail(ErrorKind::invalid_argument, "exponent out of range");
    idx = idx * gens_[j].order + exponents[j];
  }
  return static_cast<std::uint32_t>(idx);
}

std::vector<std::uint32_t> DirichletGroup::exponents_of(std::uint32_t index) const {
  if (index >= phi_) {
    fail(ErrorKind::invalid_argument,
         "character index " + std::to_string(index) + " out of range for modulus " + std::to_string(q_));
  }
  std::vector<std::uint32_t> exps(gens_.size());
  for (std::size_t j = gens_.size(); j-- > 0;) {
    exps[j] = index % gens_[j].order;
    index /= gens_[j].order;
  }
  return exps;
}

Character::Character(std::shared_ptr<const DirichletGroup> group, std::vector<std::uint32_t> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
  const auto gens = group_->generators();
  index_ = group_->index_of(exps_);

  std::uint32_t order = 1;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    order = std::lcm(order, gens[j].order / std::gcd(exps_[j], gens[j].order));
  }
  order_ = order;

  // Conductor, one CRT component at a time.
  std::uint32_t conductor = 1;
  for (std::size_t j = 0; j < gens.size();) {
    const auto& g = gens[j];
    if (g.prime != 2) {
      if (exps_[j] != 0) {
        const std::uint32_t d = g.order / std::gcd(exps_[j], g.order);
        std::uint32_t f = g.prime;
        for (unsigned v = valuation(d, g.prime); v > 0; --v) f *= g.prime;
        conductor *= f;
      }
      ++j;
      continue;
    }
    const bool two_gens = j + 1 < gens.size() && gens[j + 1].prime == 2;
    const std::uint32_t a = exps_[j];
    const std::uint32_t b = two_gens ? exps_[j + 1] : 0;
    if (b != 0) {
      const std::uint32_t m = gens[j + 1].order;
      const std::uint32_t d = m / std::gcd(b, m);
      conductor *= 4u << valuation(d, 2);
    } else if (a != 0) {
      conductor *= 4;
    }
    j += two_gens ? 2 : 1;
  }
  conductor_ = conductor;

  const auto minus_one = exponent(-1);
  parity_ = (minus_one && *minus_one != 0) ? 1 : 0;
}

std::optional<std::uint32_t> Character::exponent(std::int64_t n) const {
  if (!group_->is_unit(n)) return std::nullopt;
  const auto gens = group_->generators();
  const std::uint64_t lambda = group_->exponent();
  std::uint64_t k = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (exps_[j] == 0) continue;
    const std::uint64_t log = group_->residue_exponent(static_cast<std::uint32_t>(j), n);
    k = (k + exps_[j] * (lambda / gens[j].order) % lambda * log) % lambda;
  }
  return static_cast<std::uint32_t>(k);
}

cplx Character::operator()(std::int64_t n) const {
  const auto k = exponent(n);
  if (!k) return {0.0, 0.0};
  return unit_root(*k, denominator());
}

Character Character::conjugate() const {
  std::vector<std::uint32_t> conj(exps_.size());
  const auto gens = group_->generators();
  for (std::size_t j = 0; j < exps_.size(); ++j) conj[j] = (gens[j].order - exps_[j]) % gens[j].order;
  return Character(group_, std::move(conj));
}

std::vector<Character> enumerate_characters(std::uint32_t q) {
  const auto group = DirichletGroup::get(q);
  std::vector<Character> out;
  out.reserve(group->size());
  for (std::uint32_t i = 0; i < group->size(); ++i) out.emplace_back(group, group->exponents_of(i));
  return out;
}

Character character(CharacterId id) {
  const auto group = DirichletGroup::get(id.modulus);
  return Character(group, group->exponents_of(id.index));
}

Character principal_character(std::uint32_t q) { return character({q, 0}); }

namespace {

// Character on the group mod `target` whose value at each generator is taken
// from `source` at a unit lift of that generator.
Character transport(const Character& source, std::uint32_t target) {
  const auto group = DirichletGroup::get(target);
  const std::uint32_t q = source.modulus();
  const std::uint64_t lambda = source.denominator();
  std::vector<std::uint32_t> exps;
  for (const auto& g : group->generators()) {
    std::uint64_t n = g.residue;
    if (target < q) {
      // Need n = g (mod target) and gcd(n, q) = 1.
      while (std::gcd(n, std::uint64_t{q}) != 1) n += target;
    }
    const auto k = source.exponent(static_cast<std::int64_t>(n));
    if (!k) fail(ErrorKind::invalid_argument, "generator lift is not a unit");
    const std::uint64_t num = std::uint64_t{*k} * g.order;
    if (num % lambda != 0) fail(ErrorKind::invalid_argument, "character does not factor through target modulus");
    exps.push_back(static_cast<std::uint32_t>(num / lambda % g.order));
  }
  return Character(group, std::move(exps));
}

}  // namespace

PrimitivePart conductor_and_primitive_part(const Character& chi) {
  if (chi.is_primitive()) return {chi.conductor(), chi};
  return {chi.conductor(), transport(chi, chi.conductor())};
}

Character induce(const Character& primitive, std::uint32_t q) {
  if (q == 0 || q % primitive.modulus() != 0) {
    fail(ErrorKind::invalid_inducing, "modulus " + std::to_string(q) + " is not a multiple of " +
                                          std::to_string(primitive.modulus()));
  }
  if (q == primitive.modulus()) return primitive;
  return transport(primitive, q);
}

GaussData gauss_sum(const Character& chi) {
  const std::int64_t q = chi.modulus();
  const std::int64_t lambda = chi.denominator();
  CompensatedComplexSum acc;
  for (std::int64_t a = 0; a < q; ++a) {
    const auto k = chi.exponent(a);
    if (!k) continue;
    // chi(a) e(a/q) = e((k q + a lambda) / (lambda q))
    acc.add(unit_root(static_cast<std::int64_t>(*k) * q + a * lambda, lambda * q));
  }
  const cplx tau = acc.value();
  const cplx i_kappa = chi.parity() == 1 ? cplx(0.0, 1.0) : cplx(1.0, 0.0);
  return {tau, tau / (i_kappa * std::sqrt(static_cast<double>(q)))};
}

}  // namespace lfw
