#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lfw {

using cplx = std::complex<double>;

// exp(2 pi i k / n), exact at multiples of a quarter turn.
cplx unit_root(std::int64_t k, std::int64_t n);

struct CharacterId {
  std::uint32_t modulus = 1;
  std::uint32_t index = 0;

  // "chi_q.index"
  std::string str() const;
  // Parses "q.index" or "chi_q.index".
  static CharacterId parse(const std::string& text);
  auto operator<=>(const CharacterId&) const = default;
};

class Character;

// The unit group (Z/qZ)^* split by CRT into cyclic factors. Generators are
// ordered by prime; for 2^e with e >= 3 the factor -1 precedes 5.
class DirichletGroup {
 public:
  static constexpr std::uint32_t kMaxModulus = 1'000'000;

  struct Generator {
    std::uint32_t residue;      // generator lifted to Z/qZ (1 mod the other prime powers)
    std::uint32_t order;
    std::uint32_t prime;
    std::uint32_t prime_power;  // modulus of the CRT component it lives in
  };

  // Shared, cached instance. Throws invalid-modulus for q == 0.
  static std::shared_ptr<const DirichletGroup> get(std::uint32_t q);

  explicit DirichletGroup(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }
  std::uint32_t size() const noexcept { return phi_; }
  // Exponent of the group; every character value is a power of e(1/exponent).
  std::uint32_t exponent() const noexcept { return lambda_; }
  std::span<const Generator> generators() const noexcept { return gens_; }

  // Discrete logs of n on each generator; nullopt when gcd(n, q) > 1.
  std::optional<std::vector<std::uint32_t>> discrete_log(std::int64_t n) const;

  std::uint32_t index_of(std::span<const std::uint32_t> exponents) const;
  std::vector<std::uint32_t> exponents_of(std::uint32_t index) const;

  std::uint32_t residue_exponent(std::uint32_t generator, std::int64_t n) const;
  bool is_unit(std::int64_t n) const;

 private:
  struct Component {
    std::uint32_t prime;
    std::uint32_t prime_power;
    std::uint32_t first_generator;
    std::uint32_t generator_count;
    // log tables indexed by residue mod prime_power; UINT32_MAX for non-units
    std::vector<std::uint32_t> log0;
    std::vector<std::uint32_t> log1;
  };

  std::uint32_t q_;
  std::uint32_t phi_;
  std::uint32_t lambda_;
  std::vector<Generator> gens_;
  std::vector<Component> comps_;
  std::vector<std::uint32_t> gen_component_;
  std::vector<std::uint8_t> unit_;
};

// A Dirichlet character mod q given by exponents on the generators of
// (Z/qZ)^*: chi(g_j) = e(a_j / ord(g_j)). Values are held as exact exponents
// over the group exponent and only turned into complex numbers on request.
class Character {
 public:
  Character(std::shared_ptr<const DirichletGroup> group, std::vector<std::uint32_t> exponents);

  const DirichletGroup& group() const noexcept { return *group_; }
  std::shared_ptr<const DirichletGroup> group_ptr() const noexcept { return group_; }
  CharacterId id() const noexcept { return {group_->modulus(), index_}; }
  std::uint32_t modulus() const noexcept { return group_->modulus(); }
  std::uint32_t index() const noexcept { return index_; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  std::uint32_t conductor() const noexcept { return conductor_; }
  // kappa: 0 for even characters, 1 for odd.
  int parity() const noexcept { return parity_; }
  std::uint32_t order() const noexcept { return order_; }
  bool is_principal() const noexcept { return order_ == 1; }
  bool is_primitive() const noexcept { return conductor_ == modulus(); }
  bool is_real() const noexcept { return order_ <= 2; }

  // chi(n) = e(k / denominator()) with k = *exponent(n); nullopt when chi(n) = 0.
  std::optional<std::uint32_t> exponent(std::int64_t n) const;
  std::uint32_t denominator() const noexcept { return group_->exponent(); }

  cplx operator()(std::int64_t n) const;
  Character conjugate() const;

  bool operator==(const Character& other) const noexcept {
    return modulus() == other.modulus() && exps_ == other.exps_;
  }

 private:
  std::shared_ptr<const DirichletGroup> group_;
  std::vector<std::uint32_t> exps_;
  std::uint32_t index_ = 0;
  std::uint32_t conductor_ = 1;
  std::uint32_t order_ = 1;
  int parity_ = 0;
};

// All phi(q) characters mod q in lexicographic exponent order; index 0 is principal.
std::vector<Character> enumerate_characters(std::uint32_t q);
Character character(CharacterId id);
Character principal_character(std::uint32_t q);

struct PrimitivePart {
  std::uint32_t conductor;
  Character primitive;
};
PrimitivePart conductor_and_primitive_part(const Character& chi);

// The character mod q induced by a primitive character; q must be a multiple
// of its modulus (invalid-inducing error otherwise).
Character induce(const Character& primitive, std::uint32_t q);

struct GaussData {
  cplx tau;
  cplx epsilon;
};
// Direct q-term sum over the character's own modulus.
GaussData gauss_sum(const Character& chi);

}  // namespace lfw
