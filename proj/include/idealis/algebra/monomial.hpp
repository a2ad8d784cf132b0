#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "idealis/algebra/errors.hpp"

namespace idealis {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector over at most kMaxVariables variables with cached total
/// degree. Unused trailing slots are zero.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  /// Sum of exponents over the first `count` variables.
  unsigned partial_degree(std::size_t first, std::size_t count) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& other) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  Monomial with_exponent(std::size_t i, unsigned value) const;

  /// Bit signature for fast divisibility rejection.
  std::uint64_t signature() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  /// Lexicographic comparison of exponent vectors (x0 most significant).
  friend bool lex_less(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> e_{};
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace idealis
