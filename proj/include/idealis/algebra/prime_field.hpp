#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "idealis/algebra/errors.hpp"

namespace idealis {

/// Residue class modulo an odd prime p < 2^62. The modulus travels with the
/// value; a default-constructed residue is an unbound zero (p = 0) that
/// adopts the modulus of the first operand it meets.
class Residue {
 public:
  Residue() = default;
  /// `value` must already be reduced into [0, p).
  Residue(std::uint64_t value, std::uint64_t p) : v_(value), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Residue inverse() const;
  Residue pow(std::uint64_t e) const;

  Residue& operator+=(const Residue& o) {
    unify(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    unify(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    unify(o);
    v_ = mul_mod(v_, o.v_, p_);
    return *this;
  }
  Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  Residue operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.v_ == b.v_ && (a.p_ == b.p_ || a.v_ == 0);
  }

  /// "n mod p".
  std::string to_string() const;
  std::size_t hash() const { return static_cast<std::size_t>(v_ * 0x9e3779b97f4a7c15ULL); }

  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (p < (1ULL << 32)) return (a * b) % p;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }

 private:
  void unify(const Residue& o) {
    if (p_ == o.p_) return;
    if (p_ == 0) {
      p_ = o.p_;
      return;
    }
    if (o.p_ == 0) return;
    throw FieldMismatch("residues modulo different primes");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline bool structural_less(const Residue& a, const Residue& b) { return a.value() < b.value(); }

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Throws BadPrime unless p is an odd prime below 2^62.
void require_odd_prime(std::uint64_t p);

/// A square root of d modulo p: the smaller of the two residues, or nothing
/// when d is a non-residue. Throws BadPrime when p divides d.
std::optional<std::uint64_t> sqrt_in_prime_field(std::uint64_t p, std::int64_t d);

}  // namespace idealis
