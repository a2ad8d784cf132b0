#include "idealis/algebra/monomial.hpp"

#include <limits>

namespace idealis {

namespace {

Monomial::Exponent checked(unsigned v) {
  if (v > std::numeric_limits<Monomial::Exponent>::max()) throw Error("monomial exponent overflow");
  return static_cast<Monomial::Exponent>(v);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw Error("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    e_[i] = checked(exponents[i]);
    deg_ += exponents[i];
  }
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw Error("variable index out of range");
  Monomial m;
  m.e_[index] = checked(power);
  m.deg_ = power;
  return m;
}

unsigned Monomial::partial_degree(std::size_t first, std::size_t count) const {
  unsigned s = 0;
  for (std::size_t i = first; i < first + count; ++i) s += e_[i];
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.e_[i] = checked(unsigned{a.e_[i]} + b.e_[i]);
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.e_[i] < b.e_[i]) throw Error("monomial division is not exact");
    r.e_[i] = static_cast<Monomial::Exponent>(a.e_[i] - b.e_[i]);
  }
  r.deg_ = a.deg_ - b.deg_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    r.deg_ += r.e_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::with_exponent(std::size_t i, unsigned value) const {
  Monomial r = *this;
  r.deg_ = r.deg_ - r.e_[i] + value;
  r.e_[i] = checked(value);
  return r;
}

std::uint64_t Monomial::signature() const {
  // 8 bits per variable: bit k set iff exponent > k.
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = e_[i] > 8 ? 8 : e_[i];
    s |= ((1ULL << e) - 1ULL) << (8 * i);
  }
  return s;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : e_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace idealis
