#include "idealis/algebra/prime_field.hpp"

#include <algorithm>

namespace idealis {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1U) r = Residue::mul_mod(r, b, p);
    b = Residue::mul_mod(b, b, p);
    e >>= 1U;
  }
  return r;
}

}  // namespace

Residue Residue::inverse() const {
  if (v_ == 0) throw DivisionByZero();
  // Extended Euclid on signed 128-bit to avoid overflow near 2^62.
  __int128 a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    __int128 q = a / m;
    __int128 t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (x0 < 0) x0 += p_;
  return {static_cast<std::uint64_t>(x0), p_};
}

Residue Residue::pow(std::uint64_t e) const { return {pow_mod(v_, e, p_), p_}; }

std::string Residue::to_string() const {
  return std::to_string(v_) + " mod " + std::to_string(p_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = Residue::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || p >= (1ULL << 62) || !is_prime(p))
    throw BadPrime("modulus " + std::to_string(p) + " is not an odd prime below 2^62");
}

std::optional<std::uint64_t> sqrt_in_prime_field(std::uint64_t p, std::int64_t d) {
  require_odd_prime(p);
  std::int64_t r = d % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  auto n = static_cast<std::uint64_t>(r);
  if (n == 0) throw BadPrime("prime " + std::to_string(p) + " divides " + std::to_string(d));
  if (pow_mod(n, (p - 1) / 2, p) != 1) return std::nullopt;

  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(n, q, p);
  std::uint64_t root = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = Residue::mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = Residue::mul_mod(b, b, p);
    m = i;
    c = Residue::mul_mod(b, b, p);
    t = Residue::mul_mod(t, c, p);
    root = Residue::mul_mod(root, b, p);
  }
  return std::min(root, p - root);
}

}  // namespace idealis
