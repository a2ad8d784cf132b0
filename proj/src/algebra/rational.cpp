#include "idealis/algebra/rational.hpp"

#include <functional>

namespace idealis {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational: '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  // Low limbs are enough to spread canonical values.
  auto limb = [](const mpz_class& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
  };
  std::size_t h = limb(v_.get_num()) * 0x9e3779b97f4a7c15ULL;
  h ^= limb(v_.get_den()) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(sgn(v_) + 1);
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

}  // namespace idealis
