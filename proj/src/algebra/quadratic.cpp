#include "idealis/algebra/quadratic.hpp"

#include <cmath>

namespace idealis {

void Quadratic::unify(const Quadratic& o) {
  if (d_ == o.d_) return;
  if (d_ == 0 && is_zero()) {
    d_ = o.d_;
    return;
  }
  if (o.d_ == 0 && o.is_zero()) return;
  throw FieldMismatch("quadratic fields with different radicands");
}

Rational Quadratic::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

Quadratic Quadratic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {a_ / n, -b_ / n, d_};
}

int Quadratic::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with d b^2.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  unify(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  unify(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  unify(o);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
  Rational b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string Quadratic::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string s;
  if (!a_.is_zero()) s = a_.to_string();
  if (b_.sign() > 0 && !s.empty()) s += '+';
  if (b_ == Rational(-1))
    s += '-';
  else if (!b_.is_one())
    s += b_.to_string() + '*';
  return s + "sqrt(" + std::to_string(d_) + ")";
}

double Quadratic::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

bool structural_less(const Quadratic& x, const Quadratic& y) {
  if (x.rational_part() != y.rational_part()) return x.rational_part() < y.rational_part();
  return x.sqrt_part() < y.sqrt_part();
}

}  // namespace idealis
