#pragma once

#include <cstdint>
#include <string>

#include "idealis/algebra/rational.hpp"

namespace idealis {

/// Element a + b*sqrt(d) of Q(sqrt d) for a squarefree integer d > 1 that is
/// carried by every element. A default-constructed element is zero with d = 0
/// and only combines with elements of the same d after assignment.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  std::int64_t radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Quadratic conjugate() const { return {a_, -b_, d_}; }
  /// a^2 - d b^2; nonzero for nonzero elements since d is not a square.
  Rational norm() const;
  Quadratic inverse() const;
  /// Exact sign of the real number a + b sqrt(d).
  int sign() const;

  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o) { return *this *= o.inverse(); }

  friend Quadratic operator+(Quadratic a, const Quadratic& b) { return a += b; }
  friend Quadratic operator-(Quadratic a, const Quadratic& b) { return a -= b; }
  friend Quadratic operator*(Quadratic a, const Quadratic& b) { return a *= b; }
  friend Quadratic operator/(Quadratic a, const Quadratic& b) { return a /= b; }
  Quadratic operator-() const { return {-a_, -b_, d_}; }

  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.is_rational() || x.d_ == y.d_);
  }

  /// "p/q" when rational, otherwise "p/q+r/s*sqrt(d)".
  std::string to_string() const;
  double to_double() const;
  std::size_t hash() const { return a_.hash() * 31 + b_.hash(); }

 private:
  void unify(const Quadratic& o);

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

/// Structural total order (by rational part, then sqrt part).
bool structural_less(const Quadratic& x, const Quadratic& y);

}  // namespace idealis
