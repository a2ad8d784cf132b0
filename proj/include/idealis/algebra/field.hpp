#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "idealis/algebra/prime_field.hpp"
#include "idealis/algebra/quadratic.hpp"
#include "idealis/algebra/rational.hpp"

namespace idealis {

inline bool structural_less(const Rational& a, const Rational& b) { return a < b; }

/// Field context for Q.
struct RationalField {
  using Element = Rational;

  Element zero() const { return {}; }
  Element one() const { return 1; }
  Element from_integer(const mpz_class& n) const { return Rational(n); }
  Element from_rational(const Rational& q) const { return q; }
  /// Square roots exist only for perfect squares.
  std::optional<Element> sqrt_of(std::int64_t d) const;
  std::string tag() const { return "q"; }
  std::uint64_t characteristic() const { return 0; }
  bool is_real() const { return true; }
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Field context for Q(sqrt d), d squarefree and > 1.
struct QuadraticField {
  using Element = Quadratic;

  explicit QuadraticField(std::int64_t radicand);

  Element zero() const { return {Rational(), Rational(), d}; }
  Element one() const { return {Rational(1), Rational(), d}; }
  Element from_integer(const mpz_class& n) const { return {Rational(n), Rational(), d}; }
  Element from_rational(const Rational& q) const { return {q, Rational(), d}; }
  Element sqrt_d() const { return {Rational(), Rational(1), d}; }
  std::optional<Element> sqrt_of(std::int64_t n) const;
  std::string tag() const { return "qsqrt:" + std::to_string(d); }
  std::uint64_t characteristic() const { return 0; }
  bool is_real() const { return true; }
  friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

  std::int64_t d;
};

/// Field context for F_p, p an odd prime below 2^62.
struct PrimeField {
  using Element = Residue;

  explicit PrimeField(std::uint64_t modulus);

  Element zero() const { return {0, p}; }
  Element one() const { return {1, p}; }
  Element from_integer(const mpz_class& n) const;
  Element from_int(std::int64_t n) const;
  /// Throws BadPrime when p divides the denominator.
  Element from_rational(const Rational& q) const;
  std::optional<Element> sqrt_of(std::int64_t n) const;
  std::string tag() const { return "fp:" + std::to_string(p); }
  std::uint64_t characteristic() const { return p; }
  bool is_real() const { return false; }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  std::uint64_t p;
};

template <class F>
concept CoefficientField = requires(const F& f, const typename F::Element& a, const Rational& q) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_rational(q) } -> std::same_as<typename F::Element>;
  { f.tag() } -> std::convertible_to<std::string>;
  { a.is_zero() } -> std::same_as<bool>;
  { a + a } -> std::same_as<typename F::Element>;
  { a * a } -> std::same_as<typename F::Element>;
  { a.inverse() } -> std::same_as<typename F::Element>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <CoefficientField F>
typename F::Element from_int(const F& field, long n) {
  return field.from_integer(mpz_class(n));
}

/// Any of the three supported fields, selected at run time.
using AnyField = std::variant<RationalField, QuadraticField, PrimeField>;

/// Parses "q", "fp:<p>" or "qsqrt:<d>".
AnyField parse_field(std::string_view text);
std::string field_tag(const AnyField& field);

/// Exact scalar of any supported field.
using FieldElement = std::variant<Rational, Quadratic, Residue>;

enum class FieldOp { Add, Sub, Mul, Div };

/// Exact arithmetic on run-time tagged scalars; throws FieldMismatch when
/// the operands live in different fields.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);
std::string to_string(const FieldElement& e);

bool is_squarefree(std::int64_t d);

}  // namespace idealis
