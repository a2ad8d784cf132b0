#include "idealis/algebra/field.hpp"

#include <cstdlib>

namespace idealis {

namespace {

std::optional<mpz_class> exact_sqrt(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

std::uint64_t parse_unsigned(std::string_view s, std::string_view what) {
  if (s.empty()) throw ParseError("missing " + std::string(what));
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

std::optional<Rational> RationalField::sqrt_of(std::int64_t d) const {
  auto r = exact_sqrt(mpz_class(static_cast<long>(d)));
  if (!r) return std::nullopt;
  return Rational(*r);
}

bool is_squarefree(std::int64_t d) {
  if (d <= 1) return false;
  for (std::int64_t q = 2; q * q <= d; ++q) {
    if (d % (q * q) == 0) return false;
  }
  return true;
}

QuadraticField::QuadraticField(std::int64_t radicand) : d(radicand) {
  if (!is_squarefree(d)) throw ParseError("radicand must be a squarefree integer > 1, got " + std::to_string(d));
}

std::optional<Quadratic> QuadraticField::sqrt_of(std::int64_t n) const {
  if (auto r = exact_sqrt(mpz_class(static_cast<long>(n)))) return from_integer(*r);
  if (n > 0 && n % d == 0) {
    if (auto r = exact_sqrt(mpz_class(static_cast<long>(n / d)))) return Quadratic(Rational(), Rational(*r), d);
  }
  return std::nullopt;
}

PrimeField::PrimeField(std::uint64_t modulus) : p(modulus) { require_odd_prime(p); }

Residue PrimeField::from_integer(const mpz_class& n) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return {r.get_ui(), p};
}

Residue PrimeField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return {static_cast<std::uint64_t>(r), p};
}

Residue PrimeField::from_rational(const Rational& q) const {
  Residue den = from_integer(q.denominator());
  if (den.is_zero()) throw BadPrime("prime " + std::to_string(p) + " divides denominator " + q.denominator().get_str());
  return from_integer(q.numerator()) / den;
}

std::optional<Residue> PrimeField::sqrt_of(std::int64_t n) const {
  Residue r = from_int(n);
  if (r.is_zero()) return r;
  auto s = sqrt_in_prime_field(p, static_cast<std::int64_t>(r.value()));
  if (!s) return std::nullopt;
  return Residue(*s, p);
}

AnyField parse_field(std::string_view text) {
  if (text == "q") return RationalField{};
  if (text.starts_with("fp:")) {
    std::uint64_t p = parse_unsigned(text.substr(3), "prime");
    try {
      return PrimeField(p);
    } catch (const BadPrime& e) {
      throw ParseError(e.what());
    }
  }
  if (text.starts_with("qsqrt:")) {
    return QuadraticField(static_cast<std::int64_t>(parse_unsigned(text.substr(6), "radicand")));
  }
  throw ParseError("unknown field selector '" + std::string(text) + "' (expected q, fp:<p> or qsqrt:<d>)");
}

std::string field_tag(const AnyField& field) {
  return std::visit([](const auto& f) { return f.tag(); }, field);
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  if (a.index() != b.index()) throw FieldMismatch();
  return std::visit(
      [&](const auto& x) -> FieldElement {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        switch (op) {
          case FieldOp::Add: return x + y;
          case FieldOp::Sub: return x - y;
          case FieldOp::Mul: return x * y;
          case FieldOp::Div: return x / y;
        }
        throw Error("unknown field operation");
      },
      a);
}

std::string to_string(const FieldElement& e) {
  return std::visit([](const auto& x) { return x.to_string(); }, e);
}

}  // namespace idealis
