#include <doctest.h>

#include <random>

#include "idealis/algebra/field.hpp"
#include "idealis/algebra/text_format.hpp"
#include "test_support.hpp"

using namespace idealis;

TEST_CASE("rational canonical form") {
  Rational h(mpz_class(2), mpz_class(4));
  CHECK(h == Rational(mpz_class(1), mpz_class(2)));
  CHECK(h.denominator() == 2);
  CHECK(Rational(mpz_class(3), mpz_class(-6)).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("quadratic conjugate product") {
  QuadraticField k(3);
  Quadratic a(Rational(mpz_class(1), mpz_class(2)), Rational(1), 3);
  Quadratic b = a.conjugate();
  Quadratic p = a * b;
  CHECK(p.is_rational());
  CHECK(p.rational_part() == Rational(mpz_class(-11), mpz_class(4)));
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(a / k.zero(), DivisionByZero);
}

TEST_CASE("quadratic elements with zero radical part act as rationals") {
  QuadraticField k(3);
  Quadratic q = k.from_rational(Rational(mpz_class(3), mpz_class(7)));
  Quadratic r = k.from_rational(Rational(mpz_class(-2), mpz_class(5)));
  CHECK((q * r).rational_part() == Rational(mpz_class(3), mpz_class(7)) * Rational(mpz_class(-2), mpz_class(5)));
  CHECK((q / r).rational_part() == Rational(mpz_class(3), mpz_class(7)) / Rational(mpz_class(-2), mpz_class(5)));
  CHECK((q - r).is_rational());
}

TEST_CASE("quadratic exact sign") {
  // 7 - 4 sqrt(3) > 0 since 49 > 48; 7 - 5 sqrt(3) < 0.
  CHECK(Quadratic(Rational(7), Rational(-4), 3).sign() == 1);
  CHECK(Quadratic(Rational(7), Rational(-5), 3).sign() == -1);
  CHECK(Quadratic(Rational(-7), Rational(5), 3).sign() == 1);
  CHECK(Quadratic(Rational(0), Rational(0), 3).sign() == 0);
}

TEST_CASE("mismatched fields are rejected") {
  CHECK_THROWS_AS(Quadratic(Rational(1), Rational(1), 3) + Quadratic(Rational(1), Rational(1), 5), FieldMismatch);
  CHECK_THROWS_AS(Residue(1, 7) * Residue(1, 11), FieldMismatch);
  CHECK_THROWS_AS(field_arith(FieldElement(Rational(1)), FieldElement(Residue(1, 7)), FieldOp::Add), FieldMismatch);
  CHECK_THROWS_AS(field_arith(FieldElement(Rational(1)), FieldElement(Rational(0)), FieldOp::Div), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f11(11);
  CHECK((f11.from_int(5) * f11.from_int(9)).is_one());
  CHECK(f11.from_int(9) == f11.from_int(5).inverse());
  CHECK(f11.from_int(-1).value() == 10);
  CHECK(to_string(field_arith(Residue(5, 11), Residue(9, 11), FieldOp::Mul)) == "1 mod 11");
  CHECK_THROWS_AS(PrimeField(9), BadPrime);
  CHECK_THROWS_AS(PrimeField(2), BadPrime);
  // Large modulus path (128-bit products).
  PrimeField big((1ULL << 61) - 1);
  Residue a = big.from_int(123456789012345LL);
  CHECK((a * a.inverse()).is_one());
}

TEST_CASE("primality") {
  CHECK(is_prime(65521));
  CHECK(is_prime(2305843009213693951ULL));
  CHECK_FALSE(is_prime(65523));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("square roots modulo p") {
  CHECK(sqrt_in_prime_field(11, 3) == std::optional<std::uint64_t>(5));
  CHECK_FALSE(sqrt_in_prime_field(5, 3).has_value());
  CHECK(sqrt_in_prime_field(7, 4) == std::optional<std::uint64_t>(2));
  CHECK_THROWS_AS(sqrt_in_prime_field(3, 3), BadPrime);

  // Exhaustive oracle: every returned root squares back and is the smaller one;
  // non-residues are exactly the values missing from the list of squares.
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL, 17ULL, 97ULL, 65521ULL}) {
    std::vector<bool> square(p, false);
    if (p < 1000) {
      for (std::uint64_t s = 0; s < p; ++s) square[s * s % p] = true;
    }
    for (std::int64_t d = 1; d < static_cast<std::int64_t>(std::min<std::uint64_t>(p, 200)); ++d) {
      auto r = sqrt_in_prime_field(p, d);
      if (r) {
        CHECK(Residue::mul_mod(*r, *r, p) == static_cast<std::uint64_t>(d));
        CHECK(*r <= p - *r);
      }
      if (p < 1000) CHECK(r.has_value() == square[static_cast<std::size_t>(d)]);
    }
  }
}

TEST_CASE("field selectors") {
  CHECK(field_tag(parse_field("q")) == "q");
  CHECK(field_tag(parse_field("fp:65521")) == "fp:65521");
  CHECK(field_tag(parse_field("qsqrt:3")) == "qsqrt:3");
  CHECK_THROWS_AS(parse_field("fp:10"), ParseError);
  CHECK_THROWS_AS(parse_field("qsqrt:4"), ParseError);
  CHECK_THROWS_AS(parse_field("r"), ParseError);
}

TEST_CASE("element text round trip") {
  QuadraticField k(3);
  Quadratic e(Rational(mpz_class(1), mpz_class(2)), Rational(mpz_class(-3), mpz_class(4)), 3);
  CHECK(e.to_string() == "1/2-3/4*sqrt(3)");
  CHECK(parse_element(e.to_string(), k) == e);
  CHECK(parse_element("7 mod 11", PrimeField(11)) == Residue(7, 11));
  CHECK(parse_element("-22/7", RationalField{}) == Rational(mpz_class(-22), mpz_class(7)));
}

namespace {

template <class F>
void check_field_axioms(const F& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    auto a = testing::random_element(rng, field);
    auto b = testing::random_element(rng, field);
    auto c = testing::random_element(rng, field);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

}  // namespace

TEST_CASE("field axioms on random inputs") {
  check_field_axioms(RationalField{}, 1);
  check_field_axioms(QuadraticField(3), 2);
  check_field_axioms(PrimeField(31), 3);
  check_field_axioms(PrimeField(65521), 4);
  check_field_axioms(PrimeField((1ULL << 61) - 1), 5);
}
