#include <doctest.h>

#include <random>

#include "idealis/algebra/operations.hpp"
#include "idealis/algebra/text_format.hpp"
#include "test_support.hpp"

using namespace idealis;

namespace {

template <class F>
Polynomial<F> P(const char* text, const RingPtr<F>& ring) {
  return parse_polynomial(text, ring);
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
  auto R = plane_ring(RationalField{});
  auto x = Polynomial<RationalField>::variable(R, 0);
  auto y = Polynomial<RationalField>::variable(R, 1);
  CHECK((x + y) * (x - y) == P("x^2-y^2", R));
  CHECK((x + y).pow(2) == P("x^2+2*x*y+y^2", R));
  CHECK(to_string((x + y).pow(2)) == "x^2+2*x*y+y^2");
  CHECK((x - x).is_zero());
  CHECK(to_string(Polynomial<RationalField>(R)) == "0");
  CHECK(((x + y) * (x - y)).is_homogeneous());
  CHECK(((x + y) * (x - y)).degree() == 2);
}

TEST_CASE("ring mismatch is reported") {
  auto R = plane_ring(RationalField{});
  auto S = make_ring(RationalField{}, {"x", "y"});
  CHECK_THROWS_AS(P("x", R) + P("x", S), RingMismatch);
  CHECK_THROWS_AS(P("x", R) * P("y", S), RingMismatch);
}

TEST_CASE("product of the ten initial lines") {
  // x * (x^2 - 3/4 z^2) * (x^2 - 3 z^2) * (x^2 - 12 z^2) * y * (y^2 - z^2)
  auto R = plane_ring(RationalField{});
  Polynomial<RationalField> f = P("x", R) * P("x^2-3/4*z^2", R) * P("x^2-3*z^2", R) * P("x^2-12*z^2", R) * P("y", R) *
                                P("y^2-z^2", R);
  auto expected = P(
      "x^7*y^3 - x^7*y*z^2 - 63/4*x^5*y^3*z^2 + 63/4*x^5*y*z^4 + 189/4*x^3*y^3*z^4"
      " - 189/4*x^3*y*z^6 - 27*x*y^3*z^6 + 27*x*y*z^8",
      R);
  CHECK(f == expected);
  CHECK(f.size() == 8);
}

TEST_CASE("partial derivatives") {
  auto R = plane_ring(RationalField{});
  CHECK(P("x^2*y", R).derivative(0) == P("2*x*y", R));
  CHECK(P("x+y", R).derivative(2).is_zero());
  PrimeField f7(7);
  auto R7 = plane_ring(f7);
  CHECK(P("x^7+y", R7).derivative(0).is_zero());
}

namespace {

template <class F>
void check_euler(const Polynomial<F>& f) {
  auto R = f.ring();
  Polynomial<F> lhs(R);
  for (std::size_t i = 0; i < 3; ++i) lhs += Polynomial<F>::variable(R, i) * f.derivative(i);
  CHECK(lhs == f.scaled(from_int(R->field(), f.degree())));
}

}  // namespace

TEST_CASE("Euler relation for homogeneous polynomials") {
  auto R = plane_ring(RationalField{});
  check_euler(P("x^7*y^3 - x^7*y*z^2 - 63/4*x^5*y^3*z^2 + 27*x*y*z^8", R));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    check_euler(testing::random_polynomial(rng, R, 8, 1 + i % 7, true));
    check_euler(testing::random_polynomial(rng, plane_ring(QuadraticField(3)), 6, 1 + i % 5, true));
    check_euler(testing::random_polynomial(rng, plane_ring(PrimeField(65521)), 6, 1 + i % 9, true));
  }
}

TEST_CASE("evaluation") {
  auto R = plane_ring(RationalField{});
  std::vector<Rational> pt = {1, 1, -1};
  CHECK(P("x+y+2*z", R).evaluate(pt).is_zero());
  std::vector<Rational> origin = {0, 0, 1};
  CHECK(P("x^7*y^3 - x^7*y*z^2 + 27*x*y*z^8", R).evaluate(origin).is_zero());
  std::vector<Rational> q = {0, 1, 1};
  CHECK(P("y-z", R).evaluate(q).is_zero());
  CHECK(P("x^2+3", R).evaluate(std::vector<Rational>{2, 0, 0}) == Rational(7));
  CHECK_THROWS(P("x", R).evaluate(std::vector<Rational>{1, 2}));
}

TEST_CASE("vanishing order") {
  auto R = plane_ring(RationalField{});
  std::vector<Rational> p = {1, 0, 1};
  CHECK(vanishing_order_at_least(P("(x-z)^2", R), std::span<const Rational>(p), 2));
  CHECK_FALSE(vanishing_order_at_least(P("(x-z)^2", R), std::span<const Rational>(p), 3));
  CHECK(vanishing_order(P("x*y*z*(x-y)", R), std::span<const Rational>(std::vector<Rational>{0, 0, 1}), 10) == 3);

  // Order 1 is exactly vanishing of the value.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto f = testing::random_polynomial(rng, R, 3, 2, true);
    std::vector<Rational> pt = {Rational(i % 3), Rational(1), Rational(i % 2)};
    CHECK(vanishing_order_at_least(f, std::span<const Rational>(pt), 1) == f.evaluate(pt).is_zero());
  }
}

TEST_CASE("specialization modulo p") {
  auto R = plane_ring(RationalField{});
  PrimeField f7(7);
  CHECK(to_string(specialize(P("x/2+y", R), f7)) == "4*x+y");
  CHECK_THROWS_AS(specialize(P("x/17+y", R), PrimeField(17)), BadPrime);

  auto K = plane_ring(QuadraticField(3));
  // u = sqrt(3)/2; sqrt(3) = 5 and 1/2 = 6 mod 11.
  CHECK(to_string(specialize(P("x + sqrt(3)/2*z", K), PrimeField(11))) == "x+8*z");
  CHECK_THROWS_AS(specialize(P("x + sqrt(3)*z", K), PrimeField(5)), BadPrime);
}

TEST_CASE("specialization is a ring morphism") {
  std::mt19937_64 rng(17);
  auto K = plane_ring(QuadraticField(3));
  PrimeField fp(65521);
  auto Rp = plane_ring(fp);
  for (int i = 0; i < 30; ++i) {
    auto f = testing::random_polynomial(rng, K, 5, 4);
    auto g = testing::random_polynomial(rng, K, 5, 4);
    CHECK(specialize(f * g, Rp) == specialize(f, Rp) * specialize(g, Rp));
    CHECK(specialize(f + g, Rp) == specialize(f, Rp) + specialize(g, Rp));
  }
}

TEST_CASE("text format round trip") {
  std::mt19937_64 rng(23);
  auto R = plane_ring(RationalField{});
  auto K = plane_ring(QuadraticField(3));
  auto Fp = plane_ring(PrimeField(31));
  for (int i = 0; i < 40; ++i) {
    auto f = testing::random_polynomial(rng, R, 6, 5);
    CHECK(parse_polynomial(to_string(f), R) == f);
    auto g = testing::random_polynomial(rng, K, 6, 5);
    CHECK(parse_polynomial(to_string(g), K) == g);
    auto h = testing::random_polynomial(rng, Fp, 6, 5);
    CHECK(parse_polynomial(to_string(h), Fp) == h);
  }
  CHECK(parse_polynomial(" 3 * x ^ 2 - ( 1/2 + sqrt(3) ) * y ", K) == parse_polynomial("3*x^2-(1/2+sqrt(3))*y", K));
  CHECK(parse_polynomial("(5 mod 31)*x", Fp) == parse_polynomial("5*x", Fp));
  CHECK_THROWS_AS(parse_polynomial("x+w", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x+", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("sqrt(3)*x", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(5 mod 7)*x", Fp), ParseError);
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937_64 rng(29);
  auto R = plane_ring(RationalField{});
  for (int i = 0; i < 20; ++i) {
    auto f = testing::random_polynomial(rng, R, 10, 4);
    auto g = f;
    g.canonicalize();
    CHECK(g == f);
    for (std::size_t k = 1; k < f.size(); ++k) CHECK(R->compare(f.terms()[k - 1].mono, f.terms()[k].mono) > 0);
  }
}
