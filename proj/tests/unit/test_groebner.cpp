#include <doctest.h>

#include <random>

#include "idealis/algebra/operations.hpp"
#include "idealis/algebra/text_format.hpp"
#include "idealis/groebner/ideal_ops.hpp"
#include "test_support.hpp"

using namespace idealis;

namespace {

using QPoly = Polynomial<RationalField>;
using QIdeal = Ideal<RationalField>;

template <class F>
Ideal<F> ideal_of(const RingPtr<F>& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<F>> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, ring));
  return Ideal<F>(ring, std::move(g));
}

template <class F>
std::vector<std::string> basis_text(const Ideal<F>& i) {
  std::vector<std::string> out;
  for (const auto& g : i.basis().elements) out.push_back(to_string(g));
  return out;
}

template <class F>
std::vector<std::string> generator_text(const Ideal<F>& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(to_string(g));
  return out;
}

/// Every S-polynomial of the basis reduces to zero, the basis is reduced
/// and monic.
template <class F>
void check_reduced_groebner(const Ideal<F>& gb) {
  const auto& b = gb.basis().elements;
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(b[i].leading_coefficient().is_one());
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : b[j].terms()) CHECK_FALSE(b[i].leading_monomial().divides(t.mono));
    }
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      Monomial l = lcm(b[i].leading_monomial(), b[j].leading_monomial());
      auto one = gb.basis().ring->field().one();
      auto s = b[i].mul_term(l / b[i].leading_monomial(), one) - b[j].mul_term(l / b[j].leading_monomial(), one);
      CHECK(normal_form(s, gb).is_zero());
    }
  }
}

/// Membership of homogeneous f by linear algebra on the graded piece.
template <class F>
bool graded_member(const Polynomial<F>& f, const Ideal<F>& ideal) {
  auto piece = graded_piece(ideal, static_cast<unsigned>(f.degree()), Execution::Serial);
  std::vector<Polynomial<F>> gens = piece.basis;
  gens.push_back(f);
  return graded_piece(Ideal<F>(ideal.ring(), gens), static_cast<unsigned>(f.degree()), Execution::Serial).dimension ==
         piece.dimension;
}

template <class F>
Ideal<F> random_ideal(std::mt19937_64& rng, const RingPtr<F>& ring, bool homogeneous) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<unsigned> deg(1, 3);
  std::vector<Polynomial<F>> gens;
  int n = count(rng);
  for (int k = 0; k < n; ++k) {
    auto g = testing::random_polynomial(rng, ring, 3, deg(rng), homogeneous);
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) gens.push_back(Polynomial<F>::variable(ring, 0));
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace

TEST_CASE("reduced bases of small ideals") {
  auto R = plane_ring(RationalField{});
  CHECK(basis_text(groebner_basis(ideal_of(R, {"x+y", "x-y"}))) == std::vector<std::string>{"y", "x"});
  CHECK(basis_text(groebner_basis(ideal_of(R, {"x^2-y^2", "x^2+y^2"}))) == std::vector<std::string>{"y^2", "x^2"});
  CHECK(basis_text(groebner_basis(ideal_of(R, {"x*z-y^2"}))) == std::vector<std::string>{"y^2-x*z"});
  CHECK(basis_text(groebner_basis(ideal_of(R, {"x+1", "x"}))) == std::vector<std::string>{"1"});
  CHECK(groebner_basis(ideal_of(R, {"3*x-2"})).basis().elements[0] == parse_polynomial("x-2/3", R));
}

TEST_CASE("twisted cubic in lex and degrevlex") {
  auto R = plane_ring(RationalField{});
  auto I = make_ring(RationalField{}, {"t", "x", "y", "z"});
  auto tc = ideal_of(I, {"x-t", "y-t^2", "z-t^3"});
  auto elim = eliminate(tc, {"t"});
  auto gb = groebner_basis(elim);
  CHECK(basis_text(gb) == std::vector<std::string>{"y^2-x*z", "x*y-z", "x^2-y"});
  auto lex = groebner_basis(tc, MonomialOrder::lex());
  check_reduced_groebner(lex);
  CHECK(basis_text(lex) == std::vector<std::string>{"y^3-z^2", "x*z-y^2", "x*y-z", "x^2-y", "t-x"});
}

TEST_CASE("normal forms") {
  auto R = plane_ring(RationalField{});
  auto nf = [&](const char* f, std::initializer_list<const char*> gens) {
    return to_string(normal_form(parse_polynomial(f, R), groebner_basis(ideal_of(R, gens))));
  };
  CHECK(nf("x", {"x"}) == "0");
  CHECK(nf("x^2", {"x-y"}) == "y^2");
  CHECK(nf("y^2+x", {"x^2-y"}) == "y^2+x");
  CHECK_THROWS_AS(normal_form(parse_polynomial("x", R), ideal_of(R, {"x"})), MissingBasis);
}

TEST_CASE("membership and containment") {
  auto R = plane_ring(RationalField{});
  CHECK(ideal_membership(parse_polynomial("x^2", R), ideal_of(R, {"x"})));
  CHECK_FALSE(ideal_membership(parse_polynomial("x", R), ideal_of(R, {"x^2"})));
  CHECK(ideal_membership(parse_polynomial("0", R), ideal_of(R, {"x^2"})));
  auto a = ideal_of(R, {"x^2", "x*y", "y^2"});
  auto b = ideal_of(R, {"x", "y"});
  CHECK(ideal_containment(a, b));
  CHECK_FALSE(ideal_containment(b, a));
  CHECK(ideal_membership(parse_polynomial("x*y-1", R), ideal_of(R, {"x-1", "y-1"})));
  auto S = make_ring(RationalField{}, {"x", "y"});
  CHECK_THROWS_AS(ideal_containment(a, ideal_of(S, {"x"})), RingMismatch);
}

TEST_CASE("intersections") {
  auto R = plane_ring(RationalField{});
  CHECK(basis_text(groebner_basis(ideal_intersection(ideal_of(R, {"x"}), ideal_of(R, {"y"})))) ==
        std::vector<std::string>{"x*y"});
  CHECK(basis_text(groebner_basis(ideal_intersection(ideal_of(R, {"y", "z"}), ideal_of(R, {"x", "z"})))) ==
        std::vector<std::string>{"z", "x*y"});
  auto m = ideal_of(R, {"x", "y"});
  auto m2 = ideal_power(m, 2);
  CHECK(basis_text(groebner_basis(ideal_intersection(m2, m))) == basis_text(groebner_basis(m2)));
}

TEST_CASE("intersection of monomial ideals matches pairwise lcms") {
  std::mt19937_64 rng(7);
  auto R = plane_ring(RationalField{});
  for (int round = 0; round < 30; ++round) {
    auto random_monomial_ideal = [&] {
      std::vector<QPoly> g;
      int n = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < n; ++k) {
        std::vector<unsigned> e(3);
        for (auto& v : e) v = std::uniform_int_distribution<unsigned>(0, 3)(rng);
        if (e == std::vector<unsigned>{0, 0, 0}) e[0] = 1;
        g.push_back(QPoly::term(R, Monomial(std::span<const unsigned>(e)), Rational(1)));
      }
      return QIdeal(R, g);
    };
    auto a = random_monomial_ideal();
    auto b = random_monomial_ideal();
    std::vector<QPoly> lcms;
    for (const auto& f : a.generators()) {
      for (const auto& g : b.generators())
        lcms.push_back(QPoly::term(R, lcm(f.leading_monomial(), g.leading_monomial()), Rational(1)));
    }
    CHECK(basis_text(groebner_basis(ideal_intersection(a, b))) == basis_text(groebner_basis(QIdeal(R, lcms))));
  }
}

TEST_CASE("ideal powers") {
  auto R = plane_ring(RationalField{});
  CHECK(generator_text(ideal_power(ideal_of(R, {"x", "y"}), 2)) == std::vector<std::string>{"x^2", "x*y", "y^2"});
  CHECK(generator_text(ideal_power(ideal_of(R, {"x+z"}), 3)) ==
        std::vector<std::string>{to_string(parse_polynomial("(x+z)^3", R))});
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    auto I = random_ideal(rng, R, true);
    std::size_t g = I.generators().size();
    auto I2 = ideal_power(I, 2);
    CHECK(I2.generators().size() <= g * (g + 1) / 2);
    CHECK(ideal_containment(ideal_power(I, 3), I2));
    CHECK(ideal_containment(I2, I));
  }
  CHECK_THROWS(ideal_power(ideal_of(R, {"x"}), 0));
}

TEST_CASE("elimination") {
  auto R = make_ring(RationalField{}, {"t", "x", "y"});
  auto e = eliminate(ideal_of(R, {"t*x-1", "y-t"}), {"t"});
  CHECK(generator_text(e) == std::vector<std::string>{"x*y-1"});
  CHECK(e.ring()->variables() == std::vector<std::string>{"x", "y"});
  CHECK(eliminate(ideal_of(R, {"t"}), {"t"}).generators().empty());
  auto same = eliminate(ideal_of(R, {"x+y", "x-y"}), {});
  CHECK(basis_text(same) == std::vector<std::string>{"y", "x"});
}

TEST_CASE("radical membership") {
  auto R = plane_ring(RationalField{});
  CHECK(radical_membership(parse_polynomial("x", R), ideal_of(R, {"x^2"})));
  CHECK_FALSE(radical_membership(parse_polynomial("y", R), ideal_of(R, {"x^2"})));
  auto fermat = parse_polynomial("x^3+y^3+z^3", R);
  auto jac = jacobian_ideal(fermat);
  for (const char* v : {"x", "y", "z"}) CHECK(radical_membership(parse_polynomial(v, R), jac));
  auto R7 = plane_ring(PrimeField(7));
  auto jac7 = jacobian_ideal(parse_polynomial("x^3+y^3+z^3", R7));
  for (const char* v : {"x", "y", "z"}) CHECK(radical_membership(parse_polynomial(v, R7), jac7));
  // In characteristic 3 every partial derivative vanishes.
  auto R3 = plane_ring(PrimeField(3));
  CHECK(jacobian_ideal(parse_polynomial("x^3+y^3+z^3", R3)).generators().empty());
}

TEST_CASE("jacobian ideals") {
  auto R = plane_ring(RationalField{});
  CHECK(generator_text(jacobian_ideal(parse_polynomial("x^2+y^2+z^2", R))) ==
        std::vector<std::string>{"2*x", "2*y", "2*z"});
  CHECK(basis_text(groebner_basis(jacobian_ideal(parse_polynomial("x^2+y^2+z^2", R)))) ==
        std::vector<std::string>{"z", "y", "x"});
  CHECK(generator_text(jacobian_ideal(parse_polynomial("x*y*z", R))) ==
        std::vector<std::string>{"y*z", "x*z", "x*y"});
}

TEST_CASE("graded pieces") {
  auto R = plane_ring(RationalField{});
  auto m2 = ideal_power(ideal_of(R, {"x", "y"}), 2);
  auto p2 = graded_piece(m2, 2);
  CHECK(p2.dimension == 3);
  std::vector<std::string> b;
  for (const auto& g : p2.basis) b.push_back(to_string(g));
  CHECK(b == std::vector<std::string>{"x^2", "x*y", "y^2"});
  CHECK(graded_piece(m2, 1).dimension == 0);
  // Degree-3 monomials outside (x,y)^2: z^3, x*z^2, y*z^2.
  CHECK(graded_piece(m2, 3).dimension == 10 - 3);
  CHECK_THROWS(graded_piece(ideal_of(R, {"x+1"}), 2));
}

TEST_CASE("generated bases satisfy the Buchberger criterion") {
  std::mt19937_64 rng(2024);
  auto Q = plane_ring(RationalField{});
  auto F = plane_ring(PrimeField(32003));
  auto S = plane_ring(QuadraticField(3));
  for (int round = 0; round < 25; ++round) {
    check_reduced_groebner(groebner_basis(random_ideal(rng, Q, round % 2 == 0)));
    check_reduced_groebner(groebner_basis(random_ideal(rng, F, round % 2 == 0), MonomialOrder::lex()));
    check_reduced_groebner(groebner_basis(random_ideal(rng, S, true)));
  }
}

TEST_CASE("bases generate the input ideal") {
  std::mt19937_64 rng(99);
  auto Q = plane_ring(RationalField{});
  for (int round = 0; round < 25; ++round) {
    auto I = random_ideal(rng, Q, round % 3 != 0);
    auto gb = groebner_basis(I);
    for (const auto& g : I.generators()) CHECK(normal_form(g, gb).is_zero());
    // Each basis element lies in the ideal of the generators, witnessed by a
    // second computation from generators plus basis.
    std::vector<QPoly> both = I.generators();
    for (const auto& b : gb.basis().elements) both.push_back(b);
    CHECK(basis_text(groebner_basis(QIdeal(Q, both))) == basis_text(gb));
  }
}

TEST_CASE("normal form is idempotent and linear") {
  std::mt19937_64 rng(5);
  auto Q = plane_ring(RationalField{});
  for (int round = 0; round < 25; ++round) {
    auto gb = groebner_basis(random_ideal(rng, Q, false));
    auto f = testing::random_polynomial(rng, Q, 5, 4);
    auto g = testing::random_polynomial(rng, Q, 5, 4);
    auto nf = normal_form(f, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(normal_form(f + g, gb) == normal_form(nf + normal_form(g, gb), gb));
    for (const auto& b : gb.basis().elements) {
      for (const auto& t : nf.terms()) CHECK_FALSE(b.leading_monomial().divides(t.mono));
    }
  }
}

TEST_CASE("membership agrees with graded linear algebra") {
  std::mt19937_64 rng(31);
  auto Q = plane_ring(RationalField{});
  int members = 0;
  for (int round = 0; round < 40; ++round) {
    auto I = random_ideal(rng, Q, true);
    unsigned d = 4;
    QPoly f(Q);
    if (round % 2 == 0) {
      for (const auto& g : I.generators()) {
        if (g.degree() <= static_cast<int>(d))
          f += g * testing::random_polynomial(rng, Q, 3, d - static_cast<unsigned>(g.degree()), true);
      }
    } else {
      f = testing::random_polynomial(rng, Q, 4, d, true);
    }
    if (f.is_zero()) continue;
    bool gb = ideal_membership(f, I);
    bool la = graded_member(f, I);
    CHECK(gb == la);
    CHECK(normal_form(f, groebner_basis(I)).is_zero() == la);
    members += gb;
  }
  CHECK(members > 5);
}

TEST_CASE("membership in an intersection") {
  std::mt19937_64 rng(77);
  auto Q = plane_ring(RationalField{});
  for (int round = 0; round < 20; ++round) {
    auto a = random_ideal(rng, Q, true);
    auto b = random_ideal(rng, Q, true);
    auto ab = groebner_basis(ideal_intersection(a, b));
    std::vector<QPoly> candidates;
    for (const auto& f : a.generators()) {
      for (const auto& g : b.generators()) candidates.push_back(f * g);
    }
    candidates.push_back(testing::random_polynomial(rng, Q, 3, 3, true));
    candidates.push_back(a.generators()[0]);
    for (const auto& f : candidates) {
      if (f.is_zero()) continue;
      CHECK(ideal_membership(f, ab) == (ideal_membership(f, a) && ideal_membership(f, b)));
    }
  }
}

TEST_CASE("membership verdicts do not depend on the order") {
  std::mt19937_64 rng(13);
  auto Q = plane_ring(RationalField{});
  for (int round = 0; round < 25; ++round) {
    auto I = random_ideal(rng, Q, round % 2 == 0);
    auto dp = groebner_basis(I, MonomialOrder::degrevlex());
    auto lp = groebner_basis(I, MonomialOrder::lex());
    auto bl = groebner_basis(I, MonomialOrder::block(1));
    std::vector<QPoly> fs{testing::random_polynomial(rng, Q, 3, 3)};
    QPoly comb(Q);
    for (const auto& g : I.generators()) comb += g * testing::random_polynomial(rng, Q, 2, 2);
    fs.push_back(comb);
    for (const auto& f : fs) {
      bool v = normal_form(f, dp).is_zero();
      CHECK(normal_form(f, lp).is_zero() == v);
      CHECK(normal_form(f, bl).is_zero() == v);
    }
  }
}

TEST_CASE("modular verdicts agree away from detected bad primes") {
  std::mt19937_64 rng(17);
  auto Q = plane_ring(RationalField{});
  const std::uint64_t primes[] = {3, 5, 7, 11, 13, 101, 32003};
  int compared = 0;
  for (int round = 0; round < 20; ++round) {
    auto I = random_ideal(rng, Q, false);
    auto gb = groebner_basis(I);
    QPoly member(Q);
    for (const auto& g : I.generators()) member += g * testing::random_polynomial(rng, Q, 2, 2);
    QPoly other = testing::random_polynomial(rng, Q, 3, 3);
    for (std::uint64_t p : primes) {
      PrimeField fp(p);
      auto Rp = plane_ring(fp);
      std::vector<Polynomial<PrimeField>> gens;
      std::vector<std::string> expected;
      try {
        for (const auto& g : I.generators()) gens.push_back(specialize(g, Rp));
        for (const auto& g : gb.basis().elements) expected.push_back(to_string(specialize(g, Rp)));
      } catch (const BadPrime&) {
        continue;
      }
      auto gbp = groebner_basis(Ideal<PrimeField>(Rp, gens));
      // A prime is lucky when the specialized rational basis is the basis mod p.
      if (basis_text(gbp) != expected) continue;
      for (const auto* f : {&member, &other}) {
        Polynomial<PrimeField> fp_poly(Rp);
        try {
          fp_poly = specialize(*f, Rp);
        } catch (const BadPrime&) {
          continue;
        }
        // For a lucky prime the normal form specializes; f is bad for p exactly
        // when its nonzero rational normal form vanishes mod p.
        auto nf = normal_form(*f, gb);
        auto nfp = normal_form(fp_poly, gbp);
        CHECK(to_string(nfp) == to_string(specialize(nf, Rp)));
        if (!nf.is_zero() && nfp.is_zero()) continue;
        CHECK(nf.is_zero() == nfp.is_zero());
        ++compared;
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("resource caps and cancellation") {
  auto R = plane_ring(RationalField{});
  auto I = ideal_of(R, {"x^3-y*z^2+1", "y^3-x*z+2", "z^3-x*y^2+3"});
  GroebnerOptions tight;
  tight.max_terms = 5;
  CHECK_THROWS_AS(groebner_basis(I, tight), ResourceLimit);
  std::atomic<bool> stop{true};
  GroebnerOptions cancel;
  cancel.cancel = &stop;
  CHECK_THROWS_AS(groebner_basis(I, cancel), Cancelled);
  try {
    groebner_basis(I, tight);
  } catch (const ResourceLimit& e) {
    CHECK(e.stats().basis_size == 0);
    CHECK(e.stats().stored_terms > 5);
  }
}

TEST_CASE("degree-truncated bases decide low-degree membership") {
  auto R = plane_ring(RationalField{});
  auto I = ideal_of(R, {"x^2-y*z", "x*y-z^2", "y^3-x*z^2"});
  auto full = groebner_basis(I);
  GroebnerOptions opts;
  opts.degree_bound = 4;
  auto trunc = groebner_basis(I, opts);
  CHECK(trunc.basis().degree_bound == 4u);
  std::mt19937_64 rng(3);
  for (int round = 0; round < 30; ++round) {
    auto f = testing::random_polynomial(rng, R, 4, 4, true);
    if (round % 2 == 0) f = I.generators()[round % 3] * testing::random_polynomial(rng, R, 3, 2, true);
    CHECK(normal_form(f, trunc).is_zero() == normal_form(f, full).is_zero());
  }
  CHECK_THROWS(groebner_basis(ideal_of(R, {"x+1"}), opts));
}
