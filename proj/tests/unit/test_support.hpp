#pragma once

#include <random>
#include <vector>

#include "idealis/algebra/polynomial.hpp"

namespace idealis::testing {

inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline Rational random_element(std::mt19937_64& rng, const RationalField&) { return random_rational(rng); }

inline Quadratic random_element(std::mt19937_64& rng, const QuadraticField& f) {
  return {random_rational(rng), random_rational(rng), f.d};
}

inline Residue random_element(std::mt19937_64& rng, const PrimeField& f) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.p - 1);
  return {d(rng), f.p};
}

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
template <CoefficientField F>
Polynomial<F> random_polynomial(std::mt19937_64& rng, const RingPtr<F>& ring, int terms, unsigned max_degree,
                                bool homogeneous = false) {
  std::vector<typename Polynomial<F>::Term> t;
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  for (int i = 0; i < terms; ++i) {
    unsigned d = homogeneous ? max_degree : deg(rng);
    std::vector<unsigned> e(ring->nvars(), 0);
    for (unsigned k = 0; k < d; ++k) e[std::uniform_int_distribution<std::size_t>(0, ring->nvars() - 1)(rng)]++;
    t.push_back({Monomial(std::span<const unsigned>(e)), random_element(rng, ring->field())});
  }
  return Polynomial<F>(ring, std::move(t));
}

}  // namespace idealis::testing
