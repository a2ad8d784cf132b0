#pragma once

#include <array>
#include <span>
#include <vector>

#include "idealis/algebra/polynomial.hpp"

namespace idealis {

/// Applies `fn` to every coefficient, producing a polynomial over `target`
/// (same variables).
template <CoefficientField F, CoefficientField G, class Fn>
Polynomial<G> map_coefficients(const Polynomial<F>& f, const RingPtr<G>& target, Fn&& fn) {
  if (target->nvars() != f.ring()->nvars()) throw RingMismatch();
  std::vector<typename Polynomial<G>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono, fn(t.coeff)});
  return Polynomial<G>(target, std::move(out));
}

/// Reduction map Q -> F_p. Throws BadPrime when p divides a denominator.
inline Residue specialize_element(const Rational& c, const PrimeField& fp) { return fp.from_rational(c); }

/// Q(sqrt d) -> F_p sending sqrt d to the smaller square root of d mod p.
Residue specialize_element(const Quadratic& c, const PrimeField& fp);

/// Coefficientwise reduction modulo p into `target` (a ring over F_p with the
/// same variables). Throws BadPrime when the prime must be skipped.
template <CoefficientField F>
Polynomial<PrimeField> specialize(const Polynomial<F>& f, const RingPtr<PrimeField>& target) {
  const PrimeField& fp = target->field();
  return map_coefficients(f, target, [&](const typename F::Element& c) { return specialize_element(c, fp); });
}

template <CoefficientField F>
Polynomial<PrimeField> specialize(const Polynomial<F>& f, const PrimeField& fp) {
  auto target = make_ring(fp, f.ring()->variables(), f.ring()->order());
  return specialize(f, target);
}

/// All divided derivatives D^alpha f with |alpha| < order, in a fixed
/// enumeration of multi-indices.
template <CoefficientField F>
std::vector<Polynomial<F>> derivatives_below_order(const Polynomial<F>& f, unsigned order) {
  const std::size_t n = f.ring()->nvars();
  std::vector<Polynomial<F>> out;
  std::vector<unsigned> alpha(n, 0);
  // Enumerate multi-indices of total size < order.
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == n) {
      out.push_back(hasse_derivative(f, std::span<const unsigned>(alpha)));
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      alpha[var] = k;
      self(self, var + 1, remaining - k);
    }
    alpha[var] = 0;
  };
  if (order > 0) rec(rec, 0, order - 1);
  return out;
}

/// Order-of-vanishing test prepared once for a polynomial and order m, then
/// applied to many points: f vanishes to order >= m at P iff every partial
/// derivative of total order <= m-1 (f included) vanishes at P.
template <CoefficientField F>
class VanishingTester {
 public:
  using Element = typename F::Element;

  VanishingTester(const Polynomial<F>& f, unsigned m) : derivs_(derivatives_below_order(f, m)) {
    // Cheapest checks first: higher derivatives have fewer terms and the
    // zeroth one rejects most non-zeros.
    std::stable_sort(derivs_.begin(), derivs_.end(),
                     [](const Polynomial<F>& a, const Polynomial<F>& b) { return a.size() < b.size(); });
  }

  bool operator()(std::span<const Element> point) const {
    for (const auto& d : derivs_) {
      if (!d.is_zero() && !d.evaluate(point).is_zero()) return false;
    }
    return true;
  }

 private:
  std::vector<Polynomial<F>> derivs_;
};

template <CoefficientField F>
bool vanishing_order_at_least(const Polynomial<F>& f, std::span<const typename F::Element> point, unsigned m) {
  if (m == 0) return true;
  return VanishingTester<F>(f, m)(point);
}

/// Largest m with vanishing order >= m (capped at `cap`).
template <CoefficientField F>
unsigned vanishing_order(const Polynomial<F>& f, std::span<const typename F::Element> point, unsigned cap) {
  unsigned m = 0;
  while (m < cap && vanishing_order_at_least(f, point, m + 1)) ++m;
  return m;
}

}  // namespace idealis
