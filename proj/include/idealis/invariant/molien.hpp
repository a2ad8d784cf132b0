#pragma once

#include <array>
#include <vector>

#include "idealis/arrangement/group.hpp"
#include "idealis/algebra/text_format.hpp"
#include "idealis/groebner/ideal_ops.hpp"

namespace idealis {

namespace detail {

template <CoefficientField F>
void require_good_characteristic(const MatrixGroup<F>& g) {
  const auto p = g.field().characteristic();
  if (p != 0 && g.order() % p == 0)
    throw BadCharacteristic("characteristic " + std::to_string(p) + " divides the group order " +
                            std::to_string(g.order()));
}

}  // namespace detail

/// Coefficient of t^d in the Molien series (1/|G|) sum 1/det(I - tM).
template <CoefficientField F>
std::size_t molien_dimension(const MatrixGroup<F>& g, unsigned d) {
  detail::require_good_characteristic(g);
  const F& field = g.field();
  using Element = typename F::Element;
  Element total = field.zero();
  for (const auto& m : g.elements()) {
    // det(I - tM) = 1 - e1 t + e2 t^2 - e3 t^3
    Element e1 = m.trace();
    Element e2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                 m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    Element e3 = m.determinant();
    // 1/det: s_k = e1 s_{k-1} - e2 s_{k-2} + e3 s_{k-3}
    std::vector<Element> s(d + 1, field.zero());
    s[0] = field.one();
    for (unsigned k = 1; k <= d; ++k) {
      Element v = e1 * s[k - 1];
      if (k >= 2) v -= e2 * s[k - 2];
      if (k >= 3) v += e3 * s[k - 3];
      s[k] = std::move(v);
    }
    total += s[d];
  }
  Element avg = total * from_int(field, static_cast<long>(g.order())).inverse();
  // The average is a non-negative integer; over F_p it is only known mod p.
  for (std::size_t n = 0;; ++n) {
    if (from_int(field, static_cast<long>(n)) == avg) return n;
    if (n > (d + 1) * (d + 2) / 2) throw Error("Molien coefficient is not a small integer");
  }
}

/// Rank of the Reynolds projector on degree-d forms, by exact linear algebra.
template <CoefficientField F>
std::size_t reynolds_fixed_dim(const MatrixGroup<F>& g, unsigned d, Execution exec = Execution::Parallel) {
  detail::require_good_characteristic(g);
  const F& field = g.field();
  auto ring = plane_ring(field);
  auto monos = monomials_of_degree(*ring, d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (std::size_t k = 0; k < monos.size(); ++k) column.emplace(monos[k], k);
  Matrix<F> r(field, monos.size(), monos.size());
  const auto n = static_cast<std::ptrdiff_t>(monos.size());
  const bool parallel = exec == Execution::Parallel;
  // Row k holds the sum over G of the pulled-back k-th monomial.
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t ks = 0; ks < n; ++ks) {
    auto k = static_cast<std::size_t>(ks);
    Polynomial<F> sum(ring);
    auto mono = Polynomial<F>::term(ring, monos[k], field.one());
    for (const auto& m : g.elements()) sum += m.pull_back(mono);
    for (const auto& t : sum.terms()) r(k, column.at(t.mono)) = t.coeff;
  }
  return rank(std::move(r), exec);
}

/// Exponents (a, b, c) with a*w1 + b*w2 + c*w3 = d, descending in (c, b, a).
inline std::vector<std::array<unsigned, 3>> invariant_monomials(std::array<unsigned, 3> w, unsigned d) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned c = d / w[2] + 1; c-- > 0;) {
    unsigned rest_c = d - c * w[2];
    for (unsigned b = rest_c / w[1] + 1; b-- > 0;) {
      unsigned rest_b = rest_c - b * w[1];
      if (rest_b % w[0] == 0) out.push_back({rest_b / w[0], b, c});
    }
  }
  return out;
}

template <CoefficientField F>
bool is_invariant(const Polynomial<F>& f, const MatrixGroup<F>& g) {
  for (const auto& m : g.elements()) {
    if (!(m.pull_back(f) == f)) return false;
  }
  return true;
}

/// Degree-d products of the generators z, x^2+y^2 and
/// 11x^6+15x^4y^2+45x^2y^4+9y^6 (weights 1, 2, 6), or an arbitrary list of
/// forms when built with from_elements.
template <CoefficientField F>
struct InvariantBasis {
  RingPtr<F> ring;
  unsigned degree = 0;
  std::array<unsigned, 3> weights{1, 2, 6};
  std::vector<Polynomial<F>> generators;
  std::vector<std::array<unsigned, 3>> exponents;  // empty for a plain basis
  std::vector<Polynomial<F>> elements;

  static std::vector<Polynomial<F>> standard_generators(const RingPtr<F>& ring) {
    auto var = [&](std::size_t i) { return Polynomial<F>::variable(ring, i); };
    auto c = [&](long n) { return Polynomial<F>::constant(ring, n); };
    auto x2 = var(0).pow(2);
    auto y2 = var(1).pow(2);
    auto f3 = c(11) * x2.pow(3) + c(15) * x2.pow(2) * y2 + c(45) * x2 * y2.pow(2) + c(9) * y2.pow(3);
    return {var(2), x2 + y2, f3};
  }

  static InvariantBasis standard(const F& field, unsigned d) {
    InvariantBasis b;
    b.ring = plane_ring(field);
    b.degree = d;
    b.generators = standard_generators(b.ring);
    b.exponents = invariant_monomials(b.weights, d);
    for (const auto& e : b.exponents) {
      b.elements.push_back(b.generators[0].pow(e[0]) * b.generators[1].pow(e[1]) * b.generators[2].pow(e[2]));
    }
    return b;
  }

  static InvariantBasis from_elements(std::vector<Polynomial<F>> elems) {
    if (elems.empty()) throw Error("empty basis");
    InvariantBasis b;
    b.ring = elems.front().ring();
    b.degree = static_cast<unsigned>(elems.front().degree());
    b.elements = std::move(elems);
    return b;
  }

  std::size_t size() const { return elements.size(); }

  /// "f1^12", "f1^2*f2*f3", or the element itself for a plain basis.
  std::string label(std::size_t k) const {
    if (exponents.empty()) return to_string(elements[k]);
    std::string s;
    for (std::size_t i = 0; i < 3; ++i) {
      if (exponents[k][i] == 0) continue;
      if (!s.empty()) s += '*';
      s += "f" + std::to_string(i + 1);
      if (exponents[k][i] > 1) s += "^" + std::to_string(exponents[k][i]);
    }
    return s.empty() ? "1" : s;
  }
};

}  // namespace idealis
