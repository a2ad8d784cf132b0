#pragma once

#include <vector>

#include "idealis/algebra/operations.hpp"
#include "idealis/arrangement/projective.hpp"
#include "idealis/groebner/ideal_ops.hpp"

namespace idealis {

/// Points of P^2(F_p) where f and its three partials vanish, by exhaustive
/// enumeration. Sorted canonically; the parallel path splits the affine
/// chart by rows.
std::vector<ProjectivePoint<PrimeField>> singular_points_scan(const Polynomial<PrimeField>& f,
                                                             std::uint64_t max_prime = 4096,
                                                             Execution exec = Execution::Parallel);

struct SingularityType {
  unsigned multiplicity;
  bool ordinary;
};

/// C(d-1, 2) - sum C(m, 2); refuses non-ordinary points.
long genus_nodal(unsigned degree, const std::vector<SingularityType>& singular);

namespace detail {

template <CoefficientField F>
using Coeffs = std::vector<typename F::Element>;  // ascending powers

template <CoefficientField F>
void trim(Coeffs<F>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <CoefficientField F>
Coeffs<F> poly_mod(Coeffs<F> a, const Coeffs<F>& b) {
  trim<F>(a);
  const auto inv = b.back().inverse();
  while (a.size() >= b.size()) {
    auto q = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim<F>(a);
  }
  return a;
}

template <CoefficientField F>
std::size_t gcd_degree(Coeffs<F> a, Coeffs<F> b) {
  trim<F>(a);
  trim<F>(b);
  while (!b.empty()) {
    auto r = poly_mod<F>(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace detail

/// Multiplicity of f at p and whether the tangent cone consists of distinct
/// lines (checked by a squarefree test on the lowest-order form).
template <CoefficientField F>
SingularityType classify_singular_point(const Polynomial<F>& f, const ProjectivePoint<F>& p) {
  using Element = typename F::Element;
  const F& field = f.field();
  std::array<Element, 3> xyz{p[0], p[1], p[2]};
  const auto m = vanishing_order(f, std::span<const Element>(xyz), static_cast<unsigned>(f.degree()) + 1);
  if (m < 2) return {m, true};
  std::size_t k = 2;
  while (p[k].is_zero()) --k;
  auto local = make_ring(field, {"s", "t"});
  std::vector<Polynomial<F>> images;
  std::size_t next = 0;
  for (std::size_t v = 0; v < 3; ++v) {
    auto c = Polynomial<F>::constant(local, p[v]);
    if (v != k) c += Polynomial<F>::variable(local, next++);
    images.push_back(std::move(c));
  }
  auto g = f.compose(local, std::span<const Polynomial<F>>(images));
  // Tangent cone T(s, t): the degree-m part; test T(s, 1) for repeated roots.
  detail::Coeffs<F> h(m + 1, field.zero());
  for (const auto& t : g.terms()) {
    if (t.mono.degree() == m) h[t.mono[0]] = t.coeff;
  }
  detail::trim<F>(h);
  if (h.size() < m) return {m, false};  // t^2 divides T
  if (field.characteristic() != 0 && field.characteristic() <= m)
    throw BadCharacteristic("characteristic too small to classify the tangent cone");
  detail::Coeffs<F> dh;
  for (std::size_t i = 1; i < h.size(); ++i) dh.push_back(h[i] * from_int(field, static_cast<long>(i)));
  if (dh.empty()) return {m, true};
  return {m, detail::gcd_degree<F>(h, dh) == 0};
}

/// True iff V(df/dx, df/dy, df/dz) is empty in the projective plane.
template <CoefficientField F>
bool emptiness_of_singular_locus(const Polynomial<F>& f, const GroebnerOptions& opts = {}) {
  if (!f.is_homogeneous()) throw Error("singular-locus test needs a homogeneous polynomial");
  auto jac = jacobian_ideal(f);
  for (std::size_t v = 0; v < 3; ++v) {
    if (!radical_membership(Polynomial<F>::variable(f.ring(), v), jac, opts)) return false;
  }
  return true;
}

}  // namespace idealis
