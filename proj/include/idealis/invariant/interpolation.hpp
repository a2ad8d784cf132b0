#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "idealis/algebra/linear_algebra.hpp"
#include "idealis/arrangement/projective.hpp"
#include "idealis/invariant/molien.hpp"

namespace idealis {

namespace detail {

inline long small_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
  return r;
}

/// Multi-indices alpha in N^3 with |alpha| < m.
inline std::vector<std::array<unsigned, 3>> orders_below(unsigned m) {
  std::vector<std::array<unsigned, 3>> out;
  for (unsigned total = 0; total < m; ++total) {
    for (unsigned a = total + 1; a-- > 0;) {
      for (unsigned b = total - a + 1; b-- > 0;) out.push_back({a, b, total - a - b});
    }
  }
  return out;
}

}  // namespace detail

/// Rows "D^alpha g(P) = 0" for every |alpha| < m_P, with D^alpha the divided
/// derivative, over the columns `monos` (all of one degree). Rows are grouped
/// by point in input order.
template <CoefficientField F>
Matrix<F> fat_point_conditions(const F& field, std::span<const Monomial> monos,
                               std::span<const ProjectivePoint<F>> points, std::span<const unsigned> mults,
                               Execution exec = Execution::Parallel) {
  using Element = typename F::Element;
  if (points.size() != mults.size()) throw Error("one multiplicity per point is required");
  unsigned d = 0;
  for (const auto& m : monos) d = std::max(d, m.degree());
  std::vector<std::pair<std::size_t, std::array<unsigned, 3>>> rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const auto& a : detail::orders_below(mults[i])) rows.emplace_back(i, a);
  }
  Matrix<F> out(field, rows.size(), monos.size());
  // Powers of each coordinate up to degree d.
  std::vector<std::array<std::vector<Element>, 3>> powers(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t v = 0; v < 3; ++v) {
      auto& pw = powers[i][v];
      pw.assign(d + 1, field.one());
      for (unsigned k = 1; k <= d; ++k) pw[k] = pw[k - 1] * points[i][v];
    }
  }
  const auto n = static_cast<std::ptrdiff_t>(rows.size());
  const bool parallel = exec == Execution::Parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t rs = 0; rs < n; ++rs) {
    auto r = static_cast<std::size_t>(rs);
    const auto& [pi, alpha] = rows[r];
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const Monomial& m = monos[c];
      if (m[0] < alpha[0] || m[1] < alpha[1] || m[2] < alpha[2]) continue;
      long coef = 1;
      for (std::size_t v = 0; v < 3; ++v) coef *= detail::small_binomial(m[v], alpha[v]);
      Element e = from_int(field, coef);
      for (std::size_t v = 0; v < 3; ++v) e *= powers[pi][v][m[v] - alpha[v]];
      out(r, c) = std::move(e);
    }
  }
  return out;
}

/// Basis of the degree-d forms vanishing to order >= m_P at each P.
template <CoefficientField F>
std::vector<Polynomial<F>> forms_vanishing(const RingPtr<F>& ring, unsigned d,
                                           std::span<const ProjectivePoint<F>> points,
                                           std::span<const unsigned> mults, Execution exec = Execution::Parallel) {
  auto monos = monomials_of_degree(*ring, d);
  auto m = fat_point_conditions(ring->field(), std::span<const Monomial>(monos), points, mults, exec);
  std::vector<Polynomial<F>> out;
  for (auto& v : kernel(std::move(m), exec)) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (!v[c].is_zero()) terms.push_back({monos[c], std::move(v[c])});
    }
    out.push_back(Polynomial<F>::from_sorted(ring, std::move(terms)));
  }
  return out;
}

template <CoefficientField F>
struct ImposedOrbit {
  ProjectivePoint<F> representative;
  unsigned order;
};

/// A curve in the span of a basis, with the conditions it was built from.
template <CoefficientField F>
struct InvariantCurve {
  unsigned degree = 0;
  std::vector<std::array<unsigned, 3>> exponents;
  std::vector<typename F::Element> coefficients;
  Polynomial<F> polynomial;
  std::vector<ImposedOrbit<F>> imposed;
};

namespace detail {

/// The two partials complementary to the last nonzero coordinate.
template <CoefficientField F>
std::array<std::size_t, 2> complementary_partials(const ProjectivePoint<F>& p) {
  std::size_t k = 2;
  while (p[k].is_zero()) --k;
  if (k == 2) return {0, 1};
  if (k == 1) return {0, 2};
  return {1, 2};
}

}  // namespace detail

/// Kernel of the value conditions at `simple` and value plus two partial
/// conditions at `doubles`, each kernel vector normalized to a leading 1.
/// Throws EmptyKernel when only the zero curve survives.
template <CoefficientField F>
std::vector<InvariantCurve<F>> interpolate_curve(const InvariantBasis<F>& basis,
                                                 const std::vector<ProjectivePoint<F>>& simple,
                                                 const std::vector<ProjectivePoint<F>>& doubles,
                                                 Execution exec = Execution::Parallel) {
  using Element = typename F::Element;
  const F& field = basis.ring->field();
  struct Condition {
    const ProjectivePoint<F>* point;
    int partial;  // -1 for the value
  };
  std::vector<Condition> conds;
  for (const auto& p : simple) conds.push_back({&p, -1});
  for (const auto& p : doubles) {
    conds.push_back({&p, -1});
    for (auto v : detail::complementary_partials(p)) conds.push_back({&p, static_cast<int>(v)});
  }
  const std::size_t cols = basis.size();
  Matrix<F> m(field, conds.size(), cols);
  const auto n = static_cast<std::ptrdiff_t>(cols);
  const bool parallel = exec == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t cs = 0; cs < n; ++cs) {
    auto c = static_cast<std::size_t>(cs);
    const auto& g = basis.elements[c];
    std::array<Polynomial<F>, 3> partials{g.derivative(0), g.derivative(1), g.derivative(2)};
    for (std::size_t r = 0; r < conds.size(); ++r) {
      const auto& pt = *conds[r].point;
      std::array<Element, 3> xyz{pt[0], pt[1], pt[2]};
      const auto& poly = conds[r].partial < 0 ? g : partials[static_cast<std::size_t>(conds[r].partial)];
      m(r, c) = poly.evaluate(std::span<const Element>(xyz));
    }
  }
  auto ker = kernel(std::move(m), exec);
  if (ker.empty()) throw EmptyKernel("no nonzero curve satisfies the imposed conditions");
  std::vector<InvariantCurve<F>> out;
  for (auto& v : ker) {
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    Element inv = v[lead].inverse();
    for (auto& e : v) e *= inv;
    Polynomial<F> poly(basis.ring);
    for (std::size_t c = 0; c < cols; ++c) {
      if (!v[c].is_zero()) poly += basis.elements[c].scaled(v[c]);
    }
    InvariantCurve<F> curve{basis.degree, basis.exponents, std::move(v), std::move(poly), {}};
    for (const auto& p : simple) curve.imposed.push_back({p, 1});
    for (const auto& p : doubles) curve.imposed.push_back({p, 2});
    out.push_back(std::move(curve));
  }
  return out;
}

/// Reference coefficients keyed by invariant exponent (a, b, c).
using ReferenceCoefficients = std::map<std::array<unsigned, 3>, Rational>;

template <CoefficientField F>
struct CoefficientComparison {
  bool projective_match = false;
  std::vector<typename F::Element> rescaled;  // scaled so the anchor matches the reference
  std::vector<std::size_t> mismatches;        // basis indices differing after rescaling
  std::vector<std::size_t> missing;           // basis exponents absent from the reference
};

/// Compares curve coefficients with a reference up to a common scalar,
/// fixing the scalar at the `anchor` exponent.
template <CoefficientField F>
CoefficientComparison<F> compare_coefficients(const InvariantCurve<F>& curve, const ReferenceCoefficients& ref,
                                              const std::array<unsigned, 3>& anchor, const F& field) {
  CoefficientComparison<F> out;
  std::size_t ai = curve.exponents.size();
  for (std::size_t k = 0; k < curve.exponents.size(); ++k) {
    if (curve.exponents[k] == anchor) ai = k;
  }
  if (ai == curve.exponents.size() || curve.coefficients[ai].is_zero() || !ref.count(anchor))
    throw Error("anchor coefficient unavailable");
  auto scale = field.from_rational(ref.at(anchor)) * curve.coefficients[ai].inverse();
  for (std::size_t k = 0; k < curve.exponents.size(); ++k) {
    out.rescaled.push_back(curve.coefficients[k] * scale);
    auto it = ref.find(curve.exponents[k]);
    if (it == ref.end()) {
      out.missing.push_back(k);
      if (!out.rescaled.back().is_zero()) out.mismatches.push_back(k);
      continue;
    }
    if (!(out.rescaled.back() == field.from_rational(it->second))) out.mismatches.push_back(k);
  }
  out.projective_match = out.mismatches.empty() && ref.size() + out.missing.size() == curve.exponents.size();
  return out;
}

}  // namespace idealis
