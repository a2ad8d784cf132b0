#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "idealis/algebra/linear_algebra.hpp"
#include "idealis/groebner/buchberger.hpp"

namespace idealis {

namespace detail {

template <CoefficientField F>
bool ideals_share_ring(const Ideal<F>& a, const Ideal<F>& b) {
  const auto& ra = *a.ring();
  const auto& rb = *b.ring();
  return ra.variables() == rb.variables() && ra.field() == rb.field();
}

/// Fresh auxiliary variable name not clashing with the ring's variables.
template <CoefficientField F>
std::string fresh_variable(const Ring<F>& ring, std::string base = "t") {
  std::string name = base;
  for (int k = 0; ring.index_of(name); ++k) name = base + std::to_string(k);
  return name;
}

/// Embeds f into a ring with `shift` extra variables in front.
template <CoefficientField F>
Polynomial<F> inject(const Polynomial<F>& f, const RingPtr<F>& target, std::size_t shift) {
  std::vector<std::size_t> map(f.ring()->nvars());
  std::iota(map.begin(), map.end(), shift);
  return f.rebased(target, map);
}

}  // namespace detail

/// f in I, using a cached basis when it decides the question and computing
/// one otherwise (degree-truncated for homogeneous input).
template <CoefficientField F>
bool ideal_membership(const Polynomial<F>& f, const Ideal<F>& ideal, const GroebnerOptions& opts = {}) {
  if (f.is_zero()) return true;
  if (!same_ring(f.ring(), ideal.ring()) && f.ring()->variables() != ideal.ring()->variables()) throw RingMismatch();
  const bool graded = f.is_homogeneous() && ideal.is_homogeneous();
  if (ideal.has_basis() && (!ideal.basis().degree_bound || (graded && ideal.basis_covers_degree(f.degree()))))
    return normal_form(f, ideal).is_zero();
  GroebnerOptions o = opts;
  if (graded) o.degree_bound = static_cast<unsigned>(f.degree());
  return normal_form(f, groebner_basis(ideal, o)).is_zero();
}

/// A contained in B. Computes one basis for B covering the largest generator
/// degree of A.
template <CoefficientField F>
bool ideal_containment(const Ideal<F>& a, const Ideal<F>& b, const GroebnerOptions& opts = {}) {
  if (!detail::ideals_share_ring(a, b)) throw RingMismatch();
  Ideal<F> gb = b;
  const bool graded = a.is_homogeneous() && b.is_homogeneous();
  const int top = a.max_generator_degree();
  if (!(b.has_basis() && (!b.basis().degree_bound || (graded && b.basis_covers_degree(top))))) {
    GroebnerOptions o = opts;
    if (graded && top >= 0) o.degree_bound = static_cast<unsigned>(top);
    gb = groebner_basis(b, o);
  }
  for (const auto& g : a.generators()) {
    if (!normal_form(g, gb).is_zero()) return false;
  }
  return true;
}

/// Generators of I intersected with the subring without the `front`
/// variables, as an ideal over the remaining variables (in their original
/// relative order, degrevlex).
template <CoefficientField F>
Ideal<F> eliminate(const Ideal<F>& ideal, const std::vector<std::string>& front, const GroebnerOptions& opts = {}) {
  const auto& ring = *ideal.ring();
  std::vector<std::size_t> eliminated;
  std::vector<std::size_t> kept;
  for (const auto& name : front) {
    auto idx = ring.index_of(name);
    if (!idx) throw Error("cannot eliminate unknown variable '" + name + "'");
    eliminated.push_back(*idx);
  }
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (std::find(eliminated.begin(), eliminated.end(), i) == eliminated.end()) kept.push_back(i);
  }
  if (kept.empty()) throw Error("cannot eliminate every variable");
  if (eliminated.empty()) return groebner_basis(ideal, MonomialOrder::degrevlex(), opts);

  // Reorder so eliminated variables come first, then use a block order.
  std::vector<std::string> names;
  std::vector<std::size_t> var_map(ring.nvars());
  for (std::size_t k = 0; k < eliminated.size(); ++k) {
    names.push_back(ring.variables()[eliminated[k]]);
    var_map[eliminated[k]] = k;
  }
  std::vector<std::string> rest;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    names.push_back(ring.variables()[kept[k]]);
    rest.push_back(ring.variables()[kept[k]]);
    var_map[kept[k]] = eliminated.size() + k;
  }
  auto block_ring = make_ring(ring.field(), names, MonomialOrder::block(eliminated.size()));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rebased(block_ring, var_map));
  GroebnerOptions o = opts;
  o.degree_bound.reset();
  Ideal<F> gb = groebner_basis(Ideal<F>(block_ring, std::move(gens)), o);

  auto sub_ring = make_ring(ring.field(), rest);
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.basis().elements) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t k = 0; k < eliminated.size() && free; ++k) free = t.mono[k] == 0;
      if (!free) break;
    }
    if (!free) continue;
    // Drop the leading block of (zero) exponents.
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : g.terms()) {
      std::array<unsigned, kMaxVariables> e{};
      for (std::size_t k = 0; k < rest.size(); ++k) e[k] = t.mono[eliminated.size() + k];
      terms.push_back({Monomial(std::span<const unsigned>(e.data(), rest.size())), t.coeff});
    }
    out.emplace_back(sub_ring, std::move(terms));
  }
  return Ideal<F>(sub_ring, std::move(out));
}

/// A intersected with B via t*A + (1-t)*B and elimination of t.
template <CoefficientField F>
Ideal<F> ideal_intersection(const Ideal<F>& a, const Ideal<F>& b, const GroebnerOptions& opts = {}) {
  if (!detail::ideals_share_ring(a, b)) throw RingMismatch();
  const auto& ring = *a.ring();
  const std::string t = detail::fresh_variable(ring);
  auto ext = ring.extend_front({t}, MonomialOrder::degrevlex());
  auto tvar = Polynomial<F>::variable(ext, 0);
  auto one_minus_t = Polynomial<F>::constant(ext, 1) - tvar;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(tvar * detail::inject(g, ext, 1));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * detail::inject(g, ext, 1));
  Ideal<F> elim = eliminate(Ideal<F>(ext, std::move(gens)), {t}, opts);
  std::vector<Polynomial<F>> out;
  for (const auto& g : elim.generators()) out.emplace_back(a.ring(), g.terms());
  return Ideal<F>(a.ring(), std::move(out));
}

/// All r-fold products of generators, deduplicated, in a deterministic order.
template <CoefficientField F>
Ideal<F> ideal_power(const Ideal<F>& ideal, unsigned r) {
  if (r == 0) throw Error("ideal power needs r >= 1");
  const auto& gens = ideal.generators();
  std::vector<Polynomial<F>> out;
  if (gens.empty()) return Ideal<F>(ideal.ring());
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    Polynomial<F> p = gens[idx[0]];
    for (std::size_t k = 1; k < r; ++k) p *= gens[idx[k]];
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    // Next non-decreasing index tuple.
    std::size_t k = r;
    while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t l = k; l < r; ++l) idx[l] = idx[k - 1];
  }
  return Ideal<F>(ideal.ring(), std::move(out));
}

/// f in the radical of I: 1 in I + (1 - t f) over the ring extended by t.
template <CoefficientField F>
bool radical_membership(const Polynomial<F>& f, const Ideal<F>& ideal, const GroebnerOptions& opts = {}) {
  if (f.ring()->variables() != ideal.ring()->variables()) throw RingMismatch();
  const auto& ring = *ideal.ring();
  auto ext = ring.extend_front({detail::fresh_variable(ring)}, MonomialOrder::degrevlex());
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(detail::inject(g, ext, 1));
  gens.push_back(Polynomial<F>::constant(ext, 1) - Polynomial<F>::variable(ext, 0) * detail::inject(f, ext, 1));
  GroebnerOptions o = opts;
  o.degree_bound.reset();
  return groebner_basis(Ideal<F>(ext, std::move(gens)), o).is_unit();
}

template <CoefficientField F>
Ideal<F> jacobian_ideal(const Polynomial<F>& f) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t v = 0; v < f.ring()->nvars(); ++v) gens.push_back(f.derivative(v));
  return Ideal<F>(f.ring(), std::move(gens));
}

/// All monomials of total degree d in n variables, descending in `ring`'s order.
template <CoefficientField F>
std::vector<Monomial> monomials_of_degree(const Ring<F>& ring, unsigned d) {
  std::vector<Monomial> out;
  const std::size_t n = ring.nvars();
  std::array<unsigned, kMaxVariables> e{};
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(std::span<const unsigned>(e.data(), n));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

template <CoefficientField F>
struct GradedPiece {
  std::size_t dimension = 0;
  std::vector<Polynomial<F>> basis;  // echelon form, leading monomials distinct
};

/// I_d as the span of monomial multiples of the generators, by exact row
/// reduction on the degree-d monomial basis.
template <CoefficientField F>
GradedPiece<F> graded_piece(const Ideal<F>& ideal, unsigned d, Execution exec = Execution::Parallel) {
  if (!ideal.is_homogeneous()) throw Error("graded pieces need a homogeneous ideal");
  const auto& ring = ideal.ring();
  auto monos = monomials_of_degree(*ring, d);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (std::size_t k = 0; k < monos.size(); ++k) column.emplace(monos[k], k);
  Matrix<F> m(ring->field(), 0, monos.size());
  for (const auto& g : ideal.generators()) {
    if (g.degree() > static_cast<int>(d)) continue;
    for (const auto& q : monomials_of_degree(*ring, d - static_cast<unsigned>(g.degree()))) {
      std::vector<typename F::Element> row(monos.size(), ring->field().zero());
      for (const auto& t : g.terms()) row[column.at(t.mono * q)] = t.coeff;
      m.append_row(std::move(row));
    }
  }
  const std::size_t r = rref(m, exec).size();
  GradedPiece<F> out;
  out.dimension = r;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (!m(i, c).is_zero()) terms.push_back({monos[c], m(i, c)});
    }
    out.basis.push_back(Polynomial<F>::from_sorted(ring, std::move(terms)));
  }
  return out;
}

}  // namespace idealis
