#pragma once

#include <string>
#include <vector>

#include "idealis/arrangement/arrangement.hpp"
#include "idealis/groebner/ideal_ops.hpp"
#include "idealis/invariant/interpolation.hpp"

namespace idealis {

/// Distinct points with multiplicities.
template <CoefficientField F>
class FatPointScheme {
 public:
  FatPointScheme(F field, std::vector<ProjectivePoint<F>> points, std::vector<unsigned> mults)
      : field_(std::move(field)), points_(std::move(points)), mults_(std::move(mults)) {
    if (points_.size() != mults_.size()) throw Error("one multiplicity per point is required");
    for (auto m : mults_) {
      if (m == 0) throw Error("multiplicities must be positive");
    }
    auto sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("repeated point in scheme");
  }

  /// Every point of `ps` with multiplicity m.
  static FatPointScheme uniform(const F& field, const std::vector<ProjectivePoint<F>>& pts, unsigned m) {
    return FatPointScheme(field, pts, std::vector<unsigned>(pts.size(), m));
  }

  const F& field() const { return field_; }
  const std::vector<ProjectivePoint<F>>& points() const { return points_; }
  const std::vector<unsigned>& multiplicities() const { return mults_; }
  std::size_t size() const { return points_.size(); }

  /// sum C(m_i + 1, 2), the number of conditions on forms of large degree.
  std::size_t condition_count() const {
    std::size_t n = 0;
    for (auto m : mults_) n += static_cast<std::size_t>(m) * (m + 1) / 2;
    return n;
  }

 private:
  F field_;
  std::vector<ProjectivePoint<F>> points_;
  std::vector<unsigned> mults_;
};

/// (P_k x_i - P_i x_k) for the two indices i other than the pivot k of P.
template <CoefficientField F>
Ideal<F> point_ideal(const RingPtr<F>& ring, const ProjectivePoint<F>& p) {
  const std::size_t k = p.pivot();
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == k) continue;
    auto form = Polynomial<F>::variable(ring, i).scaled(p[k]);
    if (!p[i].is_zero()) form -= Polynomial<F>::variable(ring, k).scaled(p[i]);
    gens.push_back(form.monic());
  }
  return Ideal<F>(ring, std::move(gens));
}

enum class FatPointStrategy { Intersection, Interpolation };

FatPointStrategy parse_strategy(std::string_view text);
std::string strategy_name(FatPointStrategy s);

/// How the interpolation strategy ended.
struct InterpolationTrace {
  std::vector<std::size_t> graded_dims;     // dim I_d for d = 0, 1, ...
  std::vector<std::size_t> new_generators;  // minimal generators found in degree d
  unsigned stop_degree = 0;
};

namespace detail {

/// Rows of an echelon basis (pivot columns ascending) spanning V; reduces
/// vectors modulo V.
template <CoefficientField F>
struct EchelonSpan {
  Matrix<F> rows;
  std::vector<std::size_t> pivots;

  EchelonSpan(const F& field, std::size_t cols) : rows(field, 0, cols) {}

  std::vector<typename F::Element> reduce(std::vector<typename F::Element> v) const {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const auto c = pivots[r];
      if (v[c].is_zero()) continue;
      auto factor = v[c];
      for (std::size_t k = c; k < v.size(); ++k) {
        if (!rows(r, k).is_zero()) v[k] -= factor * rows(r, k);
      }
    }
    return v;
  }
};

}  // namespace detail

/// Ideal of forms vanishing to order >= m_i at P_i.
template <CoefficientField F>
Ideal<F> fat_points_ideal(const FatPointScheme<F>& s, const RingPtr<F>& ring, FatPointStrategy strategy,
                          const GroebnerOptions& opts = {}, Execution exec = Execution::Parallel,
                          InterpolationTrace* trace = nullptr) {
  using Element = typename F::Element;
  if (s.size() == 0) return Ideal<F>(ring, {Polynomial<F>::constant(ring, 1)});
  if (strategy == FatPointStrategy::Intersection) {
    Ideal<F> acc = ideal_power(point_ideal(ring, s.points()[0]), s.multiplicities()[0]);
    for (std::size_t i = 1; i < s.size(); ++i) {
      acc = ideal_intersection(acc, ideal_power(point_ideal(ring, s.points()[i]), s.multiplicities()[i]), opts);
    }
    return acc;
  }
  const F& field = ring->field();
  const std::size_t conditions = s.condition_count();
  InterpolationTrace local;
  InterpolationTrace& tr = trace ? *trace : local;
  tr = {};
  std::vector<Polynomial<F>> gens;
  std::vector<Polynomial<F>> previous;  // basis of I_{d-1}
  unsigned stable = 0;
  for (unsigned d = 0;; ++d) {
    auto monos = monomials_of_degree(*ring, d);
    std::unordered_map<Monomial, std::size_t, MonomialHash> column;
    for (std::size_t k = 0; k < monos.size(); ++k) column.emplace(monos[k], k);
    auto piece = forms_vanishing(ring, d, std::span<const ProjectivePoint<F>>(s.points()),
                                 std::span<const unsigned>(s.multiplicities()), exec);
    // Span of x_i * I_{d-1} inside I_d.
    Matrix<F> lifted(field, 0, monos.size());
    for (const auto& g : previous) {
      for (std::size_t v = 0; v < 3; ++v) {
        std::vector<Element> row(monos.size(), field.zero());
        for (const auto& t : g.terms()) row[column.at(t.mono * Monomial::variable(v))] = t.coeff;
        lifted.append_row(row);
      }
    }
    detail::EchelonSpan<F> span(field, monos.size());
    span.pivots = rref(lifted, exec);
    span.rows = std::move(lifted);
    Matrix<F> fresh(field, 0, monos.size());
    for (const auto& g : piece) {
      std::vector<Element> row(monos.size(), field.zero());
      for (const auto& t : g.terms()) row[column.at(t.mono)] = t.coeff;
      fresh.append_row(span.reduce(std::move(row)));
    }
    rref(fresh, exec);
    std::size_t found = 0;
    for (std::size_t r = 0; r < fresh.rows(); ++r) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if (!fresh(r, c).is_zero()) terms.push_back({monos[c], fresh(r, c)});
      }
      gens.push_back(Polynomial<F>::from_sorted(ring, std::move(terms)));
      ++found;
    }
    tr.graded_dims.push_back(piece.size());
    tr.new_generators.push_back(found);
    const std::size_t total = monos.size();
    const bool plateau = total >= conditions && piece.size() == total - conditions;
    stable = (plateau && found == 0) ? stable + 1 : 0;
    if (stable == 2) {
      tr.stop_degree = d;
      break;
    }
    previous = std::move(piece);
  }
  return Ideal<F>(ring, std::move(gens));
}

template <CoefficientField F>
FatPointStrategy default_strategy(const FatPointScheme<F>& s) {
  return s.size() >= 10 ? FatPointStrategy::Interpolation : FatPointStrategy::Intersection;
}

/// I^(m) of a reduced point set: every point with multiplicity m.
template <CoefficientField F>
Ideal<F> symbolic_power(const std::vector<ProjectivePoint<F>>& pts, const RingPtr<F>& ring, unsigned m,
                        std::optional<FatPointStrategy> strategy = std::nullopt, const GroebnerOptions& opts = {},
                        Execution exec = Execution::Parallel) {
  auto s = FatPointScheme<F>::uniform(ring->field(), pts, m);
  return fat_points_ideal(s, ring, strategy.value_or(default_strategy(s)), opts, exec);
}

}  // namespace idealis
