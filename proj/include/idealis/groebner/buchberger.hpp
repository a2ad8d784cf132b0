#pragma once

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <vector>

#include "idealis/groebner/ideal.hpp"

namespace idealis {

namespace detail {

/// Basis element as stored by the engine.
template <CoefficientField F>
struct BasisEntry {
  Polynomial<F> poly;  // monic
  Monomial lm;
  std::uint64_t signature;
  unsigned sugar;
  bool redundant = false;
};

/// Multivariate division with a hashed accumulator and a max-heap of pending
/// monomials. Reducers are tried in insertion order, so results are
/// deterministic.
template <CoefficientField F>
class Reducer {
 public:
  using Element = typename F::Element;
  using Term = typename Polynomial<F>::Term;

  explicit Reducer(const RingPtr<F>& ring)
      : ring_(ring), heap_(MonoLess{ring.get()}) {}

  /// Full reduction of `f`; `sugar` is raised to account for the multiples
  /// used. When `full` is false only the leading term is reduced.
  Polynomial<F> reduce(const Polynomial<F>& f, const std::vector<BasisEntry<F>>& basis, unsigned& sugar,
                       bool full = true) {
    acc_.clear();
    heap_ = Heap(MonoLess{ring_.get()});
    for (const auto& t : f.terms()) insert(t.mono, t.coeff);
    std::vector<Term> out;
    while (!heap_.empty()) {
      Monomial m = heap_.top();
      heap_.pop();
      auto it = acc_.find(m);
      if (it == acc_.end()) continue;
      Element c = std::move(it->second);
      acc_.erase(it);
      const BasisEntry<F>* g = find_reducer(m, basis);
      if (g == nullptr) {
        out.push_back({m, std::move(c)});
        if (!full) break;
        continue;
      }
      Monomial q = m / g->lm;
      sugar = std::max(sugar, g->sugar + q.degree());
      const auto& terms = g->poly.terms();
      Element neg = -c;
      for (std::size_t k = 1; k < terms.size(); ++k) insert(terms[k].mono * q, neg * terms[k].coeff);
    }
    if (!full) {
      // Drain the remaining terms in order.
      while (!heap_.empty()) {
        Monomial m = heap_.top();
        heap_.pop();
        auto it = acc_.find(m);
        if (it == acc_.end()) continue;
        out.push_back({m, std::move(it->second)});
        acc_.erase(it);
      }
    }
    return Polynomial<F>::from_sorted(ring_, std::move(out));
  }

 private:
  struct MonoLess {
    const Ring<F>* ring;
    bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) < 0; }
  };
  using Heap = std::priority_queue<Monomial, std::vector<Monomial>, MonoLess>;

  void insert(const Monomial& m, const Element& c) {
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (inserted) {
      heap_.push(m);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) acc_.erase(it);
  }

  static const BasisEntry<F>* find_reducer(const Monomial& m, const std::vector<BasisEntry<F>>& basis) {
    const std::uint64_t sig = m.signature();
    for (const auto& g : basis) {
      if ((g.signature & ~sig) != 0) continue;
      if (g.lm.divides(m)) return &g;
    }
    return nullptr;
  }

  RingPtr<F> ring_;
  std::unordered_map<Monomial, Element, MonomialHash> acc_;
  Heap heap_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar
/// selection (ties: lexicographically smallest lcm, then indices).
template <CoefficientField F>
class BuchbergerEngine {
 public:
  BuchbergerEngine(RingPtr<F> ring, const GroebnerOptions& opts)
      : ring_(std::move(ring)), opts_(opts), reducer_(ring_), start_(std::chrono::steady_clock::now()) {}

  std::vector<Polynomial<F>> run(std::vector<Polynomial<F>> gens) {
    std::stable_sort(gens.begin(), gens.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      unsigned sugar = static_cast<unsigned>(g.degree());
      if (opts_.degree_bound && sugar > *opts_.degree_bound) {
        ++stats_.degree_dropped;
        continue;
      }
      Polynomial<F> h = reducer_.reduce(g, basis_, sugar);
      if (!h.is_zero()) insert(h.monic(), sugar);
      if (unit_found_) break;
    }
    while (!pairs_.empty() && !unit_found_) {
      check_limits();
      Pair p = pairs_.back();
      pairs_.pop_back();
      const auto& gi = basis_[p.i];
      const auto& gj = basis_[p.j];
      Polynomial<F> s = gi.poly.mul_term(p.lcm / gi.lm, ring_->field().one()) -
                        gj.poly.mul_term(p.lcm / gj.lm, ring_->field().one());
      unsigned sugar = p.sugar;
      Polynomial<F> h = reducer_.reduce(s, basis_, sugar);
      ++stats_.pairs_reduced;
      if (h.is_zero()) {
        ++stats_.zero_reductions;
      } else {
        insert(h.monic(), sugar);
      }
      if (opts_.progress && stats_.pairs_reduced % opts_.progress_interval == 0) opts_.progress(stats_);
    }
    return finalize();
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
  };

  // Pairs are kept sorted so that the next pair to process is at the back.
  bool pair_before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (!(a.lcm == b.lcm)) return lex_less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  void check_limits() {
    if (opts_.cancel && opts_.cancel->load(std::memory_order_relaxed)) throw Cancelled(stats_);
    if (opts_.time_budget && std::chrono::steady_clock::now() - start_ > *opts_.time_budget)
      throw ResourceLimit("Groebner basis wall-time budget exceeded", stats_);
    if (pairs_.size() > opts_.max_pairs) throw ResourceLimit("S-pair queue exceeds the configured cap", stats_);
    if (stats_.stored_terms > opts_.max_terms) throw ResourceLimit("stored terms exceed the configured cap", stats_);
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const auto& a = basis_[i];
    const auto& b = basis_[j];
    return std::max(a.sugar + l.degree() - a.lm.degree(), b.sugar + l.degree() - b.lm.degree());
  }

  /// Gebauer-Moeller update for the new element h (index basis_.size()-1).
  void insert(Polynomial<F> h, unsigned sugar) {
    const std::size_t hi = basis_.size();
    Monomial lmh = h.leading_monomial();
    stats_.stored_terms += h.size();
    stats_.max_sugar = std::max(stats_.max_sugar, sugar);
    basis_.push_back({std::move(h), lmh, lmh.signature(), sugar, false});
    if (lmh.is_one()) {
      unit_found_ = true;
      return;
    }

    // Candidate pairs (h, g) for active g.
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g) {
      if (basis_[g].redundant) continue;
      cand.push_back({g, hi, lcm(basis_[g].lm, lmh), 0});
    }
    stats_.pairs_created += cand.size();
    // Chain criterion among the new pairs: drop (h,g1) if another new pair's
    // lcm properly divides it, keep one representative of equal lcms.
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime(basis_[cand[a].i].lm, lmh)) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && (!(cand[b].lcm == cand[a].lcm) || b < a)) {
          keep[a] = false;
          ++stats_.chain_criterion;
          break;
        }
      }
    }
    // Product criterion: coprime leading monomials reduce to zero; a kept
    // coprime pair also shadows other pairs with the same lcm.
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (coprime(basis_[cand[a].i].lm, lmh)) {
        ++stats_.product_criterion;
        continue;
      }
      Pair p = cand[a];
      p.sugar = pair_sugar(p.i, p.j, p.lcm);
      if (opts_.degree_bound && p.lcm.degree() > *opts_.degree_bound) {
        ++stats_.degree_dropped;
        continue;
      }
      fresh.push_back(p);
    }
    // Old pairs (g1,g2) become superfluous when lm(h) | lcm(g1,g2) and the
    // lcms with h differ from it.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + fresh.size());
    for (const auto& p : pairs_) {
      if (lmh.divides(p.lcm) && !(lcm(basis_[p.i].lm, lmh) == p.lcm) && !(lcm(basis_[p.j].lm, lmh) == p.lcm)) {
        ++stats_.chain_criterion;
        continue;
      }
      kept.push_back(p);
    }
    kept.insert(kept.end(), fresh.begin(), fresh.end());
    std::sort(kept.begin(), kept.end(), [&](const Pair& a, const Pair& b) { return pair_before(b, a); });
    pairs_ = std::move(kept);
    stats_.max_queue = std::max(stats_.max_queue, pairs_.size());

    for (std::size_t g = 0; g < hi; ++g) {
      if (!basis_[g].redundant && lmh.divides(basis_[g].lm)) basis_[g].redundant = true;
    }
  }

  std::vector<Polynomial<F>> finalize() {
    if (unit_found_) {
      stats_.basis_size = 1;
      return {Polynomial<F>::constant(ring_, ring_->field().one())};
    }
    std::vector<BasisEntry<F>> minimal;
    for (const auto& e : basis_) {
      if (!e.redundant) minimal.push_back(e);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const BasisEntry<F>& a, const BasisEntry<F>& b) { return ring_->compare(a.lm, b.lm) < 0; });
    std::vector<Polynomial<F>> out;
    out.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<BasisEntry<F>> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(minimal[l]);
      }
      const auto& terms = minimal[k].poly.terms();
      Polynomial<F> tail = Polynomial<F>::from_sorted(
          ring_, std::vector<typename Polynomial<F>::Term>(terms.begin() + 1, terms.end()));
      unsigned sugar = 0;
      Polynomial<F> red = reducer_.reduce(tail, others, sugar);
      out.push_back(Polynomial<F>::term(ring_, minimal[k].lm, ring_->field().one()) + red);
    }
    stats_.basis_size = out.size();
    return out;
  }

  RingPtr<F> ring_;
  GroebnerOptions opts_;
  Reducer<F> reducer_;
  std::vector<BasisEntry<F>> basis_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
  bool unit_found_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace idealis::detail

/// Reduced Groebner basis of `ideal` with respect to `order`. The result
/// carries the basis in a ring with the requested order; the generator list
/// is kept (re-expressed in that ring).
template <CoefficientField F>
Ideal<F> groebner_basis(const Ideal<F>& ideal, MonomialOrder order, const GroebnerOptions& opts = {}) {
  auto ring = same_ring(ideal.ring(), ideal.ring()->with_order(order)) ? ideal.ring() : ideal.ring()->with_order(order);
  std::vector<Polynomial<F>> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ring));
  if (opts.degree_bound && !Ideal<F>(ring, gens).is_homogeneous())
    throw Error("degree-truncated Groebner bases need homogeneous generators");
  detail::BuchbergerEngine<F> engine(ring, opts);
  auto elements = engine.run(gens);
  Ideal<F> result(ring, std::move(gens));
  return result.with_basis({ring, std::move(elements), opts.degree_bound, engine.stats()});
}

template <CoefficientField F>
Ideal<F> groebner_basis(const Ideal<F>& ideal, const GroebnerOptions& opts = {}) {
  return groebner_basis(ideal, ideal.ring()->order(), opts);
}

/// Complete remainder of f on division by the cached basis.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const Ideal<F>& ideal) {
  const auto& b = ideal.basis();
  Polynomial<F> g = f.in_ring(b.ring);
  std::vector<detail::BasisEntry<F>> entries;
  entries.reserve(b.elements.size());
  for (const auto& e : b.elements) {
    entries.push_back({e, e.leading_monomial(), e.leading_monomial().signature(), 0, false});
  }
  detail::Reducer<F> reducer(b.ring);
  unsigned sugar = 0;
  return reducer.reduce(g, entries, sugar).in_ring(f.ring());
}

}  // namespace idealis
