#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "idealis/algebra/ring.hpp"

namespace idealis {

/// Multivariate polynomial over a ring descriptor. Terms are kept strictly
/// descending in the ring's monomial order with no zero coefficients; the
/// zero polynomial has no terms.
template <CoefficientField F>
class Polynomial {
 public:
  using Element = typename F::Element;

  struct Term {
    Monomial mono;
    Element coeff;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(RingPtr<F> ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial constant(RingPtr<F> ring, Element c) {
    std::vector<Term> t;
    t.push_back({Monomial(), std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
  }
  static Polynomial constant(RingPtr<F> ring, long c) {
    Element e = from_int(ring->field(), c);
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->nvars()) throw Error("variable index out of range");
    Element one = ring->field().one();
    return term(std::move(ring), Monomial::variable(index), std::move(one));
  }
  static Polynomial term(RingPtr<F> ring, Monomial m, Element c) {
    std::vector<Term> t;
    t.push_back({m, std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Element& leading_coefficient() const { return terms_.front().coeff; }

  /// Maximum total degree; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = add(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = add(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
    return Polynomial(a.ring_, std::move(out));
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
  }

  Polynomial scaled(const Element& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  /// c * m * this; order is preserved because the order is multiplicative.
  Polynomial mul_term(const Monomial& m, const Element& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  /// Scales so the leading coefficient is one.
  Polynomial monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  /// Formal partial derivative with respect to variable `v`.
  Polynomial derivative(std::size_t v) const {
    if (v >= ring_->nvars()) throw Error("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono[v];
      if (e == 0) continue;
      Element c = t.coeff * from_int(field(), static_cast<long>(e));
      if (c.is_zero()) continue;
      out.push_back({t.mono.with_exponent(v, e - 1), std::move(c)});
    }
    return Polynomial(ring_, std::move(out));
  }

  /// Exact substitution of a point.
  Element evaluate(std::span<const Element> point) const {
    if (point.size() != ring_->nvars()) throw Error("point has wrong number of coordinates");
    std::vector<std::vector<Element>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(field().one());
    Element sum = field().zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        unsigned e = t.mono[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
        v *= pw[e];
      }
      sum += v;
    }
    return sum;
  }

  /// Substitutes polynomial `images[i]` (all in `target`) for variable i.
  Polynomial compose(const RingPtr<F>& target, std::span<const Polynomial> images) const {
    if (images.size() != ring_->nvars()) throw Error("wrong number of substitution images");
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(constant(target, target->field().one()));
    Polynomial sum(target);
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      Polynomial v = constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i) {
        unsigned e = t.mono[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
        v = v * pw[e];
      }
      for (auto& term : v.terms_) acc.push_back(std::move(term));
    }
    return Polynomial(target, std::move(acc));
  }

  /// Re-expresses the polynomial in `target`, sending variable i to variable
  /// var_map[i]. Used for order changes and ring extensions.
  Polynomial rebased(const RingPtr<F>& target, std::span<const std::size_t> var_map) const {
    if (var_map.size() != ring_->nvars()) throw Error("variable map has wrong size");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      std::array<unsigned, kMaxVariables> e{};
      for (std::size_t i = 0; i < var_map.size(); ++i) e[var_map[i]] += t.mono[i];
      out.push_back({Monomial(std::span<const unsigned>(e.data(), target->nvars())), t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  /// Same variables, possibly a different order.
  Polynomial in_ring(const RingPtr<F>& target) const {
    if (same_ring(ring_, target)) return *this;
    if (target->variables() != ring_->variables() || !(target->field() == field())) throw RingMismatch();
    Polynomial r(target, terms_);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }

  /// Re-establishes the canonical term list (idempotent).
  void canonicalize() {
    const auto& ring = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Term cur = std::move(terms_[r]);
      std::size_t s = r + 1;
      while (s < terms_.size() && terms_[s].mono == cur.mono) {
        cur.coeff += terms_[s].coeff;
        ++s;
      }
      if (!cur.coeff.is_zero()) terms_[w++] = std::move(cur);
      r = s;
    }
    terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(w), terms_.end());
  }

  /// Builds from terms already strictly sorted with nonzero coefficients.
  static Polynomial from_sorted(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  static void check_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  static Polynomial add(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_ring(a, b);
    const auto& ring = *a.ring_;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : (j == b.size() ? 1 : ring.compare(a.terms_[i].mono, b.terms_[j].mono));
      if (c > 0) {
        out.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const Term& t = b.terms_[j++];
        out.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        Element v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!v.is_zero()) out.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return from_sorted(a.ring_, std::move(out));
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

/// Product of a list of polynomials (1 for the empty list).
template <CoefficientField F>
Polynomial<F> product(const RingPtr<F>& ring, std::span<const Polynomial<F>> factors) {
  Polynomial<F> r = Polynomial<F>::constant(ring, ring->field().one());
  for (const auto& f : factors) r = r * f;
  return r;
}

/// Divided (Hasse) derivative D^alpha f = sum c * prod C(e_i, alpha_i) x^(e - alpha).
/// Coincides with d^alpha f / alpha! in characteristic zero and stays
/// meaningful in positive characteristic.
template <CoefficientField F>
Polynomial<F> hasse_derivative(const Polynomial<F>& f, std::span<const unsigned> alpha) {
  std::vector<typename Polynomial<F>::Term> out;
  for (const auto& t : f.terms()) {
    mpz_class scale = 1;
    Monomial m = t.mono;
    bool vanishes = false;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (t.mono[i] < alpha[i]) {
        vanishes = true;
        break;
      }
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), t.mono[i], alpha[i]);
      scale *= b;
      m = m.with_exponent(i, t.mono[i] - alpha[i]);
    }
    if (vanishes) continue;
    out.push_back({m, t.coeff * f.field().from_integer(scale)});
  }
  return Polynomial<F>(f.ring(), std::move(out));
}

}  // namespace idealis
