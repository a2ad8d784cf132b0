#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealis/algebra/polynomial.hpp"

namespace idealis {

/// Counters collected by a Groebner basis run.
struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t product_criterion = 0;
  std::size_t chain_criterion = 0;
  std::size_t degree_dropped = 0;
  std::size_t max_queue = 0;
  std::size_t basis_size = 0;
  std::size_t stored_terms = 0;
  unsigned max_sugar = 0;
};

/// The computation exceeded a configured cap. Not a crash: callers retry
/// modularly, with another order or with larger caps.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, GroebnerStats stats) : Error(what), stats_(stats) {}
  const GroebnerStats& stats() const { return stats_; }

 private:
  GroebnerStats stats_;
};

/// Raised when the cancellation flag is observed mid-run.
class Cancelled : public ResourceLimit {
 public:
  explicit Cancelled(GroebnerStats stats) : ResourceLimit("computation cancelled", stats) {}
};

struct GroebnerOptions {
  std::size_t max_pairs = 5'000'000;
  std::size_t max_terms = 500'000'000;
  /// For homogeneous input: only pairs of degree <= bound are processed and
  /// the result is a truncated basis, exact for normal forms of homogeneous
  /// polynomials up to that degree.
  std::optional<unsigned> degree_bound;
  std::optional<std::chrono::milliseconds> time_budget;
  const std::atomic<bool>* cancel = nullptr;
  std::function<void(const GroebnerStats&)> progress;
  std::size_t progress_interval = 500;
};

/// Generator list with an optional cached reduced Groebner basis.
template <CoefficientField F>
class Ideal {
 public:
  struct Basis {
    RingPtr<F> ring;  // generator variables with the basis order
    std::vector<Polynomial<F>> elements;
    std::optional<unsigned> degree_bound;
    GroebnerStats stats;
  };

  explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch();
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }

  bool has_basis() const { return basis_ != nullptr; }
  const Basis& basis() const {
    if (!basis_) throw MissingBasis();
    return *basis_;
  }
  /// True when the cached basis decides membership of degree-d homogeneous
  /// polynomials.
  bool basis_covers_degree(int d) const {
    return basis_ && (!basis_->degree_bound || d <= static_cast<int>(*basis_->degree_bound));
  }

  bool is_homogeneous() const {
    for (const auto& g : gens_) {
      if (!g.is_homogeneous()) return false;
    }
    return true;
  }

  bool is_unit() const { return basis_ && basis_->elements.size() == 1 && basis_->elements[0].is_constant(); }

  Ideal with_basis(Basis b) const {
    Ideal r = *this;
    r.basis_ = std::make_shared<const Basis>(std::move(b));
    return r;
  }

  int max_generator_degree() const {
    int d = -1;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<const Basis> basis_;
};

}  // namespace idealis
