#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idealis/algebra/field.hpp"
#include "idealis/algebra/monomial_order.hpp"

namespace idealis {

/// Polynomial ring descriptor: coefficient field, ordered variable names and
/// a monomial order. The variable set is fixed; extensions produce new rings.
template <CoefficientField F>
class Ring {
 public:
  Ring(F field, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex())
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
    if (vars_.empty() || vars_.size() > kMaxVariables) throw Error("ring needs between 1 and 8 variables");
    if (order_.kind == MonomialOrder::Kind::Block && order_.block_size > vars_.size())
      throw Error("block larger than the variable set");
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, vars_.size()); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  std::shared_ptr<const Ring> with_order(MonomialOrder order) const {
    return std::make_shared<const Ring>(field_, vars_, order);
  }

  /// New ring with `names` prepended to the variable list.
  std::shared_ptr<const Ring> extend_front(const std::vector<std::string>& names, MonomialOrder order) const {
    std::vector<std::string> vars = names;
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    return std::make_shared<const Ring>(field_, std::move(vars), order);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  F field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex()) {
  return std::make_shared<const Ring<F>>(std::move(field), std::move(vars), order);
}

/// K[x, y, z] with degrevlex.
template <CoefficientField F>
RingPtr<F> plane_ring(F field) {
  return make_ring(std::move(field), {"x", "y", "z"});
}

template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || *a == *b;
}

}  // namespace idealis
