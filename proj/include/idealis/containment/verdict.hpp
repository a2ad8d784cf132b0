#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "idealis/algebra/text_format.hpp"
#include "idealis/containment/fat_points.hpp"
#include "idealis/invariant/curves.hpp"

namespace idealis {

/// Short fingerprint of a polynomial: term count, leading term, FNV-1a hash
/// of the canonical text.
struct PolynomialDigest {
  std::size_t terms = 0;
  int degree = -1;
  std::string leading_term;
  std::string hash;
};

template <CoefficientField F>
PolynomialDigest digest(const Polynomial<F>& f) {
  PolynomialDigest d;
  d.terms = f.size();
  d.degree = f.degree();
  if (f.is_zero()) return d;
  d.leading_term = to_string(Polynomial<F>::term(f.ring(), f.leading_monomial(), f.leading_coefficient()));
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_string(f)) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  d.hash = buf;
  return d;
}

enum class Outcome { Holds, Fails, Undecided };

std::string outcome_name(Outcome o);

struct ContainmentVerdict {
  unsigned m = 0;
  unsigned r = 0;
  Outcome outcome = Outcome::Undecided;
  std::string field;
  std::size_t points = 0;
  std::size_t symbolic_generators = 0;
  std::vector<int> symbolic_degrees;
  std::size_t power_generators = 0;
  std::size_t basis_size = 0;
  // Certificate for Fails: first generator with a nonzero normal form.
  std::optional<std::size_t> failing_generator;
  PolynomialDigest normal_form;
  std::string undecided_reason;
  GroebnerStats stats;
  double seconds = 0;
  bool holds() const { return outcome == Outcome::Holds; }
};

namespace detail {

template <CoefficientField F>
Ideal<F> power_basis(const Ideal<F>& ideal, unsigned r, unsigned top, const GroebnerOptions& opts) {
  GroebnerOptions o = opts;
  o.degree_bound = top;
  return groebner_basis(ideal_power(ideal, r), o);
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// I^(m) in I^r for the ideal I of `pts`: every generator of I^(m) reduces to
/// zero modulo a basis of I^r truncated at the largest generator degree.
template <CoefficientField F>
ContainmentVerdict check_containment(const std::vector<ProjectivePoint<F>>& pts, const F& field, unsigned m, unsigned r,
                                     std::optional<FatPointStrategy> strategy = std::nullopt,
                                     const GroebnerOptions& opts = {}, Execution exec = Execution::Parallel) {
  const auto t0 = std::chrono::steady_clock::now();
  ContainmentVerdict v;
  v.m = m;
  v.r = r;
  v.field = field.tag();
  v.points = pts.size();
  auto ring = plane_ring(field);
  try {
    auto ideal = symbolic_power(pts, ring, 1, strategy, opts, exec);
    auto sym = symbolic_power(pts, ring, m, strategy, opts, exec);
    v.symbolic_generators = sym.generators().size();
    for (const auto& g : sym.generators()) v.symbolic_degrees.push_back(g.degree());
    v.power_generators = ideal_power(ideal, r).generators().size();
    auto gb = detail::power_basis(ideal, r, static_cast<unsigned>(std::max(0, sym.max_generator_degree())), opts);
    v.basis_size = gb.basis().elements.size();
    v.stats = gb.basis().stats;
    v.outcome = Outcome::Holds;
    for (std::size_t k = 0; k < sym.generators().size(); ++k) {
      auto nf = normal_form(sym.generators()[k], gb);
      if (!nf.is_zero()) {
        v.outcome = Outcome::Fails;
        v.failing_generator = k;
        v.normal_form = digest(nf);
        break;
      }
    }
  } catch (const ResourceLimit& e) {
    v.outcome = Outcome::Undecided;
    v.undecided_reason = e.what();
    v.stats = e.stats();
  }
  v.seconds = detail::seconds_since(t0);
  return v;
}

struct WitnessVerdict {
  unsigned m = 0;
  unsigned r = 0;
  int degree = -1;
  std::size_t points = 0;
  // (a) pointwise order of vanishing
  bool in_symbolic = false;
  unsigned min_order = 0;
  std::vector<std::size_t> low_order_points;
  // (b) membership in I^r, unset when not run or undecided
  std::optional<bool> in_power;
  PolynomialDigest normal_form;
  std::string undecided_reason;
  GroebnerStats stats;
  double seconds_pointwise = 0;
  double seconds_membership = 0;
};

/// (a) f vanishes to order >= m at every point, by evaluating derivatives;
/// (b) f in I^r, by a normal form against a truncated basis of I^r.
template <CoefficientField F>
WitnessVerdict witness_check(const Polynomial<F>& f, const std::vector<ProjectivePoint<F>>& pts, unsigned m, unsigned r,
                             bool run_membership = true, std::optional<FatPointStrategy> strategy = std::nullopt,
                             const GroebnerOptions& opts = {}, Execution exec = Execution::Parallel) {
  using Element = typename F::Element;
  if (!f.is_homogeneous()) throw Error("witness must be homogeneous");
  WitnessVerdict w;
  w.m = m;
  w.r = r;
  w.degree = f.degree();
  w.points = pts.size();
  auto t0 = std::chrono::steady_clock::now();
  std::vector<unsigned> orders(pts.size(), 0);
  {
    const unsigned cap = m + 1;
    std::vector<VanishingTester<F>> testers;
    for (unsigned k = 1; k <= cap; ++k) testers.emplace_back(f, k);
    const auto n = static_cast<std::ptrdiff_t>(pts.size());
    const bool parallel = exec == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t is = 0; is < n; ++is) {
      auto i = static_cast<std::size_t>(is);
      std::array<Element, 3> xyz{pts[i][0], pts[i][1], pts[i][2]};
      unsigned o = 0;
      while (o < cap && testers[o](std::span<const Element>(xyz))) ++o;
      orders[i] = o;
    }
  }
  w.min_order = pts.empty() ? 0 : *std::min_element(orders.begin(), orders.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (orders[i] < m) w.low_order_points.push_back(i);
  }
  w.in_symbolic = w.low_order_points.empty();
  w.seconds_pointwise = detail::seconds_since(t0);
  if (!run_membership) return w;
  t0 = std::chrono::steady_clock::now();
  try {
    auto ideal = symbolic_power(pts, f.ring(), 1, strategy, opts, exec);
    auto gb = detail::power_basis(ideal, r, static_cast<unsigned>(f.degree()), opts);
    w.stats = gb.basis().stats;
    auto nf = normal_form(f, gb);
    w.in_power = nf.is_zero();
    w.normal_form = digest(nf);
  } catch (const ResourceLimit& e) {
    w.undecided_reason = e.what();
    w.stats = e.stats();
  }
  w.seconds_membership = detail::seconds_since(t0);
  return w;
}

/// A313: the 21 lines of B21 times Gamma (degree 33). B21: the 21 lines
/// times Delta (degree 31).
template <CoefficientField F>
Polynomial<F> build_witness(std::string_view name, const F& field, Model model = Model::Sqrt3) {
  const std::string n(name);
  CurveName curve;
  if (n == "A313")
    curve = CurveName::Gamma;
  else if (n == "B21")
    curve = CurveName::Delta;
  else
    throw Error("witnesses exist for A313 and B21 only, not " + n);
  auto lines = product_of_forms(build_named("B21", model, field));
  Polynomial<F> c(lines.ring());
  if (model == Model::Sqrt3) {
    c = interpolate_named_curve(curve, field).front().polynomial;
  } else {
    auto k = interpolate_rational_model(curve, field);
    if (k.empty()) throw EmptyKernel("no curve through the imposed points");
    if (k.size() > 1) throw Error("curve is not unique over " + field.tag());
    c = k.front();
  }
  return lines * c.in_ring(lines.ring());
}

/// The point set a containment instance refers to: all intersection points.
template <CoefficientField F>
std::vector<ProjectivePoint<F>> instance_points(std::string_view name, const F& field, Model model = Model::Sqrt3) {
  return intersection_points(build_named(name, model, field)).points();
}

}  // namespace idealis
