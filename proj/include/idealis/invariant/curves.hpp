#pragma once

#include <string>
#include <string_view>

#include "idealis/arrangement/fixtures.hpp"
#include "idealis/invariant/interpolation.hpp"
#include "idealis/invariant/singular.hpp"

namespace idealis {

/// Gamma: degree 12, double along the orbit of (9:2u:4u) and through the 72
/// double points of B21. Delta: degree 10 through the same 72 points.
enum class CurveName { Gamma, Delta };

CurveName parse_curve_name(std::string_view text);
std::string curve_name(CurveName c);
unsigned curve_degree(CurveName c);

/// Expected coefficients in the invariant basis, and the exponent used to
/// fix the common scalar.
const ReferenceCoefficients& reference_coefficients(CurveName c);
std::array<unsigned, 3> reference_anchor(CurveName c);

template <CoefficientField F>
struct CurveSetup {
  unsigned degree;
  MatrixGroup<F> group;
  std::vector<ProjectivePoint<F>> simple;   // orbit representatives
  std::vector<ProjectivePoint<F>> doubles;  // orbit representatives
};

/// Conditions in the sqrt(3) model: orbit representatives of the B21 double
/// points, plus the removed orbit for Gamma.
template <CoefficientField F>
CurveSetup<F> curve_setup(CurveName c, const F& field) {
  auto group = dihedral_group(field);
  auto b21 = build_named("B21", Model::Sqrt3, field);
  auto dbl = intersection_points(b21).with_multiplicity(2);
  std::vector<ProjectivePoint<F>> simple;
  for (const auto& o : orbits(group, dbl)) simple.push_back(o.representative);
  std::vector<ProjectivePoint<F>> doubles;
  if (c == CurveName::Gamma) doubles.push_back(distinguished_orbit_point(field));
  return {curve_degree(c), std::move(group), std::move(simple), std::move(doubles)};
}

template <CoefficientField F>
std::vector<InvariantCurve<F>> interpolate_named_curve(CurveName c, const F& field,
                                                       Execution exec = Execution::Parallel) {
  auto setup = curve_setup(c, field);
  auto basis = InvariantBasis<F>::standard(field, setup.degree);
  return interpolate_curve(basis, setup.simple, setup.doubles, exec);
}

template <CoefficientField F>
struct OrbitVanishing {
  ProjectivePoint<F> representative;
  unsigned imposed;
  std::size_t orbit_size;
  unsigned min_order;  // smallest vanishing order over the whole orbit
};

/// Vanishing orders along the full orbit of every imposed representative.
template <CoefficientField F>
std::vector<OrbitVanishing<F>> verify_orbit_vanishing(const InvariantCurve<F>& curve, const MatrixGroup<F>& group) {
  using Element = typename F::Element;
  std::vector<OrbitVanishing<F>> out;
  for (const auto& io : curve.imposed) {
    auto orbit = orbit_of(group, io.representative);
    unsigned lowest = io.order + 1;
    for (const auto& q : orbit) {
      std::array<Element, 3> xyz{q[0], q[1], q[2]};
      lowest = std::min(lowest, vanishing_order(curve.polynomial, std::span<const Element>(xyz), io.order + 1));
    }
    out.push_back({io.representative, io.order, orbit.size(), lowest});
  }
  return out;
}

/// The same curve rebuilt from the rational line table with the full
/// monomial basis: through the 72 B21 double points and, for Gamma, double
/// at the 12 points of A313 missing from B21.
template <CoefficientField F>
std::vector<Polynomial<F>> interpolate_rational_model(CurveName c, const F& field,
                                                      Execution exec = Execution::Parallel) {
  auto a313 = intersection_points(build_named("A313", Model::RationalTable1, field), exec);
  auto b21 = intersection_points(build_named("B21", Model::RationalTable1, field), exec);
  std::vector<ProjectivePoint<F>> pts;
  std::vector<unsigned> mults;
  for (const auto& e : b21.with_multiplicity(2).entries()) {
    pts.push_back(e.point);
    mults.push_back(1);
  }
  if (c == CurveName::Gamma) {
    for (const auto& e : a313.entries()) {
      if (b21.contains(e.point)) continue;
      pts.push_back(e.point);
      mults.push_back(2);
    }
  }
  return forms_vanishing(plane_ring(field), curve_degree(c), std::span<const ProjectivePoint<F>>(pts),
                         std::span<const unsigned>(mults), exec);
}

/// Points of A313 (rational model) not on B21's point set.
template <CoefficientField F>
std::vector<ProjectivePoint<F>> removed_points_rational_model(const F& field) {
  auto a313 = intersection_points(build_named("A313", Model::RationalTable1, field));
  auto b21 = intersection_points(build_named("B21", Model::RationalTable1, field));
  std::vector<ProjectivePoint<F>> out;
  for (const auto& e : a313.entries()) {
    if (!b21.contains(e.point)) out.push_back(e.point);
  }
  return out;
}

}  // namespace idealis
