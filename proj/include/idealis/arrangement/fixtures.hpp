#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "idealis/arrangement/group.hpp"

namespace idealis {

namespace fixtures {

using IntTriple = std::array<int, 3>;

struct TablePoint {
  int x, y, z;
  unsigned multiplicity;
};

/// Point whose coordinates are a + b*u, u = sqrt(3)/2, with the orbit length
/// the orbit table lists for it.
struct SqrtTriple {
  int coords[3][2];
  unsigned orbit_size;
};

const std::vector<IntTriple>& table1_lines();
const std::vector<std::size_t>& b21_table1_indices();
const std::vector<TablePoint>& table2_points();
const std::vector<SqrtTriple>& orbit_table_representatives();

}  // namespace fixtures

enum class Model { Sqrt3, RationalTable1 };

Model parse_model(std::string_view text);
std::string model_name(Model m);

/// Fixture names accepted by build_named.
inline const std::vector<std::string>& named_arrangements() {
  static const std::vector<std::string> names{"A313",          "A312",          "B21",      "initial10_A313",
                                              "initial10_A312", "dualHesse",     "triangle"};
  return names;
}

/// u = sqrt(3)/2 in the field, or UnsupportedFieldForModel.
template <CoefficientField F>
typename F::Element half_sqrt3(const F& field) {
  if (field.characteristic() == 3) throw UnsupportedFieldForModel("the sqrt(3) model needs characteristic != 3");
  auto s = field.sqrt_of(3);
  if (!s) throw UnsupportedFieldForModel("field " + field.tag() + " does not contain sqrt(3)");
  return *s * from_int(field, 2).inverse();
}

/// A (rotation by 60 degrees about (0:0:1)) and B (reflection x -> -x).
template <CoefficientField F>
std::array<Matrix3<F>, 2> dihedral_generators(const F& field) {
  auto u = half_sqrt3(field);
  auto z = field.zero();
  auto o = field.one();
  auto h = from_int(field, 2).inverse();
  Matrix3<F> a{{h, -u, z, u, h, z, z, z, o}};
  Matrix3<F> b{{-o, z, z, z, o, z, z, z, o}};
  return {a, b};
}

template <CoefficientField F>
MatrixGroup<F> dihedral_group(const F& field) {
  auto [a, b] = dihedral_generators(field);
  return group_generate(field, std::vector<Matrix3<F>>{a, b});
}

namespace detail {

/// Image of the line l under the point map M: the form l * M^-1, with M^-1
/// passed in directly.
template <CoefficientField F>
LinearForm<F> transform_line(const LinearForm<F>& l, const Matrix3<F>& inverse) {
  return LinearForm<F>(l[0] * inverse(0, 0) + l[1] * inverse(1, 0) + l[2] * inverse(2, 0),
                       l[0] * inverse(0, 1) + l[1] * inverse(1, 1) + l[2] * inverse(2, 1),
                       l[0] * inverse(0, 2) + l[1] * inverse(1, 2) + l[2] * inverse(2, 2));
}

/// Lines x +- a*u*z and y +- b*z.
template <CoefficientField F>
std::vector<LinearForm<F>> initial_lines(const F& field, std::initializer_list<int> as,
                                         std::initializer_list<int> bs) {
  auto u = half_sqrt3(field);
  auto zero = field.zero();
  auto one = field.one();
  std::vector<LinearForm<F>> out;
  for (int a : as) {
    auto c = from_int(field, a) * u;
    out.emplace_back(one, zero, -c);
    if (a != 0) out.emplace_back(one, zero, c);
  }
  for (int b : bs) {
    auto c = from_int(field, b);
    out.emplace_back(zero, one, -c);
    if (b != 0) out.emplace_back(zero, one, c);
  }
  return out;
}

/// The lines together with their images under A and A^2.
template <CoefficientField F>
std::vector<LinearForm<F>> rotate_orbit(const F& field, const std::vector<LinearForm<F>>& lines) {
  auto [a, b] = dihedral_generators(field);
  (void)b;
  Matrix3<F> a_inv = a * a * a * a * a;  // A has order 6
  Matrix3<F> a2_inv = a_inv * a_inv;
  std::vector<LinearForm<F>> out = lines;
  for (const auto& l : lines) out.push_back(transform_line(l, a_inv));
  for (const auto& l : lines) out.push_back(transform_line(l, a2_inv));
  return out;
}

template <CoefficientField F>
typename F::Element primitive_cube_root(const F& field) {
  auto s = field.sqrt_of(-3);
  if (!s || field.characteristic() == 3)
    throw UnsupportedFieldForModel("field " + field.tag() + " has no primitive cube root of unity");
  auto w1 = (*s - field.one()) * from_int(field, 2).inverse();
  auto w2 = w1 * w1;
  return structural_less(w2, w1) ? w2 : w1;
}

}  // namespace detail

template <CoefficientField F>
Arrangement<F> build_named(std::string_view name, Model model, const F& field) {
  std::vector<LinearForm<F>> lines;
  const std::string n(name);
  auto zero = field.zero();
  auto one = field.one();
  if (model == Model::RationalTable1) {
    const auto& t1 = fixtures::table1_lines();
    auto form = [&](const fixtures::IntTriple& t) { return make_triple(field, t[0], t[1], t[2]); };
    if (n == "A313") {
      for (const auto& t : t1) lines.push_back(form(t));
    } else if (n == "B21") {
      for (std::size_t i : fixtures::b21_table1_indices()) lines.push_back(form(t1[i]));
    } else if (n == "triangle") {
      return build_named(name, Model::Sqrt3, field);
    } else {
      throw UnsupportedFieldForModel("the rational table model defines only A313 and B21, not " + n);
    }
    return Arrangement<F>(field, std::move(lines), n);
  }
  if (n == "A313" || n == "initial10_A313" || n == "A312" || n == "initial10_A312") {
    const bool a313 = n.find("A313") != std::string::npos;
    lines = a313 ? detail::initial_lines(field, {0, 1, 2, 4}, {0, 1}) : detail::initial_lines(field, {0, 2, 4, 6}, {0, 1});
    if (n.rfind("initial10", 0) == 0) return Arrangement<F>(field, std::move(lines), n);
    lines = detail::rotate_orbit(field, lines);
    lines.emplace_back(zero, zero, one);
  } else if (n == "B21") {
    lines = detail::rotate_orbit(field, detail::initial_lines(field, {1, 4}, {0, 1}));
  } else if (n == "dualHesse") {
    auto w = detail::primitive_cube_root(field);
    std::vector<typename F::Element> powers{one, w, w * w};
    for (const auto& p : powers) lines.emplace_back(one, -p, zero);
    for (const auto& p : powers) lines.emplace_back(zero, one, -p);
    for (const auto& p : powers) lines.emplace_back(-p, zero, one);
  } else if (n == "triangle") {
    lines = {LinearForm<F>(one, zero, zero), LinearForm<F>(zero, one, zero), LinearForm<F>(zero, zero, one)};
  } else {
    throw Error("unknown arrangement '" + n + "'");
  }
  return Arrangement<F>(field, std::move(lines), n);
}

/// The orbit-table representative points in the sqrt(3) model.
template <CoefficientField F>
std::vector<std::pair<ProjectivePoint<F>, unsigned>> orbit_table_points(const F& field) {
  auto u = half_sqrt3(field);
  std::vector<std::pair<ProjectivePoint<F>, unsigned>> out;
  for (const auto& r : fixtures::orbit_table_representatives()) {
    std::array<typename F::Element, 3> c{field.zero(), field.zero(), field.zero()};
    for (std::size_t i = 0; i < 3; ++i) c[i] = from_int(field, r.coords[i][0]) + from_int(field, r.coords[i][1]) * u;
    out.emplace_back(ProjectivePoint<F>(c[0], c[1], c[2]), r.orbit_size);
  }
  return out;
}

/// The orbit removed when passing from A313 to B21, represented by (9:2u:4u).
template <CoefficientField F>
ProjectivePoint<F> distinguished_orbit_point(const F& field) {
  auto u = half_sqrt3(field);
  return ProjectivePoint<F>(from_int(field, 9), from_int(field, 2) * u, from_int(field, 4) * u);
}

inline std::string multiplicity_class(unsigned m) {
  switch (m) {
    case 2: return "double";
    case 3: return "triple";
    case 4: return "quadruple";
    case 5: return "quintuple";
    case 6: return "sextuple";
    case 7: return "septuple";
    case 8: return "octuple";
    default: return std::to_string(m) + "-fold";
  }
}

struct RealizationReport {
  std::size_t table_points = 0;
  std::size_t computed_points = 0;
  std::size_t matched = 0;
  std::vector<std::string> missing;     // listed in the table, not an intersection point
  std::vector<std::string> unlisted;    // intersection points absent from the table
  std::vector<std::string> class_mismatches;
  std::map<unsigned, std::size_t> t_vector;
  bool t_vector_matches = false;

  bool ok() const {
    return missing.empty() && unlisted.empty() && class_mismatches.empty() && t_vector_matches &&
           matched == table_points && matched == computed_points;
  }
};

/// Checks the rational line table against the point table.
template <CoefficientField F>
RealizationReport verify_realization(const F& field, const std::vector<fixtures::IntTriple>& lines,
                                     const std::vector<fixtures::TablePoint>& table,
                                     const std::map<unsigned, std::size_t>& expected_t) {
  std::vector<LinearForm<F>> forms;
  for (const auto& l : lines) forms.push_back(make_triple(field, l[0], l[1], l[2]));
  Arrangement<F> arr(field, std::move(forms), "table");
  auto ps = intersection_points(arr);
  RealizationReport rep;
  rep.table_points = table.size();
  rep.computed_points = ps.size();
  std::vector<bool> seen(ps.size(), false);
  for (const auto& t : table) {
    auto p = make_triple(field, t.x, t.y, t.z);
    std::string label = "(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) + ")";
    auto idx = ps.find(p);
    if (!idx) {
      rep.missing.push_back(label);
      continue;
    }
    if (seen[*idx]) {
      rep.class_mismatches.push_back(label + " listed twice");
      continue;
    }
    seen[*idx] = true;
    ++rep.matched;
    if (ps[*idx].multiplicity != t.multiplicity)
      rep.class_mismatches.push_back(label + " listed " + multiplicity_class(t.multiplicity) + ", lies on " +
                                     std::to_string(ps[*idx].multiplicity) + " lines");
  }
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (!seen[k]) rep.unlisted.push_back(ps[k].point.to_string());
  }
  rep.t_vector = t_vector(ps);
  rep.t_vector_matches = rep.t_vector == expected_t;
  return rep;
}

/// t-vector shared by A313 and A312.
inline const std::map<unsigned, std::size_t>& expected_t_a31() {
  static const std::map<unsigned, std::size_t> t{{2, 54}, {3, 42}, {4, 21}, {5, 6}, {6, 1}, {8, 3}};
  return t;
}

inline const std::map<unsigned, std::size_t>& expected_t_b21() {
  static const std::map<unsigned, std::size_t> t{{2, 72}, {3, 40}, {4, 3}};
  return t;
}

}  // namespace idealis
