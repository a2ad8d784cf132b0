#pragma once

#include <array>
#include <string>

#include "idealis/algebra/text_format.hpp"

namespace idealis {

/// Homogeneous triple scaled so that its first nonzero entry is 1. Used both
/// for points (X:Y:Z) and for linear forms aX+bY+cZ.
template <CoefficientField F>
struct Triple {
  using Element = typename F::Element;
  std::array<Element, 3> c;

  Triple(Element a, Element b, Element d) : c{std::move(a), std::move(b), std::move(d)} { normalize(); }

  const Element& operator[](std::size_t i) const { return c[i]; }

  /// Index of the first nonzero coordinate.
  std::size_t pivot() const {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!c[i].is_zero()) return i;
    }
    return 3;
  }

  friend bool operator==(const Triple& a, const Triple& b) { return a.c == b.c; }

  friend bool operator<(const Triple& a, const Triple& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (structural_less(a.c[i], b.c[i])) return true;
      if (structural_less(b.c[i], a.c[i])) return false;
    }
    return false;
  }

  std::size_t hash() const { return (c[0].hash() * 1000003u) ^ (c[1].hash() * 8191u) ^ c[2].hash(); }

  std::string to_string() const {
    return "(" + element_to_text<F>(c[0]) + ":" + element_to_text<F>(c[1]) + ":" + element_to_text<F>(c[2]) + ")";
  }

 private:
  void normalize() {
    std::size_t p = pivot();
    if (p == 3) throw Error("homogeneous triple must not be zero");
    if (c[p].is_one()) return;
    Element inv = c[p].inverse();
    for (auto& v : c) v = v * inv;
  }
};

template <CoefficientField F>
using ProjectivePoint = Triple<F>;
template <CoefficientField F>
using LinearForm = Triple<F>;

template <CoefficientField F>
struct TripleHash {
  std::size_t operator()(const Triple<F>& t) const { return t.hash(); }
};

/// Cross product; for two lines it is their intersection point, for two
/// points the line through them.
template <CoefficientField F>
std::array<typename F::Element, 3> cross(const Triple<F>& a, const Triple<F>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <CoefficientField F>
typename F::Element dot(const Triple<F>& a, const Triple<F>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <CoefficientField F>
Triple<F> make_triple(const F& field, long a, long b, long c) {
  return Triple<F>(from_int(field, a), from_int(field, b), from_int(field, c));
}

/// a*x + b*y + c*z in K[x, y, z].
template <CoefficientField F>
Polynomial<F> linear_polynomial(const Triple<F>& form, const RingPtr<F>& ring) {
  Polynomial<F> out(ring);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!form[i].is_zero()) out += Polynomial<F>::variable(ring, i).scaled(form[i]);
  }
  return out;
}

template <CoefficientField F>
std::vector<typename F::Element> coordinates(const Triple<F>& p) {
  return {p[0], p[1], p[2]};
}

}  // namespace idealis
