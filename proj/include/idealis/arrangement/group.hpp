#pragma once

#include <array>
#include <deque>
#include <unordered_set>
#include <vector>

#include "idealis/arrangement/arrangement.hpp"

namespace idealis {

/// 3x3 matrix acting on column vectors of point coordinates.
template <CoefficientField F>
struct Matrix3 {
  using Element = typename F::Element;
  std::array<Element, 9> a;

  const Element& operator()(std::size_t r, std::size_t c) const { return a[3 * r + c]; }

  static Matrix3 identity(const F& field) {
    auto z = field.zero();
    auto o = field.one();
    return {{o, z, z, z, o, z, z, z, o}};
  }

  friend Matrix3 operator*(const Matrix3& x, const Matrix3& y) {
    Matrix3 out = x;
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        Element s = x(r, 0) * y(0, c);
        s += x(r, 1) * y(1, c);
        s += x(r, 2) * y(2, c);
        out.a[3 * r + c] = std::move(s);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix3& x, const Matrix3& y) { return x.a == y.a; }

  Element determinant() const {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  Element trace() const { return a[0] + a[4] + a[8]; }

  std::size_t hash() const {
    std::size_t h = 0;
    for (const auto& e : a) h = h * 1000003u ^ e.hash();
    return h;
  }

  /// M * p as a projective point.
  ProjectivePoint<F> apply(const ProjectivePoint<F>& p) const {
    const auto& m = *this;
    return ProjectivePoint<F>(m(0, 0) * p[0] + m(0, 1) * p[1] + m(0, 2) * p[2],
                              m(1, 0) * p[0] + m(1, 1) * p[1] + m(1, 2) * p[2],
                              m(2, 0) * p[0] + m(2, 1) * p[1] + m(2, 2) * p[2]);
  }

  /// f(M (x, y, z)^T).
  Polynomial<F> pull_back(const Polynomial<F>& f) const {
    const auto& ring = f.ring();
    std::vector<Polynomial<F>> images;
    for (std::size_t r = 0; r < 3; ++r) {
      Polynomial<F> row(ring);
      for (std::size_t c = 0; c < 3; ++c) {
        if (!(*this)(r, c).is_zero()) row += Polynomial<F>::variable(ring, c).scaled((*this)(r, c));
      }
      images.push_back(std::move(row));
    }
    return f.compose(ring, images);
  }
};

template <CoefficientField F>
struct Matrix3Hash {
  std::size_t operator()(const Matrix3<F>& m) const { return m.hash(); }
};

/// Finite group of invertible 3x3 matrices, identity first, then in
/// breadth-first order of discovery from the generators.
template <CoefficientField F>
class MatrixGroup {
 public:
  MatrixGroup(F field, std::vector<Matrix3<F>> elements) : field_(std::move(field)), elements_(std::move(elements)) {}

  const F& field() const { return field_; }
  const std::vector<Matrix3<F>>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  F field_;
  std::vector<Matrix3<F>> elements_;
};

template <CoefficientField F>
MatrixGroup<F> group_generate(const F& field, const std::vector<Matrix3<F>>& gens, std::size_t bound = 1000) {
  for (const auto& g : gens) {
    if (g.determinant().is_zero()) throw Error("group generator is singular");
  }
  std::vector<Matrix3<F>> elems{Matrix3<F>::identity(field)};
  std::unordered_set<Matrix3<F>, Matrix3Hash<F>> seen(elems.begin(), elems.end());
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    Matrix3<F> cur = elems[queue.front()];
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix3<F> next = cur * g;
      if (seen.insert(next).second) {
        if (elems.size() >= bound) throw ClosureBoundExceeded("group closure exceeds " + std::to_string(bound));
        elems.push_back(next);
        queue.push_back(elems.size() - 1);
      }
    }
  }
  return MatrixGroup<F>(field, std::move(elems));
}

template <CoefficientField F>
struct Orbit {
  ProjectivePoint<F> representative;  // smallest point of the orbit
  std::vector<ProjectivePoint<F>> points;  // sorted
  unsigned multiplicity;
};

/// Orbit decomposition of a point set that the group permutes; throws if an
/// image leaves the set or changes multiplicity. Orbits are listed by size,
/// then by representative.
template <CoefficientField F>
std::vector<Orbit<F>> orbits(const MatrixGroup<F>& g, const PointSet<F>& ps) {
  std::vector<bool> done(ps.size(), false);
  std::vector<Orbit<F>> out;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (done[k]) continue;
    std::vector<ProjectivePoint<F>> pts;
    for (const auto& m : g.elements()) {
      auto img = m.apply(ps[k].point);
      auto idx = ps.find(img);
      if (!idx) throw Error("group does not preserve the point set: " + img.to_string());
      if (ps[*idx].multiplicity != ps[k].multiplicity) throw Error("group does not preserve multiplicities");
      if (!done[*idx]) {
        done[*idx] = true;
        pts.push_back(img);
      }
    }
    std::sort(pts.begin(), pts.end());
    if (g.order() % pts.size() != 0) throw Error("orbit size does not divide the group order");
    out.push_back({pts.front(), std::move(pts), ps[k].multiplicity});
  }
  std::stable_sort(out.begin(), out.end(), [](const Orbit<F>& a, const Orbit<F>& b) {
    if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
    return a.representative < b.representative;
  });
  return out;
}

/// Orbit of a single point.
template <CoefficientField F>
std::vector<ProjectivePoint<F>> orbit_of(const MatrixGroup<F>& g, const ProjectivePoint<F>& p) {
  std::vector<ProjectivePoint<F>> out;
  for (const auto& m : g.elements()) {
    auto img = m.apply(p);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace idealis
