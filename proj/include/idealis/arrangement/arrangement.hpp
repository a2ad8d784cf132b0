#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "idealis/arrangement/projective.hpp"
#include "idealis/kernels/parallel.hpp"

namespace idealis {

/// A finite set of distinct projective lines.
template <CoefficientField F>
class Arrangement {
 public:
  Arrangement(F field, std::vector<LinearForm<F>> lines, std::string name = {})
      : field_(std::move(field)), lines_(std::move(lines)), name_(std::move(name)) {
    std::vector<LinearForm<F>> sorted = lines_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DuplicateLines("arrangement contains a repeated line");
  }

  const F& field() const { return field_; }
  const std::vector<LinearForm<F>>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  const std::string& name() const { return name_; }

 private:
  F field_;
  std::vector<LinearForm<F>> lines_;
  std::string name_;
};

template <CoefficientField F>
struct PointEntry {
  ProjectivePoint<F> point;
  unsigned multiplicity;
  std::vector<std::size_t> lines;  // indices into the arrangement, ascending
};

/// Intersection points of an arrangement, sorted by canonical coordinates.
template <CoefficientField F>
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<PointEntry<F>> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const PointEntry<F>& a, const PointEntry<F>& b) { return a.point < b.point; });
    for (std::size_t k = 0; k < entries_.size(); ++k) index_.emplace(entries_[k].point, k);
  }

  const std::vector<PointEntry<F>>& entries() const& { return entries_; }
  // By value on temporaries, so range-for over a returned set stays valid.
  std::vector<PointEntry<F>> entries() && { return std::move(entries_); }
  std::size_t size() const { return entries_.size(); }
  const PointEntry<F>& operator[](std::size_t k) const { return entries_[k]; }

  std::optional<std::size_t> find(const ProjectivePoint<F>& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const ProjectivePoint<F>& p) const { return index_.count(p) != 0; }

  std::vector<ProjectivePoint<F>> points() const {
    std::vector<ProjectivePoint<F>> out;
    for (const auto& e : entries_) out.push_back(e.point);
    return out;
  }

  /// Entries with the given multiplicity.
  PointSet with_multiplicity(unsigned m) const {
    std::vector<PointEntry<F>> out;
    for (const auto& e : entries_) {
      if (e.multiplicity == m) out.push_back(e);
    }
    return PointSet(std::move(out));
  }

 private:
  std::vector<PointEntry<F>> entries_;
  std::unordered_map<ProjectivePoint<F>, std::size_t, TripleHash<F>> index_;
};

/// All pairwise intersections with their line multiplicities. The pairwise
/// cross products are computed concurrently; grouping is sequential and the
/// result is sorted, so both paths return identical sets.
template <CoefficientField F>
PointSet<F> intersection_points(const Arrangement<F>& arr, Execution exec = Execution::Parallel) {
  const auto& L = arr.lines();
  const std::size_t n = L.size();
  if (n < 2) throw Error("intersection points need at least two lines");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::optional<ProjectivePoint<F>>> meet(pairs.size());
  const bool parallel = exec == Execution::Parallel;
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    auto [i, j] = pairs[static_cast<std::size_t>(k)];
    auto c = cross(L[i], L[j]);
    meet[static_cast<std::size_t>(k)].emplace(c[0], c[1], c[2]);
  }
  std::unordered_map<ProjectivePoint<F>, std::vector<std::size_t>, TripleHash<F>> groups;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto& v = groups[*meet[k]];
    v.push_back(pairs[k].first);
    v.push_back(pairs[k].second);
  }
  std::vector<PointEntry<F>> entries;
  entries.reserve(groups.size());
  std::size_t pair_total = 0;
  for (auto& [p, v] : groups) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    const auto m = static_cast<unsigned>(v.size());
    pair_total += m * (m - 1) / 2;
    entries.push_back({p, m, std::move(v)});
  }
  if (pair_total != n * (n - 1) / 2) throw Error("pair-count identity violated");
  return PointSet<F>(std::move(entries));
}

/// t_i = number of points on exactly i lines.
template <CoefficientField F>
std::map<unsigned, std::size_t> t_vector(const PointSet<F>& ps) {
  std::map<unsigned, std::size_t> t;
  for (const auto& e : ps.entries()) ++t[e.multiplicity];
  return t;
}

/// "t2=54 t3=42 ..." in increasing multiplicity.
inline std::string t_vector_text(const std::map<unsigned, std::size_t>& t) {
  std::string out;
  for (const auto& [i, c] : t) {
    if (!out.empty()) out += ' ';
    out += "t" + std::to_string(i) + "=" + std::to_string(c);
  }
  return out;
}

template <CoefficientField F>
Polynomial<F> product_of_forms(const Arrangement<F>& arr, const RingPtr<F>& ring) {
  Polynomial<F> out = Polynomial<F>::constant(ring, 1);
  for (const auto& l : arr.lines()) out *= linear_polynomial(l, ring);
  return out;
}

template <CoefficientField F>
Polynomial<F> product_of_forms(const Arrangement<F>& arr) {
  return product_of_forms(arr, plane_ring(arr.field()));
}

/// Characteristic polynomial of a rank-3 central arrangement.
struct CharPoly {
  long lines = 0;
  long linear = 0;    // sum over points of (m_P - 1)
  long constant = 0;  // fixed by chi(1) = 0
  // quotient chi(t) / (t - 1) = t^2 + q1 t + q0
  long q1 = 0;
  long q0 = 0;
  long discriminant = 0;
  bool splits = false;

  /// Descending central cubic, e.g. "t^3-21t^2+161t-141".
  std::string cubic_text() const;
  /// Descending quotient, e.g. "t^2-20t+141".
  std::string quotient_text() const;
  /// Ascending form 1 + q1 t + q0 t^2 as printed in some sources.
  std::string ascending_text() const;
};

CharPoly char_poly_from_counts(long lines, const std::vector<unsigned>& multiplicities);

template <CoefficientField F>
CharPoly char_poly(const Arrangement<F>& arr, const PointSet<F>& ps) {
  if (ps.size() < 2) throw NonEssential();
  std::vector<unsigned> m;
  for (const auto& e : ps.entries()) m.push_back(e.multiplicity);
  return char_poly_from_counts(static_cast<long>(arr.size()), m);
}

template <CoefficientField F>
CharPoly char_poly(const Arrangement<F>& arr) {
  if (arr.size() < 2) throw NonEssential();
  return char_poly(arr, intersection_points(arr));
}

}  // namespace idealis
