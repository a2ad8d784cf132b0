#pragma once

#include <cstddef>
#include <vector>

#include "idealis/algebra/field.hpp"
#include "idealis/kernels/parallel.hpp"

namespace idealis {

/// Dense row-major matrix over a coefficient field.
template <CoefficientField F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Element>& row) {
    if (row.size() != cols_) throw Error("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  std::vector<Element> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
  }

  void truncate_rows(std::size_t n) {
    rows_ = n;
    data_.resize(n * cols_, field_.zero());
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Brings `m` to reduced row echelon form in place (zero rows dropped) and
/// returns the pivot columns. The parallel path eliminates the rows of each
/// pivot step concurrently; both paths perform identical operations.
template <CoefficientField F>
std::vector<std::size_t> rref(Matrix<F>& m, Execution exec = Execution::Parallel) {
  using Element = typename F::Element;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const bool parallel = exec == Execution::Parallel && rows * cols > 4096;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rank;
    while (pr < rows && m(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    m.swap_rows(pr, rank);
    Element inv = m(rank, c).inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!m(rank, k).is_zero()) m(rank, k) *= inv;
    }
    const std::size_t piv = rank;
    const auto srows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t rs = 0; rs < srows; ++rs) {
      auto r = static_cast<std::size_t>(rs);
      if (r == piv || m(r, c).is_zero()) continue;
      Element factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(piv, k).is_zero()) m(r, k) -= factor * m(piv, k);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  m.truncate_rows(rank);
  return pivots;
}

template <CoefficientField F>
std::size_t rank(Matrix<F> m, Execution exec = Execution::Parallel) {
  return rref(m, exec).size();
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column in
/// increasing column order, with a 1 in that free column.
template <CoefficientField F>
std::vector<std::vector<typename F::Element>> kernel(Matrix<F> m, Execution exec = Execution::Parallel) {
  auto pivots = rref(m, exec);
  const F& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Element> v(m.cols(), field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace idealis
