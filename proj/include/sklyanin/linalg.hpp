#pragma once

// Dense exact linear algebra over Rational or TowerScalar.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "sklyanin/rational.hpp"
#include "sklyanin/tower.hpp"

namespace sklyanin {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  void append_row(const std::vector<T>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return sklyanin::is_zero(x); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (sklyanin::is_zero(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          if (!sklyanin::is_zero(b(k, c))) out(r, c) += x * b(k, c);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Reduced row echelon form in place; returns the pivot columns in row order.
/// Pivots are chosen as the first nonzero entry, so a nonzero pivot that is a
/// zero divisor of the tower surfaces as ZeroDivisor.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const T inv = inverse(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!is_zero(m(r, k))) m(r, k) = m(r, k) * inv;
    for (std::size_t q = 0; q < m.rows(); ++q) {
      if (q == r || is_zero(m(q, c))) continue;
      const T f = m(q, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!is_zero(m(r, k))) m(q, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return row_reduce(m).size();
}

/// Basis of { x : m x = 0 }.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

/// Matrix whose rows are the given vectors.
template <class T>
Matrix<T> from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix<T> m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

/// span(a) == span(b) for equal-length row vectors.
template <class T>
bool same_span(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b, std::size_t cols) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto ra = rank(from_rows(a, cols));
  const auto rb = rank(from_rows(b, cols));
  return ra == rb && rank(from_rows(both, cols)) == ra;
}

/// Every vector of `candidates` lies in span(basis).
template <class T>
bool in_span(const std::vector<std::vector<T>>& basis, const std::vector<std::vector<T>>& candidates,
             std::size_t cols) {
  auto both = basis;
  both.insert(both.end(), candidates.begin(), candidates.end());
  return rank(from_rows(both, cols)) == rank(from_rows(basis, cols));
}

}  // namespace sklyanin
