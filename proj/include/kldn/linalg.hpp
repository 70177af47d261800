#pragma once

// Dense matrices and exact rank over Q and over Z[q, q^-1].

#include "kldn/laurent.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kldn {

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const T& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  const std::vector<T>& data() const { return data_; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  void append_row(const std::vector<T>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T, class U>
Matrix<U> map_entries(const Matrix<T>& m, const std::function<U(const T&)>& f) {
  Matrix<U> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f(m(r, c));
  return out;
}

inline Matrix<Rational> evaluate(const Matrix<LaurentPoly>& m, const Rational& q) {
  return map_entries<LaurentPoly, Rational>(m, [&](const LaurentPoly& p) { return p.eval(q); });
}

inline std::size_t rank(Matrix<Rational> m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

/// Fraction-free elimination; every division is exact in Z[q, q^-1].
inline std::size_t rank(Matrix<LaurentPoly> m) {
  std::size_t rank = 0;
  LaurentPoly prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
    const LaurentPoly p = m(rank, c);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      const LaurentPoly f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = divide_exact(p * m(r, k) - f * m(rank, k), prev);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

} // namespace kldn
