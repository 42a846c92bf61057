#ifndef RBO_LINALG_HPP
#define RBO_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "rbo/error.hpp"
#include "rbo/rational.hpp"

namespace rbo {

using Vec = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j].at(i);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw Error(ErrorKind::invalid_dimension, "matrix/vector size mismatch");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form of the matrix whose rows are `rows`; returns the
/// nonzero rows and the pivot column of each.
inline std::pair<std::vector<Vec>, std::vector<std::size_t>> row_reduce(std::vector<Vec> rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return {rows, pivots};
  const std::size_t width = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (std::size_t k = 0; k < width; ++k)
        if (!rows[r][k].is_zero()) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return {rows, pivots};
}

/// A basis (in reduced echelon form) of the span of `vectors`.
inline std::vector<Vec> span_basis(const std::vector<Vec>& vectors) { return row_reduce(vectors).first; }

/// Basis of the column space of m, computed by column reduction.
inline std::vector<Vec> column_space(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return span_basis(cols);
}

inline std::size_t rank(const std::vector<Vec>& vectors) { return span_basis(vectors).size(); }

/// True when v lies in the span of `basis`.
inline bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  std::vector<Vec> extended = basis;
  extended.push_back(v);
  return rank(extended) == rank(basis);
}

}  // namespace rbo

#endif
