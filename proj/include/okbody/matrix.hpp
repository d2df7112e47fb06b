#pragma once

#include "okbody/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace okbody {

// Dense row-major matrix of exact scalars.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<BigRational>;
using IntegerMatrix = Matrix<BigInt>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

struct RrefResult {
  std::size_t rank = 0;
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row-echelon form. Pivot = first nonzero entry scanning the
// remaining rows top to bottom in the current column.
RrefResult rref(RationalMatrix m);

BigRational determinant(RationalMatrix m);
BigInt determinant(const IntegerMatrix& m);

struct SmithResult {
  // length min(rows, cols); nonzero entries first, d1 | d2 | ...
  std::vector<BigInt> diagonal;
  IntegerMatrix left;  // unimodular, rows x rows
  IntegerMatrix right; // unimodular, cols x cols
};

// left * m * right = diag(diagonal).
SmithResult smith_normal_form(const IntegerMatrix& m);

// Row-echelon integer basis of the row lattice (unimodular row operations
// only). Zero rows are dropped, so the result has rank many rows.
IntegerMatrix hermite_row_basis(const IntegerMatrix& m);

struct LatticeIndex {
  std::size_t rank = 0;
  std::optional<BigInt> index; // empty when rank < ambient_rank ("infinite")

  bool finite() const { return index.has_value(); }
};

LatticeIndex lattice_index(const IntegerMatrix& generators, std::size_t ambient_rank);

struct SaturationInfo {
  std::size_t rank = 0;
  BigInt index = 1;      // [M : T] where M is the saturation of T
  IntegerMatrix basis;   // basis of T (rank rows)
  IntegerMatrix saturation; // basis of M (rank rows)
};

// T = row lattice of generators; M = (T tensor Q) intersected with Z^n.
SaturationInfo saturation(const IntegerMatrix& generators);

} // namespace okbody
