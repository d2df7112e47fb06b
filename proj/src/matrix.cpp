#include "okbody/matrix.hpp"

#include "okbody/errors.hpp"

#include <utility>

namespace okbody {

RrefResult rref(RationalMatrix m) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(pivot, row);
    BigRational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      BigRational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

BigRational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  BigRational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      BigRational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

BigInt determinant(const IntegerMatrix& m) {
  // Bareiss fraction-free elimination.
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

void add_row_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const BigInt& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += f * m(source, j);
}

void add_col_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const BigInt& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += f * m(i, source);
}

BigInt trunc_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  IntegerMatrix left = IntegerMatrix::identity(m.rows());
  IntegerMatrix right = IntegerMatrix::identity(m.cols());
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t diag_len = std::min(r, c);

  for (std::size_t t = 0; t < diag_len; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    a.swap_rows(t, pi);
    left.swap_rows(t, pi);
    a.swap_cols(t, pj);
    right.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = trunc_quotient(a(i, t), a(t, t));
        add_row_multiple(a, i, t, -q);
        add_row_multiple(left, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = trunc_quotient(a(t, j), a(t, t));
        add_col_multiple(a, j, t, -q);
        add_col_multiple(right, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; promote it
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        a.swap_rows(t, bi);
        left.swap_rows(t, bi);
        a.swap_cols(t, bj);
        right.swap_cols(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row_multiple(a, t, i, 1);
            add_row_multiple(left, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < r; ++j) left(t, j) = -left(t, j);
    }
  }

  SmithResult out;
  out.diagonal.resize(diag_len);
  for (std::size_t i = 0; i < diag_len; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntegerMatrix hermite_row_basis(const IntegerMatrix& m) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    bool zero = true;
    for (auto& x : r) zero = zero && x == 0;
    if (!zero) rows.push_back(std::move(r));
  }
  const std::size_t n = m.cols();
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool others = false;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][col] != 0) others = true;
      }
      if (!others) break;
    }
    bool has_pivot = top < rows.size() && rows[top][col] != 0;
    if (!has_pivot) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    ++top;
    // drop rows that became zero
    std::vector<std::vector<BigInt>> kept(rows.begin(), rows.begin() + top);
    for (std::size_t i = top; i < rows.size(); ++i) {
      bool zero = true;
      for (auto& x : rows[i]) zero = zero && x == 0;
      if (!zero) kept.push_back(std::move(rows[i]));
    }
    rows = std::move(kept);
  }
  rows.resize(top);
  // reduce entries above pivots into [0, pivot)
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::size_t pc = 0;
    while (rows[k][pc] == 0) ++pc;
    for (std::size_t i = 0; i < k; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][pc].get_mpz_t(), rows[k][pc].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = pc; j < n; ++j) rows[i][j] -= q * rows[k][j];
    }
  }
  return IntegerMatrix::from_rows(rows, n);
}

LatticeIndex lattice_index(const IntegerMatrix& generators, std::size_t ambient_rank) {
  if (generators.rows() > 0 && generators.cols() != ambient_rank)
    throw ValidationError("generator matrix has wrong number of columns");
  IntegerMatrix basis = generators.rows() == 0 ? IntegerMatrix(0, ambient_rank)
                                               : hermite_row_basis(generators);
  LatticeIndex out;
  out.rank = basis.rows();
  if (out.rank == ambient_rank) out.index = abs(determinant(basis));
  return out;
}

namespace {

IntegerMatrix unimodular_inverse(const IntegerMatrix& u) {
  const std::size_t n = u.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = u(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(std::move(aug));
  IntegerMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j).get_num();
  return inv;
}

} // namespace

SaturationInfo saturation(const IntegerMatrix& generators) {
  SaturationInfo out;
  const std::size_t n = generators.cols();
  out.basis = generators.rows() == 0 ? IntegerMatrix(0, n) : hermite_row_basis(generators);
  out.rank = out.basis.rows();
  if (out.rank == 0) {
    out.saturation = IntegerMatrix(0, n);
    return out;
  }
  auto snf = smith_normal_form(out.basis);
  out.index = 1;
  for (std::size_t i = 0; i < out.rank; ++i) out.index *= snf.diagonal[i];
  IntegerMatrix vinv = unimodular_inverse(snf.right);
  out.saturation = IntegerMatrix(out.rank, n);
  for (std::size_t i = 0; i < out.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) out.saturation(i, j) = vinv(i, j);
  return out;
}

} // namespace okbody
