#pragma once

// Dense two-phase tableau simplex, Bland's rule. Instantiated with double
// (metric quantities) and BigRational (exact cube tests).

#include <cmath>
#include <cstddef>
#include <vector>

namespace okbody {

enum class LpStatus { optimal, infeasible, unbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<T> x;
  T value{};
};

template <class T>
struct LpTolerance {
  T eps{};
  bool positive(const T& v) const { return v > eps; }
  bool negative(const T& v) const { return v < -eps; }
};

// maximize c.x subject to A x <= b, x >= 0.
template <class T>
LpResult<T> maximize(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
                     const std::vector<T>& c, LpTolerance<T> tol = {}) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  // columns: n structural, m slack, 1 artificial, then rhs
  const std::size_t art = n + m;
  const std::size_t rhs = n + m + 1;
  std::vector<std::vector<T>> tab(m + 1, std::vector<T>(rhs + 1, T(0)));
  std::vector<long> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
    tab[i][n + i] = T(1);
    tab[i][art] = T(-1);
    tab[i][rhs] = b[i];
    basis[i] = static_cast<long>(n + i);
  }
  auto& obj = tab[m];

  auto pivot = [&](std::size_t r, std::size_t col) {
    T p = tab[r][col];
    for (auto& v : tab[r]) v /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || tab[i][col] == T(0)) continue;
      T f = tab[i][col];
      for (std::size_t j = 0; j <= rhs; ++j) tab[i][j] -= f * tab[r][j];
    }
    basis[r] = static_cast<long>(col);
  };

  // Returns false when unbounded.
  auto run = [&](std::size_t columns) {
    for (;;) {
      std::size_t enter = columns;
      for (std::size_t j = 0; j < columns; ++j)
        if (tol.negative(obj[j])) {
          enter = j;
          break;
        }
      if (enter == columns) return true;
      std::size_t leave = m;
      T best{};
      for (std::size_t i = 0; i < m; ++i) {
        if (!tol.positive(tab[i][enter])) continue;
        T ratio = tab[i][rhs] / tab[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  };

  std::size_t worst = m;
  for (std::size_t i = 0; i < m; ++i)
    if (tol.negative(b[i]) && (worst == m || b[i] < b[worst])) worst = i;
  if (worst != m) {
    obj[art] = T(1); // maximize -x_art
    pivot(worst, art);
    run(art + 1);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] == static_cast<long>(art)) {
        if (tol.positive(tab[i][rhs])) return {LpStatus::infeasible, {}, T(0)};
        for (std::size_t j = 0; j < art; ++j)
          if (tol.positive(tab[i][j]) || tol.negative(tab[i][j])) {
            pivot(i, j);
            break;
          }
      }
  }
  for (std::size_t i = 0; i <= m; ++i) tab[i][art] = T(0);
  for (std::size_t j = 0; j <= rhs; ++j) obj[j] = T(0);
  for (std::size_t j = 0; j < n; ++j) obj[j] = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < 0 || basis[i] >= static_cast<long>(art)) continue;
    T f = obj[basis[i]];
    if (f == T(0)) continue;
    for (std::size_t j = 0; j <= rhs; ++j) obj[j] -= f * tab[i][j];
  }
  if (!run(art)) return {LpStatus::unbounded, {}, T(0)};

  LpResult<T> out;
  out.status = LpStatus::optimal;
  out.x.assign(n, T(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= 0 && basis[i] < static_cast<long>(n)) out.x[basis[i]] = tab[i][rhs];
  out.value = T(0);
  for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  return out;
}

} // namespace okbody
