#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "hodo/field.hpp"

namespace hodo {

template <class F>
using Mat = std::vector<std::vector<F>>;

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

template <class F>
struct SolveResult {
  SolveStatus status;
  std::vector<F> solution;  // valid when status == Unique
};

// Gaussian elimination over an exact field.
template <class F>
SolveResult<F> solve_linear(Mat<F> a, std::vector<F> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  assert(b.size() == rows);
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && FieldTraits<F>::is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    F inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || FieldTraits<F>::is_zero(a[i][c])) continue;
      F factor = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= factor * a[r][k];
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!FieldTraits<F>::is_zero(b[i]))
      return {SolveStatus::Inconsistent, {}};
  if (pivot_col.size() < cols) return {SolveStatus::Underdetermined, {}};
  std::vector<F> x(cols, FieldTraits<F>::zero());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return {SolveStatus::Unique, std::move(x)};
}

template <class F>
std::size_t matrix_rank(Mat<F> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && FieldTraits<F>::is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (FieldTraits<F>::is_zero(a[i][c])) continue;
      F factor = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= factor * a[r][k];
    }
    ++r;
  }
  return r;
}

// Sylvester criterion: all leading principal minors positive.
inline bool is_positive_definite(const Mat<Rational>& s) {
  const std::size_t n = s.size();
  for (std::size_t k = 1; k <= n; ++k) {
    Mat<Rational> minor(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = s[i][j];
    // determinant by fraction-free elimination is overkill at this size
    Rational det(1);
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && minor[p][c].is_zero()) ++p;
      if (p == k) {
        det = Rational(0);
        break;
      }
      if (p != c) {
        std::swap(minor[p], minor[c]);
        det = -det;
      }
      det *= minor[c][c];
      for (std::size_t i = c + 1; i < k; ++i) {
        Rational factor = minor[i][c] / minor[c][c];
        for (std::size_t j = c; j < k; ++j)
          minor[i][j] -= factor * minor[c][j];
      }
    }
    if (det.sign() <= 0) return false;
  }
  return true;
}

}  // namespace hodo
