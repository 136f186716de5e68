#pragma once

#include <cstddef>
#include <vector>

#include "tihecke/errors.hpp"
#include "tihecke/field.hpp"
#include "tihecke/laurent.hpp"

namespace tihecke {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free Bareiss determinant over an integral domain with exact
// division. Entries are consumed.
inline Laurent bareiss_determinant(Matrix<Laurent> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(errc::internal, "determinant of a non-square matrix");
  if (n == 0) return Laurent(1);

  int sign = 1;
  Laurent prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // First nonzero pivot in column k.
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return Laurent{};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Laurent num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_div(num, prev);
        if (!q) fail(errc::internal, "Bareiss division failed");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Laurent{};
    }
    prev = m[k][k];
  }
  Laurent det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

// Rank by Gaussian elimination over the field of the entries.
inline std::size_t field_rank(Matrix<FieldScalar> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const FieldScalar inv = m[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c].is_zero()) continue;
      const FieldScalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace tihecke
