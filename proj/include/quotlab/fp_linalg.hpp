#pragma once

// Dense linear algebra over a prime field on small row-major matrices.

#include <cstdint>
#include <vector>

#include "quotlab/field.hpp"

namespace quotlab {

using FpVector = std::vector<std::uint32_t>;
using FpRows = std::vector<FpVector>;

/// Reduced row echelon form; zero rows dropped.  Rows come out ordered by
/// pivot column, each pivot equal to 1 and alone in its column.
inline FpRows rref(FpRows rows, const PrimeField& f) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const auto inv = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const auto factor = rows[r][col];
      for (std::size_t k = col; k < ncols; ++k) rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

inline std::size_t rank_of(const FpRows& rows, const PrimeField& f) { return rref(rows, f).size(); }

/// Pivot column of each row of a matrix already in RREF.
inline std::vector<std::size_t> pivots(const FpRows& echelon) {
  std::vector<std::size_t> p;
  for (const auto& row : echelon) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    p.push_back(c);
  }
  return p;
}

/// Basis of {x : row . x = 0 for every row}, in ascending free-column order.
inline FpRows null_space(const FpRows& rows, std::size_t ncols, const PrimeField& f) {
  FpRows e = rref(rows, f);
  auto piv = pivots(e);
  std::vector<char> is_pivot(ncols, 0);
  for (auto c : piv) is_pivot[c] = 1;
  FpRows basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    FpVector x(ncols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < e.size(); ++r) x[piv[r]] = f.neg(e[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Determinant of a square matrix over F_p.
inline std::uint32_t fp_det(FpRows m, const PrimeField& f) {
  const std::size_t n = m.size();
  std::uint32_t det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    const auto inv = f.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const auto factor = f.mul(m[r][col], inv);
      for (std::size_t k = col; k < n; ++k) m[r][k] = f.sub(m[r][k], f.mul(factor, m[col][k]));
    }
  }
  return det;
}

}  // namespace quotlab
