#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "quotlab/errors.hpp"
#include "quotlab/polynomial.hpp"

namespace quotlab {

template <class D>
using PolyMatrix = std::vector<std::vector<Polynomial<D>>>;

/// Determinant by row-by-row Laplace expansion, memoized on the set of
/// columns already used.  Division-free, so it is valid over any commutative
/// coefficient ring (dual numbers included).
template <class D>
Polynomial<D> symbolic_det(const PolyMatrix<D>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw AlgebraError("symbolic_det: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw AlgebraError("symbolic_det: matrix is not square");
  if (n > 24) throw GuardError("symbolic_det: matrix too large for subset expansion");
  const auto& ring = m[0][0].ring();

  std::unordered_map<std::uint32_t, Polynomial<D>> layer;
  layer.emplace(0u, Polynomial<D>::constant(ring, ring->domain().one()));
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_map<std::uint32_t, Polynomial<D>> next;
    for (const auto& [used, partial] : layer) {
      if (partial.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t bit = 1u << c;
        if ((used & bit) || m[i][c].is_zero()) continue;
        // sign of placing column c after the columns in `used`
        const int inversions = __builtin_popcount(used & ~((bit << 1) - 1));
        Polynomial<D> term = partial * m[i][c];
        if (inversions & 1) term = -term;
        auto it = next.find(used | bit);
        if (it == next.end()) next.emplace(used | bit, std::move(term));
        else it->second += term;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find((n == 32 ? 0u : (1u << n)) - 1u);
  return it == layer.end() ? Polynomial<D>(ring) : it->second;
}

/// Square submatrix on the given rows and columns.
template <class D>
PolyMatrix<D> submatrix(const PolyMatrix<D>& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  PolyMatrix<D> s;
  s.reserve(rows.size());
  for (auto r : rows) {
    std::vector<Polynomial<D>> row;
    row.reserve(cols.size());
    for (auto c : cols) row.push_back(m.at(r).at(c));
    s.push_back(std::move(row));
  }
  return s;
}

}  // namespace quotlab
