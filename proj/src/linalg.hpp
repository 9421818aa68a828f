#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace mnp {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Solves A x = b by exact Gauss-Jordan elimination.
// Returns nullopt when A is singular.
inline std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rat f = a[row][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace mnp
