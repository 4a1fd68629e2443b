#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

namespace noncong {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Diagonal of the Smith normal form of an integer matrix (entries small enough
/// for 64-bit elimination). Returns min(rows, cols) non-negative invariant
/// factors d_1 | d_2 | ..., zeros last.
inline std::vector<std::int64_t> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  const std::size_t rank_bound = std::min(rows, cols);

  for (std::size_t t = 0; t < rank_bound; ++t) {
    for (;;) {
      // pivot: smallest nonzero magnitude in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return [&] {
        std::vector<std::int64_t> d(rank_bound, 0);
        for (std::size_t k = 0; k < t; ++k) d[k] = std::llabs(m[k][k]);
        return d;
      }();
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const auto q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const auto q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: the pivot must divide every remaining entry
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  std::vector<std::int64_t> d(rank_bound);
  for (std::size_t k = 0; k < rank_bound; ++k) d[k] = std::llabs(m[k][k]);
  return d;
}

}  // namespace noncong
