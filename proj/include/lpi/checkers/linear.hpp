#pragma once

#include <cstddef>
#include <vector>

#include "lpi/rings/ring.hpp"

namespace lpi {

// Basis of the null space of a rows x cols matrix over a field, by
// reduced row echelon form.
template <Field R>
std::vector<std::vector<ElementOf<R>>> null_space(const R& ring, std::vector<std::vector<ElementOf<R>>> a,
                                                  std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero_element(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    auto inv = ring.inverse(a[r][c]);
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero_element(a[i][c])) continue;
      auto f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<ElementOf<R>>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<ElementOf<R>> v(cols, ring.zero());
    v[free] = ring.one();
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lpi
