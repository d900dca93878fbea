#pragma once

#include "companion_smith/integer.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace companion_smith::detail {

// Fraction-free Gaussian elimination on a row-major buffer. Every division
// is exact because each intermediate entry is a minor of the input.
inline Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  bool negate = false;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        at(i, j) = exact_div(v, prev);
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Integer det = at(n - 1, n - 1);
  return negate ? Integer(-det) : det;
}

// Rank over the rationals by fraction-free row echelon reduction.
inline std::size_t bareiss_rank(std::vector<Integer> a, std::size_t rows,
                                std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(rank, j), at(p, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = at(rank, c) * at(i, j) - at(i, c) * at(rank, j);
        at(i, j) = exact_div(v, prev);
      }
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace companion_smith::detail
