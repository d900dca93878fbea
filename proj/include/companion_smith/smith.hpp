#pragma once

// Smith normal form over Z, plus the determinantal-divisor oracle.

#include "companion_smith/bareiss.hpp"
#include "companion_smith/errors.hpp"
#include "companion_smith/exactmat.hpp"
#include "companion_smith/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace companion_smith {

/// Invariant factors s_1 | s_2 | ... (non-negative, zeros last), the rank,
/// and, when requested, unimodular left/right with left * M * right = diag(s).
struct SmithDecomposition {
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

/// True iff each entry divides the next (0 divides only 0) and none is negative.
inline bool is_divisor_chain(std::span<const Integer> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 0) return false;
    if (i + 1 < factors.size() && !divides(factors[i], factors[i + 1])) return false;
  }
  return true;
}

/// Smith form of diag(values): the pairwise (gcd, lcm) sweep turns any list
/// into the invariant-factor chain of the same diagonal matrix.
inline std::vector<Integer> diagonal_smith_chain(std::vector<Integer> values) {
  for (auto& v : values) v = abs_value(v);
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (divides(values[i], values[j])) continue;
      Integer g = gcd(values[i], values[j]);
      Integer l = lcm(values[i], values[j]);
      values[i] = std::move(g);
      values[j] = std::move(l);
    }
  return values;
}

inline std::size_t count_nonzero(std::span<const Integer> factors) {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [](const Integer& x) { return x != 0; }));
}

namespace detail {

class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, bool track)
      : a_(m), track_(track), rows_(m.rows()), cols_(m.cols()) {
    if (track_) {
      left_ = IntMatrix::identity(rows_);
      right_ = IntMatrix::identity(cols_);
    }
  }

  SmithDecomposition run() {
    const std::size_t diag = std::min(rows_, cols_);
    std::size_t t = 0;
    for (; t < diag; ++t) {
      if (!reduce_step(t)) break;
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithDecomposition out;
    out.invariant_factors.assign(diag, Integer(0));
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors[i] = a_(i, i);
    out.rank = t;
    if (track_) {
      out.left = std::move(left_);
      out.right = std::move(right_);
    }
    return out;
  }

 private:
  // Brings the trailing block at (t, t) to pivot-plus-zeros form with the
  // pivot dividing every remaining entry. Returns false if the block is zero.
  bool reduce_step(std::size_t t) {
    for (;;) {
      auto pivot = find_min_pivot(t);
      if (!pivot) return false;
      auto [pi, pj] = *pivot;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_(i, t) == 0) continue;
        add_row_multiple(i, t, -tdiv(a_(i, t), a_(t, t)));
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_(t, j) == 0) continue;
        add_col_multiple(j, t, -tdiv(a_(t, j), a_(t, t)));
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility fix-up: pull an offending row into the pivot row.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows_ && divisible; ++i)
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (!divides(a_(t, t), a_(i, j))) {
            add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) return true;
    }
  }

  // Nonzero entry of least magnitude; ties go to the lowest (row, col).
  std::optional<std::pair<std::size_t, std::size_t>> find_min_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        const Integer& v = a_(i, j);
        if (v == 0) continue;
        if (!best || mpz_cmpabs(v.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
          best = {i, j};
          best_abs = abs_value(v);
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  // row dst += q * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_(src, j) != 0) a_(dst, j) += q * a_(src, j);
    if (track_)
      for (std::size_t j = 0; j < rows_; ++j)
        if (left_(src, j) != 0) left_(dst, j) += q * left_(src, j);
  }

  // col dst += q * col src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (a_(i, src) != 0) a_(i, dst) += q * a_(i, src);
    if (track_)
      for (std::size_t i = 0; i < cols_; ++i)
        if (right_(i, src) != 0) right_(i, dst) += q * right_(i, src);
  }

  void swap_rows(std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a_(x, j), a_(y, j));
    if (track_)
      for (std::size_t j = 0; j < rows_; ++j) std::swap(left_(x, j), left_(y, j));
  }

  void swap_cols(std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(a_(i, x), a_(i, y));
    if (track_)
      for (std::size_t i = 0; i < cols_; ++i) std::swap(right_(i, x), right_(i, y));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) a_(r, j) = -a_(r, j);
    if (track_)
      for (std::size_t j = 0; j < rows_; ++j) left_(r, j) = -left_(r, j);
  }

  IntMatrix a_;
  bool track_;
  std::size_t rows_;
  std::size_t cols_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace detail

/// Smith normal form by minimal-pivot Euclidean reduction. Deterministic,
/// including the transforms.
inline SmithDecomposition smith_form(const IntMatrix& m, bool want_transforms = false) {
  return detail::SmithReducer(m, want_transforms).run();
}

// ---------------------------------------------------------------------------
// Determinantal divisors by brute-force minor enumeration.

inline constexpr std::size_t kDefaultMinorCap = 8;

/// Minor-oracle cap from COMPANION_SMITH_MINOR_CAP, or the default.
inline std::size_t minor_cap_from_env() {
  const char* raw = std::getenv("COMPANION_SMITH_MINOR_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultMinorCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0') return kDefaultMinorCap;
  return static_cast<std::size_t>(v);
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

inline Integer minor_gcd(const IntMatrix& m, std::size_t order) {
  Integer g = 0;
  std::vector<Integer> sub(order * order);
  auto rows = first_combination(order);
  do {
    auto cols = first_combination(order);
    do {
      for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) sub[i * order + j] = m(rows[i], cols[j]);
      g = gcd(g, bareiss_determinant(sub, order));
      if (g == 1) return g;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return g;
}

}  // namespace detail

/// gamma_1 .. gamma_{up_to}: gcds of all minors of each order.
inline std::vector<Integer> determinantal_divisors(const IntMatrix& m, std::size_t up_to,
                                                   std::size_t cap = kDefaultMinorCap) {
  const std::size_t dim = std::min(m.rows(), m.cols());
  if (up_to > dim) throw OutOfRange("determinantal_divisors: order exceeds min(rows, cols)");
  if (dim > cap)
    throw TooLarge("minor enumeration limited to min dimension " + std::to_string(cap));
  std::vector<Integer> gammas;
  gammas.reserve(up_to);
  for (std::size_t order = 1; order <= up_to; ++order) {
    if (!gammas.empty() && gammas.back() == 0) {
      gammas.emplace_back(0);
      continue;
    }
    gammas.push_back(detail::minor_gcd(m, order));
  }
  return gammas;
}

/// s_i = gamma_i / gamma_{i-1} with gamma_0 = 1.
inline std::vector<Integer> invariant_factors_from_divisors(std::span<const Integer> gammas) {
  std::vector<Integer> factors;
  factors.reserve(gammas.size());
  Integer prev = 1;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const Integer& g = gammas[i];
    if (g < 0) throw InvalidDivisorChain("determinantal divisor is negative");
    if (prev == 0) {
      if (g != 0) throw InvalidDivisorChain("nonzero divisor after a zero divisor");
      factors.emplace_back(0);
      continue;
    }
    if (!divides(prev, g))
      throw InvalidDivisorChain("gamma_" + std::to_string(i) + " does not divide gamma_" +
                                std::to_string(i + 1));
    factors.push_back(g == 0 ? Integer(0) : exact_div(g, prev));
    prev = g;
  }
  if (!is_divisor_chain(factors))
    throw InvalidDivisorChain("ratios of the divisors do not form a divisor chain");
  return factors;
}

}  // namespace companion_smith
