#pragma once

// Closed forms and reductions for Smith forms of f(C_g).

#include "companion_smith/errors.hpp"
#include "companion_smith/exactmat.hpp"
#include "companion_smith/integer.hpp"
#include "companion_smith/intpoly.hpp"
#include "companion_smith/smith.hpp"

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace companion_smith {

// ---------------------------------------------------------------------------
// Similarity of C_{ab} with a block lower-triangular matrix.

/// U_a * C_{ab} = X_{a,b} * U_a, where U_a is the banded upper triangular
/// Toeplitz matrix with first row (1, a_{m-1}, ..., a_0, 0, ...) and
///   X_{a,b} = [ C_b        0             ]
///             [ e_1 e_r^T  L_m C_a^T L_m ]
struct SimilarityWitness {
  IntPolynomial a;
  IntPolynomial b;
  IntMatrix u_a;
  IntMatrix x_ab;
};

inline SimilarityWitness similarity_witness(const IntPolynomial& a, const IntPolynomial& b) {
  require_monic(a);
  require_monic(b);
  const auto m = static_cast<std::size_t>(a.degree());
  const auto r = static_cast<std::size_t>(b.degree());
  const std::size_t n = m + r;
  if (n < 1) throw OutOfRange("similarity_witness: deg(ab) must be at least 1");

  IntMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m && i + k < n; ++k) u(i, i + k) = a.coeff(m - k);

  IntMatrix x(n, n);
  x.set_block(0, 0, detail::companion_any_degree(b));
  if (m > 0 && r > 0) x(r, r - 1) = 1;
  const IntMatrix flip_m = flip(m);
  x.set_block(r, r, flip_m * detail::companion_any_degree(a).transpose() * flip_m);
  return {a, b, std::move(u), std::move(x)};
}

// ---------------------------------------------------------------------------
// Reduction by a common divisor: f(C_g) ~ F(C_G) (+) 0_{m x m}.

struct TheoremCReduction {
  IntPolynomial z;
  IntPolynomial f_quot;
  IntPolynomial g_quot;
  std::size_t zero_block_size = 0;
};

/// Reduction by an arbitrary monic common divisor z of f and g.
inline TheoremCReduction theorem_c_reduce_by(const IntPolynomial& f, const IntPolynomial& g,
                                             const IntPolynomial& z) {
  detail::require_positive_degree(g);
  require_monic(z);
  auto [f_quot, f_rem] = divmod_monic(f, z);
  auto [g_quot, g_rem] = divmod_monic(g, z);
  if (!f_rem.is_zero() || !g_rem.is_zero())
    throw OutOfRange("z is not a common divisor of f and g");
  const auto m = static_cast<std::size_t>(z.degree());
  return {z, std::move(f_quot), std::move(g_quot), m};
}

/// Reduction by the monic gcd. For f = 0 this gives z = g, F = 0, G = 1.
inline TheoremCReduction theorem_c_reduce(const IntPolynomial& f, const IntPolynomial& g) {
  detail::require_positive_degree(g);
  return theorem_c_reduce_by(f, g, gcd_with_monic(f, g));
}

/// Invariant factors of F(C_G) followed by m zeros.
inline SmithDecomposition smith_from_reduction(const TheoremCReduction& red) {
  SmithDecomposition out;
  if (red.g_quot.degree() >= 1)
    out = smith_form(poly_of_companion(red.f_quot, red.g_quot));
  out.invariant_factors.resize(out.invariant_factors.size() + red.zero_block_size, Integer(0));
  return out;
}

inline SmithDecomposition smith_via_theorem_c(const IntPolynomial& f, const IntPolynomial& g) {
  return smith_from_reduction(theorem_c_reduce(f, g));
}

/// Last nonzero determinantal divisor of f(C_g): |res(F, G)|.
inline Integer last_nonzero_determinantal_divisor(const IntPolynomial& f,
                                                  const IntPolynomial& g) {
  detail::require_positive_degree(g);
  if (mod_monic(f, g).is_zero()) throw AllZeroMatrix();
  const TheoremCReduction red = theorem_c_reduce(f, g);
  return abs_value(resultant(red.f_quot, red.g_quot));
}

/// gamma_1 of f(C_g) is the content of f mod g.
inline Integer first_determinantal_divisor(const IntPolynomial& f, const IntPolynomial& g) {
  detail::require_positive_degree(g);
  return content(mod_monic(f, g));
}

// ---------------------------------------------------------------------------
// Splittings along coprime resultants.

namespace detail {

inline void require_coprime_resultants(const Integer& r1, const Integer& r2,
                                       const char* context) {
  const Integer g = gcd(r1, r2);
  if (g != 1)
    throw ResultantsNotCoprime(std::string(context) + ": |resultants| " +
                               abs_value(r1).get_str() + " and " + abs_value(r2).get_str() +
                               " share the factor " + g.get_str());
}

inline SmithDecomposition decomposition_from_factors(std::vector<Integer> factors) {
  SmithDecomposition out;
  out.rank = count_nonzero(factors);
  out.invariant_factors = std::move(factors);
  return out;
}

}  // namespace detail

/// Smith form of (f1 f2)(C_g) as the entrywise product of those of f1(C_g)
/// and f2(C_g); requires coprime |res(f1, g)| and |res(f2, g)|.
inline SmithDecomposition smith_product_split(const IntPolynomial& f1, const IntPolynomial& f2,
                                              const IntPolynomial& g) {
  detail::require_positive_degree(g);
  detail::require_coprime_resultants(resultant(f1, g), resultant(f2, g), "smith_product_split");
  const auto s1 = smith_form(poly_of_companion(f1, g)).invariant_factors;
  const auto s2 = smith_form(poly_of_companion(f2, g)).invariant_factors;
  std::vector<Integer> product(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) product[i] = s1[i] * s2[i];
  return detail::decomposition_from_factors(std::move(product));
}

/// Smith form of f(C_{g1 g2}) from f(C_{g1}) (+) f(C_{g2}); requires coprime
/// |res(f, g1)| and |res(f, g2)|.
inline SmithDecomposition smith_direct_sum_split(const IntPolynomial& f, const IntPolynomial& g1,
                                                 const IntPolynomial& g2) {
  detail::require_positive_degree(g1);
  detail::require_positive_degree(g2);
  detail::require_coprime_resultants(resultant(f, g1), resultant(f, g2),
                                     "smith_direct_sum_split");
  auto merged = smith_form(poly_of_companion(f, g1)).invariant_factors;
  const auto s2 = smith_form(poly_of_companion(f, g2)).invariant_factors;
  merged.insert(merged.end(), s2.begin(), s2.end());
  return detail::decomposition_from_factors(diagonal_smith_chain(std::move(merged)));
}

// ---------------------------------------------------------------------------
// Cyclotomic closed form.

/// p if q = p^k with p prime and k >= 1, otherwise 0.
inline std::size_t prime_power_base(std::size_t q) {
  if (q < 2) return 0;
  std::size_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1 ? p : 0;
}

/// Smith form of Phi_m(C_{Phi_n}) for m >= n >= 1, of size phi(n):
/// zero if m = n, p I if m = n p^k, the identity otherwise.
inline SmithDecomposition cyclotomic_companion_smith(std::size_t m, std::size_t n) {
  if (n < 1 || m < n) throw OutOfRange("cyclotomic_companion_smith requires m >= n >= 1");
  Integer value = 1;
  if (m == n)
    value = 0;
  else if (m % n == 0)
    if (const std::size_t p = prime_power_base(m / n); p != 0) value = static_cast<unsigned long>(p);
  return detail::decomposition_from_factors(std::vector<Integer>(euler_phi(n), value));
}

// ---------------------------------------------------------------------------
// Torus knots.

namespace detail {

inline void require_coprime_torus(std::size_t r, std::size_t s) {
  if (r < 2 || s < 2) throw OutOfRange("torus knot parameters must be at least 2");
  if (std::gcd(r, s) != 1)
    throw NotCoprime("gcd(" + std::to_string(r) + ", " + std::to_string(s) + ") != 1");
}

}  // namespace detail

/// Alexander polynomial of the torus knot K(r, s):
/// (t^{rs} - 1)(t - 1) / ((t^s - 1)(t^r - 1)).
inline IntPolynomial alexander_polynomial(std::size_t r, std::size_t s) {
  detail::require_coprime_torus(r, s);
  const IntPolynomial numerator =
      IntPolynomial::power_minus_one(r * s) * IntPolynomial::power_minus_one(1);
  const IntPolynomial denominator =
      IntPolynomial::power_minus_one(s) * IntPolynomial::power_minus_one(r);
  return exact_quotient(numerator, denominator);
}

/// The n x n circulant f(C_{t^n - 1}) of the Alexander polynomial.
inline IntMatrix torus_circulant(std::size_t r, std::size_t s, std::size_t n) {
  if (n < 2) throw OutOfRange("torus circulant needs n >= 2");
  return poly_of_companion(alexander_polynomial(r, s), IntPolynomial::power_minus_one(n));
}

/// Closed-form Smith form of the torus-knot circulant. With x = (r, n) and
/// y = (s, n), ordered so x <= y, the non-unit factors are r/x (y - x times),
/// rs/(xy) (x - 1 times) and 0 ((x - 1)(y - 1) times).
inline SmithDecomposition torus_circulant_smith(std::size_t r, std::size_t s, std::size_t n) {
  detail::require_coprime_torus(r, s);
  if (n < 2) throw OutOfRange("torus_circulant_smith needs n >= 2");
  std::size_t x = std::gcd(r, n);
  std::size_t y = std::gcd(s, n);
  if (x > y) {
    std::swap(r, s);
    std::swap(x, y);
  }
  const std::size_t repeats_r = y - x;
  const std::size_t repeats_rs = x - 1;
  const std::size_t zeros = (x - 1) * (y - 1);
  const std::size_t special = repeats_r + repeats_rs + zeros;
  if (special > n) throw std::logic_error("torus_circulant_smith: factor count exceeds n");

  std::vector<Integer> factors(n - special, Integer(1));
  const Integer r_over_x = static_cast<unsigned long>(r / x);
  const Integer rs_over_xy = static_cast<unsigned long>((r / x) * (s / y));
  factors.insert(factors.end(), repeats_r, r_over_x);
  factors.insert(factors.end(), repeats_rs, rs_over_xy);
  factors.insert(factors.end(), zeros, Integer(0));
  factors = diagonal_smith_chain(std::move(factors));
  if (factors.size() != n || !is_divisor_chain(factors))
    throw std::logic_error("torus_circulant_smith: invalid chain");
  return detail::decomposition_from_factors(std::move(factors));
}

}  // namespace companion_smith
