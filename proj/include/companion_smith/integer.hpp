#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace companion_smith {

using Integer = mpz_class;

inline Integer abs_value(const Integer& a) {
  Integer r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

// Non-negative gcd; gcd(0, 0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Non-negative lcm; lcm(a, 0) = 0.
inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Every integer divides 0; 0 divides only 0.
inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Exact division; the caller guarantees divides(b, a).
inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Truncating quotient (rounds toward zero).
inline Integer tdiv(const Integer& a, const Integer& b) {
  Integer r;
  mpz_tdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

inline std::vector<Integer> to_integers(const std::vector<long>& values) {
  return {values.begin(), values.end()};
}

}  // namespace companion_smith
