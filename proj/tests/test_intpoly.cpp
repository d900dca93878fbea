#include "companion_smith/intpoly.hpp"
#include "companion_smith/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace companion_smith;

namespace {

IntPolynomial P(const char* text) { return parse_polynomial(text); }

}  // namespace

TEST(IntPolynomial, CanonicalForm) {
  EXPECT_TRUE(IntPolynomial({0, 0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial({1, 2, 0, 0}).coeffs().size(), 2u);
  EXPECT_EQ(IntPolynomial().degree(), IntPolynomial::kZeroDegree);
  EXPECT_LT(IntPolynomial().degree(), IntPolynomial{7}.degree());
  EXPECT_EQ(IntPolynomial({-1, 0, 0, 1}).degree(), 3);
}

TEST(IntPolynomial, Add) {
  EXPECT_EQ(P("t + 1") + P("t - 1"), P("2t"));
  EXPECT_EQ(P("t^2 + 3") + IntPolynomial(), P("t^2 + 3"));
  EXPECT_EQ(P("t^2 - 1") + P("1"), P("t^2"));
  EXPECT_TRUE((P("t^3 - t") + P("t - t^3")).is_zero());
}

TEST(IntPolynomial, Mul) {
  EXPECT_EQ(P("t - 1") * P("t + 1"), P("t^2 - 1"));
  EXPECT_TRUE((P("t^2 + 5") * IntPolynomial()).is_zero());
  EXPECT_EQ(P("t^2 + t + 1") * P("t - 1"), P("t^3 - 1"));
  EXPECT_EQ((P("2t^3 + 1") * P("3t^2 - t")).degree(), 5);
}

TEST(IntPolynomial, DivModMonic) {
  auto [q1, r1] = divmod_monic(P("t^3"), P("t^2 - 1"));
  EXPECT_EQ(q1, P("t"));
  EXPECT_EQ(r1, P("t"));
  auto [q2, r2] = divmod_monic(P("t^2 - 1"), P("t^2 - 1"));
  EXPECT_EQ(q2, P("1"));
  EXPECT_TRUE(r2.is_zero());
  auto [q3, r3] = divmod_monic(P("2t + 2"), P("t^2 - 1"));
  EXPECT_TRUE(q3.is_zero());
  EXPECT_EQ(r3, P("2t + 2"));
}

TEST(IntPolynomial, DivModErrors) {
  EXPECT_THROW(divmod_monic(P("t^3"), P("2t - 1")), NonMonicDivisor);
  EXPECT_THROW(divmod_monic(P("t^3"), IntPolynomial()), DivisionByZeroPolynomial);
}

TEST(IntPolynomial, DivModProperty) {
  verify::Generator gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial p = gen.polynomial(14);
    const IntPolynomial g = gen.monic(0, 7);
    auto [q, r] = divmod_monic(p, g);
    EXPECT_EQ(q * g + r, p);
    EXPECT_LT(r.degree(), g.degree());
  }
}

TEST(IntPolynomial, Content) {
  EXPECT_EQ(content(P("6t^2 + 4t + 2")), 2);
  EXPECT_EQ(content(IntPolynomial()), 0);
  EXPECT_EQ(content(P("t^3 - 1")), 1);
  EXPECT_EQ(content(P("-6t - 9")), 3);
}

TEST(IntPolynomial, GcdWithMonic) {
  EXPECT_EQ(gcd_with_monic(P("t^2 - 1"), P("t^3 - 1")), P("t - 1"));
  EXPECT_EQ(gcd_with_monic(P("5"), P("t^3 - 1")), P("1"));
  EXPECT_EQ(gcd_with_monic(IntPolynomial(), P("t^2 + 1")), P("t^2 + 1"));
  // non-primitive f sharing a quadratic factor
  EXPECT_EQ(gcd_with_monic(P("6t^3 + 6t"), P("t^4 - 1")), P("t^2 + 1"));
  EXPECT_EQ(gcd_with_monic(P("-3t^2 + 3t"), P("t^2 - t")), P("t^2 - t"));
  EXPECT_THROW(gcd_with_monic(P("t"), P("2t^2")), NonMonicDivisor);
}

TEST(IntPolynomial, GcdSoundness) {
  verify::Generator gen(23);
  for (int trial = 0; trial < 300; ++trial) {
    // plant a common factor half the time
    const IntPolynomial z = gen.monic(0, 3, -3, 3);
    const IntPolynomial f = (trial % 2 ? z : IntPolynomial{1}) * gen.polynomial(6, -5, 5);
    const IntPolynomial g = (trial % 2 ? z : IntPolynomial{1}) * gen.monic(1, 5, -5, 5);
    const IntPolynomial d = gcd_with_monic(f, g);
    ASSERT_TRUE(d.is_monic());
    EXPECT_TRUE(divmod_monic(f, d).remainder.is_zero());
    auto [big_g, rem] = divmod_monic(g, d);
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(d * big_g, g);
    if (trial % 2) {
      EXPECT_TRUE(divmod_monic(d, z).remainder.is_zero());
    }
  }
}

TEST(IntPolynomial, Resultant) {
  // (1 - 2)(-1 - 2) over the roots +-1
  EXPECT_EQ(resultant(P("t - 2"), P("t^2 - 1")), 3);
  EXPECT_EQ(oracle::root_product(P("t - 2"), P("t^2 - 1")), 3);
  EXPECT_EQ(resultant(P("1"), P("t^5 + 3t - 7")), 1);
  EXPECT_EQ(resultant(P("t - 1"), P("t^3 - 1")), 0);
  EXPECT_EQ(resultant(P("3"), P("t^2 + 1")), 9);
  EXPECT_THROW(resultant(P("t"), P("2t + 1")), NonMonicDivisor);
}

TEST(IntPolynomial, ResultantMatchesEuclidOracle) {
  for (const auto& [f, g] : verify::random_pairs(5, 200, 7, 10))
    EXPECT_EQ(resultant(f, g), oracle::root_product(f, g)) << verify::describe(f, g);
}

TEST(IntPolynomial, ResultantGcdLink) {
  for (const auto& [f, g] : verify::random_pairs(9, 300, 6, 8))
    EXPECT_EQ(resultant(f, g) == 0, gcd_with_monic(f, g).degree() >= 1) << verify::describe(f, g);
}

TEST(IntPolynomial, CyclotomicResultants) {
  // |res(Phi_m, Phi_n)| = p^phi(n) when m = n p^k
  struct Case {
    std::size_t m, n;
    long expected;
  };
  for (const auto& c : {Case{6, 3, 4}, Case{12, 3, 4}, Case{9, 3, 9}, Case{10, 5, 16},
                        Case{8, 2, 2}, Case{18, 2, 3}, Case{7, 3, 1}, Case{15, 5, 81}, Case{14, 3, 1}})
    EXPECT_EQ(abs_value(resultant(cyclotomic(c.m), cyclotomic(c.n))), c.expected)
        << c.m << ", " << c.n;
}

TEST(IntPolynomial, Cyclotomic) {
  EXPECT_EQ(cyclotomic(1), P("t - 1"));
  EXPECT_EQ(cyclotomic(2), P("t + 1"));
  EXPECT_EQ(cyclotomic(7), P("t^6 + t^5 + t^4 + t^3 + t^2 + t + 1"));
  EXPECT_EQ(cyclotomic(6), P("t^2 - t + 1"));
  EXPECT_EQ(cyclotomic(12), P("t^4 - t^2 + 1"));
  // first coefficient of magnitude 2
  EXPECT_EQ(cyclotomic(105).coeff(7), -2);
  EXPECT_THROW(cyclotomic(0), OutOfRange);
}

TEST(IntPolynomial, CyclotomicReconstruction) {
  for (std::size_t n = 1; n <= 60; ++n) {
    IntPolynomial product{1};
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) product = product * cyclotomic(d);
    EXPECT_EQ(product, IntPolynomial::power_minus_one(n)) << n;
    EXPECT_EQ(static_cast<std::size_t>(cyclotomic(n).degree()), euler_phi(n));
  }
}

TEST(IntPolynomial, ComposePower) {
  EXPECT_EQ(compose_power(P("t - 1"), 3), P("t^3 - 1"));
  EXPECT_EQ(compose_power(P("t^2 + 2t + 3"), 1), P("t^2 + 2t + 3"));
  EXPECT_EQ(compose_power(P("t^2 + 1"), 2), P("t^4 + 1"));
  EXPECT_EQ(compose_power(cyclotomic(3), 3), cyclotomic(9));
}

// f(t)^{p^k} - f(t^{p^k}) vanishes mod p.
TEST(IntPolynomial, FrobeniusCongruence) {
  verify::Generator gen(71);
  for (int trial = 0; trial < 60; ++trial) {
    const IntPolynomial f = gen.polynomial(5);
    for (unsigned long p : {2UL, 3UL, 5UL})
      for (unsigned long k : {1UL, 2UL}) {
        const unsigned long q = k == 1 ? p : p * p;
        const IntPolynomial diff = pow(f, q) - compose_power(f, q);
        for (const auto& c : diff.coeffs()) ASSERT_TRUE(divides(Integer(p), c)) << to_string(f);
      }
  }
}

// cont(f) divides cont(f mod g).
TEST(IntPolynomial, ContentOfRemainder) {
  verify::Generator gen(72);
  for (int trial = 0; trial < 300; ++trial) {
    const Integer scale = gen.uniform(1, 12);
    const IntPolynomial f = scale * gen.polynomial(10);
    const IntPolynomial g = gen.monic(1, 6);
    EXPECT_TRUE(divides(content(f), content(mod_monic(f, g))));
  }
}

TEST(PolynomialText, ParseForms) {
  EXPECT_EQ(P("-1,0,0,1"), P("t^3 - 1"));
  EXPECT_EQ(P(" t ^ 3-1 "), P("t^3 - 1"));
  EXPECT_EQ(P("3*t^2 - t + 4"), IntPolynomial({4, -1, 3}));
  EXPECT_EQ(P("-t"), IntPolynomial({0, -1}));
  EXPECT_EQ(P("7"), IntPolynomial{7});
  EXPECT_EQ(P("t + t"), P("2t"));
  EXPECT_TRUE(P("0").is_zero());
}

TEST(PolynomialText, Emit) {
  EXPECT_EQ(to_string(P("-1,0,0,1")), "t^3 - 1");
  EXPECT_EQ(to_string(IntPolynomial({4, -1, 3})), "3t^2 - t + 4");
  EXPECT_EQ(to_string(IntPolynomial({0, -2})), "-2t");
  EXPECT_EQ(to_string(IntPolynomial()), "0");
  EXPECT_EQ(to_string(IntPolynomial{-5}), "-5");
}

TEST(PolynomialText, RoundTrip) {
  verify::Generator gen(3);
  for (int i = 0; i < 100; ++i) {
    const IntPolynomial p = gen.polynomial(9, -20, 20);
    EXPECT_EQ(parse_polynomial(to_string(p)), p);
  }
}

TEST(PolynomialText, Errors) {
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("t^"), ParseError);
  EXPECT_THROW(P("1,,2"), ParseError);
  EXPECT_THROW(P("2x + 1"), ParseError);
  try {
    P("t^2 + + 1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 7u);  // the second '+'
  }
}
