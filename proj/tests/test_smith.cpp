#include "companion_smith/smith.hpp"
#include "companion_smith/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace companion_smith;

namespace {

std::vector<Integer> Z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

IntMatrix diag(std::initializer_list<long> v) { return IntMatrix::diagonal(Z(v)); }

/// Product of random elementary operations: swaps, sign flips, and adding a
/// small multiple of one row to another.
IntMatrix random_unimodular(verify::Generator& gen, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    const auto i = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(n) - 1));
    IntMatrix e = IntMatrix::identity(n);
    switch (gen.uniform(0, 2)) {
      case 0:
        e(i, i) = 0;
        e(j, j) = 0;
        e(i, j) = 1;
        e(j, i) = 1;
        if (i == j) e(i, i) = 1;
        break;
      case 1:
        e(i, i) = -1;
        break;
      default:
        if (i != j) e(i, j) = gen.uniform(-3, 3);
    }
    u = e * u;
  }
  return u;
}

std::vector<Integer> minor_oracle_factors(const IntMatrix& m) {
  return invariant_factors_from_divisors(
      determinantal_divisors(m, std::min(m.rows(), m.cols())));
}

}  // namespace

TEST(SmithForm, Examples) {
  EXPECT_EQ(smith_form(IntMatrix(2, 3)).invariant_factors, Z({0, 0}));
  EXPECT_EQ(smith_form(IntMatrix(2, 3)).rank, 0u);
  EXPECT_EQ(smith_form(diag({4, 6})).invariant_factors, Z({2, 12}));
  EXPECT_EQ(minor_oracle_factors(diag({4, 6})), Z({2, 12}));
  const std::vector<Integer> row = Z({1, 1, 0});
  const IntMatrix c = circulant(row);
  EXPECT_EQ(smith_form(c).invariant_factors, Z({1, 1, 2}));
  EXPECT_EQ(oracle::cofactor_determinant(c), 2);
}

TEST(SmithForm, EdgeShapes) {
  EXPECT_TRUE(smith_form(IntMatrix(0, 0)).invariant_factors.empty());
  EXPECT_TRUE(smith_form(IntMatrix(0, 3)).invariant_factors.empty());
  EXPECT_EQ(smith_form(IntMatrix{{-7}}).invariant_factors, Z({7}));
  EXPECT_EQ(smith_form(IntMatrix{{6, 10, 15}}).invariant_factors, Z({1}));
  EXPECT_EQ(smith_form(IntMatrix{{4}, {6}}).invariant_factors, Z({2}));
  EXPECT_EQ(smith_form(diag({0, 3, 0, 2})).invariant_factors, Z({1, 6, 0, 0}));
  EXPECT_EQ(smith_form(diag({2, 2, 4})).invariant_factors, Z({2, 2, 4}));
}

TEST(SmithForm, TransformsOnlyWhenRequested) {
  const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithDecomposition plain = smith_form(m);
  EXPECT_FALSE(plain.left.has_value());
  EXPECT_FALSE(plain.right.has_value());
  const SmithDecomposition full = smith_form(m, true);
  ASSERT_TRUE(full.left && full.right);
  EXPECT_EQ(full.invariant_factors, Z({2, 6, 12}));
  EXPECT_EQ(*full.left * m * *full.right, IntMatrix::diagonal(full.invariant_factors));
}

TEST(SmithForm, Deterministic) {
  verify::Generator gen(90);
  for (int i = 0; i < 20; ++i) {
    const IntMatrix m = gen.matrix(4, 5);
    const SmithDecomposition a = smith_form(m, true);
    const SmithDecomposition b = smith_form(m, true);
    EXPECT_EQ(a.invariant_factors, b.invariant_factors);
    EXPECT_EQ(*a.left, *b.left);
    EXPECT_EQ(*a.right, *b.right);
  }
}

TEST(SmithForm, MatchesMinorOracle) {
  verify::Generator gen(91);
  for (int i = 0; i < 300; ++i) {
    const auto rows = static_cast<std::size_t>(gen.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(gen.uniform(1, 6));
    // small entry ranges make repeated factors and rank drops common
    const long bound = i % 2 ? 9 : 2;
    const IntMatrix m = gen.matrix(rows, cols, -bound, bound);
    EXPECT_EQ(smith_form(m).invariant_factors, minor_oracle_factors(m)) << to_text(m);
  }
}

TEST(SmithForm, TransformValidity) {
  verify::Generator gen(92);
  for (int i = 0; i < 200; ++i) {
    const auto rows = static_cast<std::size_t>(gen.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(gen.uniform(1, 6));
    const IntMatrix m = gen.matrix(rows, cols);
    const SmithDecomposition snf = smith_form(m, true);
    const auto& s = snf.invariant_factors;
    ASSERT_EQ(s.size(), std::min(rows, cols));
    EXPECT_TRUE(is_divisor_chain(s));
    IntMatrix d(rows, cols);
    for (std::size_t k = 0; k < s.size(); ++k) d(k, k) = s[k];
    EXPECT_EQ(*snf.left * m * *snf.right, d) << to_text(m);
    EXPECT_TRUE(is_unimodular(*snf.left));
    EXPECT_TRUE(is_unimodular(*snf.right));
  }
}

TEST(SmithForm, InvariantUnderUnimodularEquivalence) {
  verify::Generator gen(93);
  for (int i = 0; i < 150; ++i) {
    const auto rows = static_cast<std::size_t>(gen.uniform(1, 5));
    const auto cols = static_cast<std::size_t>(gen.uniform(1, 5));
    const IntMatrix m = gen.matrix(rows, cols, -5, 5);
    const IntMatrix u = random_unimodular(gen, rows);
    const IntMatrix v = random_unimodular(gen, cols);
    ASSERT_TRUE(is_unimodular(u));
    EXPECT_EQ(smith_form(u * m * v).invariant_factors, smith_form(m).invariant_factors);
  }
}

TEST(SmithForm, RankConsistency) {
  verify::Generator gen(94);
  for (int i = 0; i < 200; ++i) {
    const auto rows = static_cast<std::size_t>(gen.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(gen.uniform(1, 6));
    IntMatrix m = gen.matrix(rows, cols, -3, 3);
    if (rows >= 2 && i % 2) m.set_block(1, 0, Integer(2) * m.block(0, 0, 1, cols));
    const SmithDecomposition snf = smith_form(m);
    EXPECT_EQ(snf.rank, count_nonzero(snf.invariant_factors));
    EXPECT_EQ(snf.rank, rank(m));
  }
}

TEST(DeterminantalDivisors, Examples) {
  EXPECT_EQ(determinantal_divisors(IntMatrix::identity(3), 3), Z({1, 1, 1}));
  EXPECT_EQ(determinantal_divisors(diag({4, 6}), 2), Z({2, 24}));
  EXPECT_EQ(determinantal_divisors(diag({2, 2}), 2), Z({2, 4}));
  EXPECT_EQ(determinantal_divisors(diag({3, 0}), 2), Z({3, 0}));
  EXPECT_EQ(determinantal_divisors(IntMatrix(2, 2), 2), Z({0, 0}));
  EXPECT_EQ(determinantal_divisors(diag({4, 6}), 1), Z({2}));
}

TEST(DeterminantalDivisors, Limits) {
  EXPECT_THROW(determinantal_divisors(IntMatrix::identity(2), 3), OutOfRange);
  EXPECT_THROW(determinantal_divisors(IntMatrix::identity(9), 1), TooLarge);
  EXPECT_NO_THROW(determinantal_divisors(IntMatrix::identity(9), 1, 9));
  EXPECT_NO_THROW(determinantal_divisors(IntMatrix(3, 12), 3));
}

TEST(DeterminantalDivisors, CapFromEnvironment) {
  ::unsetenv("COMPANION_SMITH_MINOR_CAP");
  EXPECT_EQ(minor_cap_from_env(), kDefaultMinorCap);
  ::setenv("COMPANION_SMITH_MINOR_CAP", "5", 1);
  EXPECT_EQ(minor_cap_from_env(), 5u);
  ::unsetenv("COMPANION_SMITH_MINOR_CAP");
}

TEST(DeterminantalDivisors, MatchCofactorMinors) {
  // gamma_n of a square matrix is |det|
  verify::Generator gen(95);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 5));
    const IntMatrix m = gen.matrix(n, n);
    EXPECT_EQ(determinantal_divisors(m, n).back(), abs_value(oracle::cofactor_determinant(m)));
  }
}

TEST(InvariantFactorsFromDivisors, Examples) {
  EXPECT_EQ(invariant_factors_from_divisors(Z({2, 24})), Z({2, 12}));
  EXPECT_EQ(invariant_factors_from_divisors(Z({1, 1, 1})), Z({1, 1, 1}));
  EXPECT_EQ(invariant_factors_from_divisors(Z({3, 0})), Z({3, 0}));
  EXPECT_EQ(invariant_factors_from_divisors(Z({0, 0})), Z({0, 0}));
  EXPECT_TRUE(invariant_factors_from_divisors(std::vector<Integer>{}).empty());
}

TEST(InvariantFactorsFromDivisors, RejectsBadChains) {
  EXPECT_THROW(invariant_factors_from_divisors(Z({2, 3})), InvalidDivisorChain);
  EXPECT_THROW(invariant_factors_from_divisors(Z({0, 4})), InvalidDivisorChain);
  EXPECT_THROW(invariant_factors_from_divisors(Z({-2, 4})), InvalidDivisorChain);
  // ratios must themselves chain: (2, 4, 8) gives (2, 2, 2), but (2, 12, 24)
  // gives (2, 6, 2)
  EXPECT_EQ(invariant_factors_from_divisors(Z({2, 4, 8})), Z({2, 2, 2}));
  EXPECT_THROW(invariant_factors_from_divisors(Z({2, 12, 24})), InvalidDivisorChain);
}

TEST(DivisorChain, Helpers) {
  EXPECT_TRUE(is_divisor_chain(Z({1, 2, 6, 0, 0})));
  EXPECT_FALSE(is_divisor_chain(Z({2, 3})));
  EXPECT_FALSE(is_divisor_chain(Z({0, 2})));
  EXPECT_FALSE(is_divisor_chain(Z({-1, 2})));
  EXPECT_EQ(diagonal_smith_chain(Z({1, 3, 1, 2})), Z({1, 1, 1, 6}));
  EXPECT_EQ(diagonal_smith_chain(Z({0, 4, 6})), Z({2, 12, 0}));
  EXPECT_EQ(diagonal_smith_chain(Z({2, 2, 3})), Z({1, 2, 6}));
  verify::Generator gen(96);
  for (int i = 0; i < 100; ++i) {
    std::vector<Integer> v(static_cast<std::size_t>(gen.uniform(1, 6)));
    for (auto& x : v) x = gen.uniform(0, 30);
    EXPECT_EQ(diagonal_smith_chain(v), smith_form(IntMatrix::diagonal(v)).invariant_factors);
  }
}
