#include "companion_smith/json_io.hpp"
#include "companion_smith/topology.hpp"
#include "companion_smith/verify.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace companion_smith;

namespace {

std::vector<Integer> Z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

AbelianGroup group(std::initializer_list<long> torsion, std::size_t betti) {
  return AbelianGroup{Z(torsion), betti};
}

}  // namespace

TEST(Abelianization, Examples) {
  const AbelianGroup a = abelianization(IntMatrix::diagonal(Z({2, 0})));
  EXPECT_EQ(a, group({2}, 1));
  EXPECT_EQ(to_string(a), "Z_2 + Z");
  EXPECT_TRUE(abelianization(IntMatrix::identity(4)).is_trivial());
  EXPECT_EQ(to_string(abelianization(IntMatrix::identity(4))), "0");
  const AbelianGroup c = abelianization(torus_circulant(2, 9, 6));
  EXPECT_EQ(c, group({3}, 2));
  EXPECT_EQ(to_string(c), "Z_3 + Z^2");
}

TEST(Abelianization, NonSquareRelations) {
  // three generators, one relator: Z^2 + Z_{gcd}
  EXPECT_EQ(abelianization(IntMatrix{{4}, {6}, {0}}), group({2}, 2));
  // one generator, two relators
  EXPECT_EQ(abelianization(IntMatrix{{4, 6}}), group({2}, 0));
  EXPECT_EQ(abelianization(IntMatrix(3, 0)), group({}, 3));
}

TEST(AbelianGroup, CanonicalFromPrimaryParts) {
  // Z_2 + Z_3 is Z_6; Z_4 + Z_6 is Z_2 + Z_12
  EXPECT_EQ(AbelianGroup::from_invariant_factors(Z({2, 3}), 2), group({6}, 0));
  EXPECT_EQ(AbelianGroup::from_invariant_factors(Z({6, 4, 1}), 3), group({2, 12}, 0));
  EXPECT_EQ(AbelianGroup::from_invariant_factors(Z({1, 0, 5}), 4), group({5}, 2));
  EXPECT_THROW(AbelianGroup::from_invariant_factors(Z({2, 3}), 1), OutOfRange);
}

TEST(AbelianGroup, Rendering) {
  EXPECT_EQ(to_string(group({2, 2, 6}, 2)), "Z_2^2 + Z_6 + Z^2");
  EXPECT_EQ(to_string(group({}, 1)), "Z");
  EXPECT_EQ(to_string(group({}, 3)), "Z^3");
  EXPECT_EQ(to_string(group({7}, 0)), "Z_7");
  EXPECT_EQ(to_string(group({}, 0)), "0");
}

TEST(AbelianGroup, Json) {
  const nlohmann::json j = to_json(group({2, 2}, 2));
  EXPECT_EQ(j.dump(), R"({"betti":2,"torsion":[2,2]})");
  const AbelianGroup big{{Integer("1000000000000000000000")}, 0};
  EXPECT_EQ(to_json(big)["torsion"][0], "1000000000000000000000");
}

TEST(CyclicPresentation, Representer) {
  const CyclicPresentationData d{3, Z({1, 1, 0})};
  const std::vector<Integer> row = Z({1, 1, 0});
  EXPECT_EQ(representer_circulant(d), circulant(row));
  EXPECT_EQ(representer_polynomial(d), IntPolynomial({1, 1}));
  EXPECT_EQ(representer_circulant(d),
            poly_of_companion(representer_polynomial(d), IntPolynomial::power_minus_one(3)));
  EXPECT_EQ(representer_circulant({1, Z({-4})}), (IntMatrix{{-4}}));
  EXPECT_EQ(representer_circulant({2, Z({0, 0})}), IntMatrix(2, 2));
  EXPECT_THROW(representer_circulant({2, Z({1})}), OutOfRange);
  EXPECT_THROW(representer_circulant({0, {}}), OutOfRange);
}

TEST(CyclicPresentation, FromPolynomial) {
  // t^4 + 2t + 3 mod t^3 - 1 is 3t + 3
  const CyclicPresentationData d = cyclic_data_from_polynomial(IntPolynomial({3, 2, 0, 0, 1}), 3);
  EXPECT_EQ(d.n, 3u);
  EXPECT_EQ(d.exponent_sums, Z({3, 3, 0}));
}

TEST(Brieskorn, Examples) {
  const AbelianGroup poincare = brieskorn_homology(2, 3, 5);
  EXPECT_TRUE(poincare.is_trivial());
  EXPECT_EQ(to_string(poincare), "0");
  EXPECT_EQ(to_string(brieskorn_homology(2, 9, 6)), "Z_3 + Z^2");
  EXPECT_EQ(brieskorn_homology(4, 3, 6), group({2, 2}, 2));
  EXPECT_EQ(to_string(brieskorn_homology(4, 3, 6)), "Z_2^2 + Z^2");
  EXPECT_EQ(brieskorn_homology_by_elimination(4, 3, 6), group({2, 2}, 2));
}

TEST(Brieskorn, Errors) {
  EXPECT_THROW(brieskorn_homology(2, 4, 5), NotCoprime);
  EXPECT_THROW(brieskorn_homology(2, 3, 1), OutOfRange);
  EXPECT_THROW(brieskorn_homology(1, 3, 5), OutOfRange);
}

// The closed form against the relation circulant, the triviality law and the
// Betti law over the full grid.
TEST(Brieskorn, FormulaMatchesEliminationOverGrid) {
  for (std::size_t r = 2; r <= 9; ++r)
    for (std::size_t s = 2; s <= 9; ++s) {
      if (r == s || std::gcd(r, s) != 1) continue;
      for (std::size_t n = 2; n <= 12; ++n) {
        const AbelianGroup h = brieskorn_homology(r, s, n);
        const IntMatrix relations = representer_circulant(
            cyclic_data_from_polynomial(alexander_polynomial(r, s), n));
        EXPECT_EQ(h, abelianization(relations)) << r << ", " << s << ", " << n;
        const bool pairwise = std::gcd(r, n) == 1 && std::gcd(s, n) == 1;
        EXPECT_EQ(h.is_trivial(), pairwise);
        EXPECT_EQ(h.betti, (std::gcd(r, n) - 1) * (std::gcd(s, n) - 1));
      }
    }
}

// With r = 2, x is 1 or 2 depending on the parity of n.
TEST(Brieskorn, TwoFoldBranch) {
  for (std::size_t s = 3; s <= 15; s += 2)
    for (std::size_t n = 2; n <= 12; ++n) {
      const AbelianGroup h = brieskorn_homology(2, s, n);
      const std::size_t y = std::gcd(s, n);
      if (n % 2 == 1) {
        // x = 1: only Z_2^{y-1}
        EXPECT_EQ(h, AbelianGroup::from_invariant_factors(std::vector<Integer>(y - 1, Integer(2)),
                                                          y - 1));
      } else {
        // x = 2: the factors r/x are units, leaving Z_{s/y} + Z^{y-1}
        const Integer t = static_cast<unsigned long>(s / y);
        EXPECT_EQ(h.betti, y - 1);
        EXPECT_EQ(h.torsion, t == 1 ? std::vector<Integer>{} : std::vector<Integer>{t});
      }
    }
}
