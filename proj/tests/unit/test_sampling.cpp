#include <gtest/gtest.h>

#include "cobalex/sampling.hpp"
#include "support/oracles.hpp"

using namespace cobalex;

TEST(Rng, DeterministicAndBounded) {
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_LT(x, 7u);
    const long y = a.between(-3, 3);
    b.between(-3, 3);
    EXPECT_GE(y, -3);
    EXPECT_LE(y, 3);
  }
}

// First outputs of std::mt19937_64 with the default seed are fixed by the standard.
TEST(Rng, EngineSequenceIsStandard) {
  Rng r(5489u);
  for (int i = 0; i < 9999; ++i) r.next();
  EXPECT_EQ(r.next(), 9981545732273789042ULL);
}

TEST(Transvection, IsSymplectic) {
  for (unsigned g = 1; g <= 4; ++g) {
    for (const auto& v : transvection_directions(g)) {
      EXPECT_TRUE(is_symplectic(transvection(g, v)));
      EXPECT_EQ(transvection(g, v, 1) * transvection(g, v, -1), IntMatrix::identity(2 * g));
    }
    EXPECT_EQ(transvection_directions(g).size(), 3 * g - 1);
  }
}

TEST(RandomSymplectic, WordsAreSymplecticAndSeeded) {
  Rng a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    const unsigned g = 1 + i % 3;
    const IntMatrix m = random_symplectic(g, 12, a);
    EXPECT_TRUE(is_symplectic(m));
    EXPECT_EQ(m, random_symplectic(g, 12, b));
  }
}

TEST(RandomCobordism, ValidAndRightGenera) {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    const unsigned g0 = static_cast<unsigned>(rng.below(4)), g1 = static_cast<unsigned>(rng.below(4));
    const Cobordism c = random_cobordism(g0, g1, rng);
    EXPECT_EQ(c.g0, g0);
    EXPECT_EQ(c.g1, g1);
    EXPECT_TRUE(validate(c).ok());
  }
}

TEST(RandomCobordism, SplitLagrangiansAreValidNonGraphs) {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const Cobordism c = random_split_lagrangian(2, 1, rng);
    EXPECT_TRUE(validate(c).ok());
    EXPECT_LT(rank(c.source_part()), 4u);
  }
}
