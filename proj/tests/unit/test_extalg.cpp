#include <gtest/gtest.h>

#include <array>

#include "cobalex/error.hpp"
#include "cobalex/extalg.hpp"
#include "support/oracles.hpp"

using namespace cobalex;

namespace {

MultiVector e(unsigned n, std::initializer_list<unsigned> idx) {
  std::vector<unsigned> v(idx);
  return MultiVector::basis_blade(n, v);
}

MultiVector vec(std::initializer_list<long> coords) {
  std::vector<mpz_class> v;
  for (long c : coords) v.emplace_back(c);
  return MultiVector::vector(static_cast<unsigned>(v.size()), v);
}

IntMatrix graph_lattice(const IntMatrix& f) { return vstack(IntMatrix::identity(f.rows()), f); }

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    const auto i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    const long k = rng.between(-2, 2);
    for (std::size_t r = 0; r < n; ++r) u(r, j) += k * u(r, i);
  }
  if (rng.coin() && n > 0) {
    for (std::size_t r = 0; r < n; ++r) u(r, 0) = -u(r, 0);
  }
  return u;
}

}  // namespace

TEST(Subsets, WedgeSignAndOrdering) {
  EXPECT_EQ(wedge_sign(0b01, 0b10), 1);
  EXPECT_EQ(wedge_sign(0b10, 0b01), -1);
  EXPECT_EQ(wedge_sign(0b11, 0b01), 0);
  const auto s = subsets_of_size(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), Subset{0b0011});
  EXPECT_EQ(s[1], Subset{0b0101});
  EXPECT_EQ(s.back(), Subset{0b1100});
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(subset_rank(4, s[i]), i);
  EXPECT_EQ(binomial(10u, 3u), 120u);
  EXPECT_EQ(binomial(4L, -1L), 0u);
}

TEST(Wedge, RepeatedIndexVanishes) { EXPECT_TRUE(wedge(e(3, {0}), e(3, {0})).is_zero()); }

TEST(Wedge, TranspositionSign) { EXPECT_EQ(wedge(e(3, {1}), e(3, {0})), mpq_class(-1) * e(3, {0, 1})); }

TEST(Wedge, Bilinear) { EXPECT_EQ(wedge(e(3, {0}) + e(3, {1}), e(3, {2})), e(3, {0, 2}) + e(3, {1, 2})); }

TEST(Wedge, AmbientMismatchThrows) { EXPECT_THROW(wedge(e(3, {0}), e(4, {0})), Error); }

TEST(Wedge, Associative) {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto m = oracle::random_matrix(rng, 5, 3, -3, 3);
    std::array<MultiVector, 3> v;
    for (int c = 0; c < 3; ++c) {
      std::vector<mpz_class> col;
      for (int r = 0; r < 5; ++r) col.push_back(m(r, c));
      v[c] = MultiVector::vector(5, col);
    }
    EXPECT_EQ(wedge(wedge(v[0], v[1]), v[2]), wedge(v[0], wedge(v[1], v[2])));
  }
}

TEST(Plucker, IdentityIsVolume) { EXPECT_EQ(plucker_point(IntMatrix::identity(4)), e(4, {0, 1, 2, 3})); }

TEST(Plucker, GraphOfIdentity) {
  const IntMatrix basis{{1, 0}, {0, 1}, {1, 0}, {0, 1}};
  const auto expect = e(4, {0, 1}) + e(4, {0, 3}) - e(4, {1, 2}) + e(4, {2, 3});
  EXPECT_EQ(plucker_point(basis), expect);
  EXPECT_EQ(plucker_point(basis), wedge(vec({1, 0, 1, 0}), vec({0, 1, 0, 1})));
}

TEST(Plucker, DependentColumnsThrow) {
  try {
    plucker_point(IntMatrix{{1, 1}, {2, 2}, {0, 0}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::RankDeficient);
  }
}

// Coefficient at S must be the r x r minor of the rows in S.
TEST(Plucker, CoefficientsAreMaximalMinors) {
  Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + rng.below(5), r = 1 + rng.below(n);
    const auto m = oracle::random_matrix(rng, n, r, -3, 3);
    if (rank(m) < r) continue;
    const auto p = plucker_point(m);
    std::vector<std::size_t> all(r);
    for (std::size_t c = 0; c < r; ++c) all[c] = c;
    for (const auto& rows : oracle::combinations(n, r)) {
      Subset s = 0;
      for (auto row : rows) s |= Subset{1} << row;
      EXPECT_EQ(p.coefficient(s), mpq_class(oracle::permutation_det(oracle::submatrix(m, rows, all))));
    }
  }
}

TEST(PluckerProperty, UnimodularChangeOnlyFlipsSign) {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + rng.below(6), r = 1 + rng.below(n);
    const auto m = oracle::random_matrix(rng, n, r, -2, 2);
    if (rank(m) < r) continue;
    const auto u = random_unimodular(rng, r);
    const auto p = plucker_point(m), q = plucker_point(m * u);
    const mpz_class det_u = oracle::permutation_det(u);
    ASSERT_TRUE(det_u == 1 || det_u == -1);
    EXPECT_EQ(q, mpq_class(det_u) * p);
  }
}

TEST(Correspondence, DiagonalGraph) {
  const auto gm = correspondence_map(graph_lattice(IntMatrix{{2, 0}, {0, 3}}), 2);
  EXPECT_EQ(gm.shift, 0);
  EXPECT_EQ(gm.block(0).dense(), (RatMatrix{{1}}));
  EXPECT_EQ(gm.block(1).dense(), (RatMatrix{{2, 0}, {0, 3}}));
  EXPECT_EQ(gm.block(2).dense(), (RatMatrix{{6}}));
}

TEST(Correspondence, SourceOnlyLattice) {
  // Γ = U0 ⊕ 0: only the full-complement pairing survives.
  IntMatrix gamma(4, 2);
  gamma(0, 0) = 1;
  gamma(1, 1) = 1;
  const auto gm = correspondence_map(gamma, 2);
  EXPECT_EQ(gm.shift, 0);
  EXPECT_EQ(gm.block(0).dense(), (RatMatrix{{1}}));
  EXPECT_TRUE(gm.block(1).entries.empty());
  EXPECT_TRUE(gm.block(2).entries.empty());
}

TEST(Correspondence, IdentityGraphIsIdentity) {
  for (unsigned n = 0; n <= 6; n += 2) {
    EXPECT_EQ(correspondence_map(graph_lattice(IntMatrix::identity(n)), n), identity_graded(n));
  }
}

TEST(Correspondence, ShiftAndBlockShapes) {
  // r = 1 inside Q^3 ⊕ Q^2: shift n0 - r = 2, degree a lands in a - 2.
  IntMatrix gamma(5, 1);
  gamma(0, 0) = 1;
  gamma(3, 0) = 1;
  const auto gm = correspondence_map(gamma, 3);
  EXPECT_EQ(gm.shift, 2);
  for (unsigned a = 0; a <= 3; ++a) {
    EXPECT_EQ(gm.block(a).cols, binomial(3u, a));
    EXPECT_EQ(gm.block(a).rows, binomial(2L, static_cast<long>(a) - 2));
  }
}

TEST(ExteriorPower, Examples) {
  const IntMatrix f{{1, -1}, {1, 0}};
  EXPECT_EQ(induced_exterior_power(f, 1), f);
  EXPECT_EQ(induced_exterior_power(IntMatrix{{1, 1}, {0, 1}}, 2), (IntMatrix{{1}}));
  EXPECT_EQ(induced_exterior_power(f, 0).trace(), 1);
  EXPECT_EQ(induced_exterior_power(f, 1).trace(), 1);
  EXPECT_EQ(induced_exterior_power(f, 2).trace(), 1);
  EXPECT_EQ(induced_exterior_power(f, 3).rows(), 0u);
}

TEST(ExteriorPower, MatchesMinorOracle) {
  Rng rng(24);
  for (int i = 0; i < 40; ++i) {
    const std::size_t m = 1 + rng.below(5);
    const auto f = oracle::random_matrix(rng, m, m, -4, 4);
    for (std::size_t k = 0; k <= m; ++k) EXPECT_EQ(induced_exterior_power(f, k), oracle::exterior_power(f, k));
  }
}

TEST(ComposeGraded, IdentityIsNeutral) {
  const auto gm = correspondence_map(graph_lattice(IntMatrix{{2, 1}, {1, 1}}), 2);
  EXPECT_EQ(compose_graded(identity_graded(2), gm), gm);
  EXPECT_EQ(compose_graded(gm, identity_graded(2)), gm);
}

TEST(ComposeGraded, DiagonalGraphs) {
  const auto a = correspondence_map(graph_lattice(IntMatrix{{2, 0}, {0, 3}}), 2);
  const auto b = correspondence_map(graph_lattice(IntMatrix{{5, 0}, {0, 7}}), 2);
  EXPECT_EQ(compose_graded(a, b), correspondence_map(graph_lattice(IntMatrix{{10, 0}, {0, 21}}), 2));
}

TEST(ComposeGraded, DimensionMismatchThrows) {
  EXPECT_THROW(compose_graded(identity_graded(2), identity_graded(4)), Error);
}

// Λ^k(g∘f) = Λ^k(g)Λ^k(f), checked through the graph route.
TEST(ComposeGraded, FunctorialOnGraphs) {
  Rng rng(25);
  for (int i = 0; i < 30; ++i) {
    const std::size_t m = 1 + rng.below(4);
    const auto f = oracle::random_matrix(rng, m, m, -3, 3);
    const auto g = oracle::random_matrix(rng, m, m, -3, 3);
    const auto composed = compose_graded(correspondence_map(graph_lattice(f), m), correspondence_map(graph_lattice(g), m));
    for (std::size_t k = 0; k <= m; ++k)
      EXPECT_EQ(composed.block(k).dense(), to_rational(induced_exterior_power(g * f, k)));
  }
}

TEST(CorrespondenceProperty, GraphBlocksMatchExteriorPowers) {
  Rng rng(26);
  for (int i = 0; i < 60; ++i) {
    const std::size_t m = 1 + rng.below(6);
    const auto f = oracle::random_matrix(rng, m, m, -3, 3);
    const auto gm = correspondence_map(graph_lattice(f), m);
    for (std::size_t k = 0; k <= m; ++k) EXPECT_EQ(gm.block(k).dense(), to_rational(oracle::exterior_power(f, k)));
  }
}
