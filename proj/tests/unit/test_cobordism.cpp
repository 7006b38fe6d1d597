#include <gtest/gtest.h>

#include "cobalex/cobordism.hpp"
#include "cobalex/descriptor.hpp"
#include "cobalex/error.hpp"
#include "cobalex/sampling.hpp"

using namespace cobalex;

namespace {

const IntMatrix kTrefoil{{1, -1}, {1, 0}};
const IntMatrix kFigureEight{{2, 1}, {1, 1}};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

// Γ1 = span{(a0, 0), (0, a1)} from the transversality example.
Cobordism split_a(unsigned g) {
  IntMatrix gamma(4 * g, 2 * g);
  for (unsigned i = 0; i < g; ++i) {
    gamma(i, i) = 1;
    gamma(2 * g + i, g + i) = 1;
  }
  return {g, g, gamma};
}

}  // namespace

TEST(Validate, GraphsPass) {
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const unsigned g = 1 + static_cast<unsigned>(rng.below(3));
    EXPECT_TRUE(validate(graph_cobordism(random_symplectic(g, 8, rng))).ok());
  }
}

TEST(Validate, NonIsotropicFails) {
  const Cobordism c{1, 1, vstack(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 1}})};
  const auto r = validate(c);
  EXPECT_FALSE(r.isotropic);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.violations.empty());
  EXPECT_EQ(kind_of([&] { require_valid(c); }), ErrorKind::ValidationFailure);
}

TEST(Validate, ImprimitiveFails) {
  Cobordism c = graph_cobordism(kTrefoil);
  for (std::size_t r = 0; r < c.gamma.rows(); ++r) c.gamma(r, 0) *= 2;
  const auto rep = validate(c);
  EXPECT_FALSE(rep.primitive);
  EXPECT_TRUE(rep.isotropic);
}

TEST(Validate, ShapeAndRank) {
  EXPECT_FALSE(validate(Cobordism{1, 1, IntMatrix(4, 1)}).shape_ok);
  IntMatrix dep(4, 2);
  dep(0, 0) = dep(0, 1) = 1;
  EXPECT_FALSE(validate(Cobordism{1, 1, dep}).independent);
}

TEST(Graph, Constructions) {
  EXPECT_EQ(graph_cobordism(IntMatrix::identity(2)).gamma, vstack(IntMatrix::identity(2), IntMatrix::identity(2)));
  const auto c = graph_cobordism(kTrefoil);
  EXPECT_EQ(c.g0, 1u);
  EXPECT_EQ(c.g1, 1u);
  EXPECT_TRUE(validate(c).ok());
  EXPECT_EQ(kind_of([] { graph_cobordism(IntMatrix{{2, 0}, {0, 1}}); }), ErrorKind::NotSymplectic);
  EXPECT_EQ(kind_of([] { graph_cobordism(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }), ErrorKind::NotSymplectic);
}

TEST(Elementary, Handles) {
  const auto z0 = elementary_z(0);
  EXPECT_EQ(z0.g0, 0u);
  EXPECT_EQ(z0.g1, 1u);
  EXPECT_EQ(z0.gamma, (IntMatrix{{1}, {0}}));
  for (unsigned g = 0; g <= 4; ++g) {
    EXPECT_TRUE(validate(elementary_z(g)).ok());
    EXPECT_TRUE(validate(elementary_zprime(g)).ok());
    EXPECT_EQ(elementary_z(g).gamma.cols(), 2 * g + 1);
    EXPECT_EQ(elementary_zprime(g).g0, g + 1);
  }
}

TEST(Compose, GraphsMultiply) {
  Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    const unsigned g = 1 + static_cast<unsigned>(rng.below(3));
    const IntMatrix a = random_symplectic(g, 6, rng), b = random_symplectic(g, 6, rng);
    const auto d = compose_detailed(graph_cobordism(a), graph_cobordism(b));
    EXPECT_EQ(d.result, graph_cobordism(b * a));
    EXPECT_EQ(d.junction_index, 1);
    EXPECT_EQ(d.saturation_index, 1);
  }
}

TEST(Compose, CancellingHandles) {
  for (unsigned g = 0; g <= 5; ++g) {
    const auto c = compose(elementary_z(g), elementary_zprime(g));
    EXPECT_TRUE(same_lattice(c.gamma, graph_cobordism(IntMatrix::identity(2 * g)).gamma)) << "g=" << g;
    EXPECT_EQ(correspondence_map(c.gamma, c.n0()), identity_graded(2 * g));
  }
}

TEST(Compose, NonTransverseThrows) {
  EXPECT_TRUE(validate(split_a(1)).ok());
  EXPECT_EQ(kind_of([] { compose(split_a(1), split_a(1)); }), ErrorKind::TransversalityFailure);
}

TEST(Compose, GenusMismatchThrows) {
  EXPECT_EQ(kind_of([] { compose(elementary_z(1), elementary_z(1)); }), ErrorKind::GenusMismatch);
}

TEST(Compose, ResultValidatesAndIsCanonical) {
  Rng rng(43);
  for (int i = 0; i < 30; ++i) {
    const auto c = random_cobordism(static_cast<unsigned>(rng.below(3)), static_cast<unsigned>(rng.below(3)), rng);
    EXPECT_TRUE(validate(c).ok());
    EXPECT_EQ(hermite_column_form(c.gamma), c.gamma);
  }
}

TEST(CloseUp, Presentations) {
  const auto a = close_up(graph_cobordism(kTrefoil));
  EXPECT_EQ(a.sigma, IntMatrix::identity(2));
  EXPECT_EQ(a.tau, kTrefoil);
  const auto b = close_up(graph_cobordism(IntMatrix::identity(2)), kTrefoil);
  EXPECT_EQ(b.sigma, IntMatrix::identity(2));
  EXPECT_EQ(b.tau, kTrefoil);
  const auto c = close_up(compose(elementary_z(1), elementary_zprime(1)));
  EXPECT_EQ(c.sigma, c.tau);
  EXPECT_EQ(rank(c.sigma), 2u);
}

TEST(CloseUp, Errors) {
  EXPECT_EQ(kind_of([] { close_up(elementary_z(1)); }), ErrorKind::GenusMismatch);
  EXPECT_EQ(kind_of([] { close_up(graph_cobordism(kTrefoil), IntMatrix{{2, 0}, {0, 1}}); }), ErrorKind::NotSymplectic);
}

TEST(Alpha, TrefoilBlocks) {
  const auto cm = close_up(graph_cobordism(kTrefoil));
  EXPECT_EQ(alpha_map(cm, 0, Side::Low), to_rational(kTrefoil));
  EXPECT_EQ(alpha_map(cm, 0, Side::Low).trace(), 1);
  EXPECT_EQ(alpha_map(cm, 1, Side::Low), (RatMatrix{{1}}));
  EXPECT_EQ(alpha_map(cm, 1, Side::High), (RatMatrix{{1}}));
}

TEST(Alpha, IdentityGraphIsIdentity) {
  for (unsigned g = 1; g <= 3; ++g) {
    const auto c = graph_cobordism(IntMatrix::identity(2 * g));
    for (int j = 0; j <= static_cast<int>(g); ++j) {
      for (Side s : {Side::Low, Side::High}) {
        EXPECT_EQ(alpha_map(c, j, s), RatMatrix::identity(modified_exterior_dimension(g, j)));
      }
    }
  }
}

TEST(Alpha, OutOfRange) {
  const auto cm = close_up(graph_cobordism(kTrefoil));
  EXPECT_EQ(kind_of([&] { alpha_map(cm, 2, Side::Low); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([&] { alpha_map(cm, -1, Side::High); }), ErrorKind::OutOfRange);
}

TEST(AlphaProperty, LowAndHighTracesAgree) {
  Rng rng(44);
  for (int i = 0; i < 40; ++i) {
    const unsigned g = 1 + static_cast<unsigned>(rng.below(3));
    const auto cm = i % 2 ? close_up(graph_cobordism(random_symplectic(g, 10, rng))) : random_closed_manifold(g, rng);
    for (int j = 0; j <= static_cast<int>(g); ++j)
      EXPECT_EQ(alpha_map(cm, j, Side::Low).trace(), alpha_map(cm, j, Side::High).trace());
  }
}

// |Γ''| = ±|Γ2|∘|Γ1| exactly when the gluing is integrally clean; in general
// the factor is the product of the junction and saturation indices.
TEST(CompositionProperty, Functoriality) {
  Rng rng(45);
  CobordismSampler opts;
  opts.max_genus = 2;
  opts.steps = 2;
  opts.split_weight = 3;
  int exact = 0, scaled = 0;
  for (int i = 0; i < 150; ++i) {
    const unsigned g1 = static_cast<unsigned>(rng.below(3));
    const unsigned g0 = static_cast<unsigned>(rng.below(3 - g1)), g2 = static_cast<unsigned>(rng.below(3 - g1));
    const auto c1 = random_cobordism(g0, g1, rng, opts), c2 = random_cobordism(g1, g2, rng, opts);
    Composition d;
    try {
      d = compose_detailed(c1, c2);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::TransversalityFailure);
      continue;
    }
    const GradedMap lhs = compose_graded(correspondence_map(c1.gamma, c1.n0()), correspondence_map(c2.gamma, c2.n0()));
    const GradedMap rhs = correspondence_map(d.result.gamma, d.result.n0());
    const mpz_class n = d.junction_index * d.saturation_index;
    GradedMap scaled_rhs = rhs;
    for (auto& b : scaled_rhs.blocks)
      for (auto& [pos, v] : b.entries) v *= n;
    EXPECT_TRUE(lhs == scaled_rhs || lhs == scaled_rhs.negated());
    (n == 1 ? exact : scaled)++;
  }
  EXPECT_GT(exact, 50);
  EXPECT_GT(scaled, 0);
}

TEST(SameLattice, UnimodularChange) {
  const IntMatrix a{{1, 0}, {0, 1}, {1, 1}};
  const IntMatrix b{{1, 1}, {0, 1}, {1, 2}};
  EXPECT_TRUE(same_lattice(a, b));
  EXPECT_FALSE(same_lattice(a, IntMatrix{{2, 0}, {0, 1}, {2, 1}}));
}

TEST(Descriptor, Forms) {
  using nlohmann::json;
  EXPECT_EQ(cobordism_from_descriptor(json::parse(R"({"monodromy":[[1,-1],[1,0]]})")), graph_cobordism(kTrefoil));
  EXPECT_EQ(cobordism_from_descriptor(json::parse(R"({"elementary":{"kind":"Zprime","g":2}})")), elementary_zprime(2));
  const auto c = cobordism_from_descriptor(json::parse(R"({"g0":1,"g1":1,"gamma":[[1,0,1,0],[0,1,0,1]]})"));
  EXPECT_EQ(c.gamma, graph_cobordism(IntMatrix::identity(2)).gamma);
  const auto composed = cobordism_from_descriptor(
      json::parse(R"({"compose":[{"elementary":{"kind":"Z","g":1}},{"elementary":{"kind":"Zprime","g":1}}]})"));
  EXPECT_TRUE(same_lattice(composed.gamma, graph_cobordism(IntMatrix::identity(2)).gamma));
  const auto cm = closed_from_descriptor(
      json::parse(R"({"close_up":{"of":{"monodromy":[[1,0],[0,1]]},"phi":[[2,1],[1,1]]}})"));
  EXPECT_EQ(cm.tau, kFigureEight);
  EXPECT_EQ(closed_from_descriptor(json::parse(R"({"monodromy":[[2,1],[1,1]]})")).tau, kFigureEight);
  EXPECT_EQ(matrix_from_json(json::parse(R"([["-12345678901234567890", 1]])"))(0, 0),
            mpz_class("-12345678901234567890"));
}

TEST(Descriptor, RoundTrip) {
  Rng rng(46);
  for (int i = 0; i < 10; ++i) {
    const auto c = random_cobordism(static_cast<unsigned>(rng.below(3)), static_cast<unsigned>(rng.below(3)), rng);
    EXPECT_EQ(cobordism_from_descriptor(nlohmann::json::parse(to_json(c).dump())), c);
  }
}

TEST(Descriptor, Errors) {
  using nlohmann::json;
  EXPECT_EQ(kind_of([] { parse_descriptor(json::parse(R"({"foo":1})")); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { parse_descriptor(json::parse(R"({"g0":1,"g1":1,"gamma":[[1,0,1]]})")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { parse_descriptor(json::parse(R"({"elementary":{"kind":"Y","g":1}})")); }),
            ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { closed_from_descriptor(json::parse(R"({"g0":1,"g1":1,"gamma":[[1,0,0,0],[0,2,0,0]]})")); }),
            ErrorKind::ValidationFailure);
  EXPECT_EQ(kind_of([] {
              cobordism_from_descriptor(json::parse(R"({"compose":[{"g0":1,"g1":1,"gamma":[[1,0,0,0],[0,0,1,0]]},
                                                                    {"g0":1,"g1":1,"gamma":[[1,0,0,0],[0,0,1,0]]}]})"));
            }),
            ErrorKind::TransversalityFailure);
}
