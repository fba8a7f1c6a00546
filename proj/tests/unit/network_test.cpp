#include <gtest/gtest.h>

#include "crnreduce/crnparse.hpp"
#include "crnreduce/error.hpp"
#include "fixtures.hpp"

namespace crnreduce {
namespace {

using testing::load_fixture;
using testing::rf;

TEST(Complex, RejectsNegativeCoefficients) {
  EXPECT_THROW(Complex({{"A", -1}}), Error);
  EXPECT_TRUE(Complex({{"A", 0}}).empty());
}

TEST(Complex, RendersInSpeciesOrder) {
  Complex c({{"A", 2}, {"B", 1}});
  EXPECT_EQ(c.to_string({"B", "A"}), "B + 2*A");
  EXPECT_EQ(Complex().to_string({"A"}), "0");
  EXPECT_EQ(c.without({"A"}), Complex({{"B", 1}}));
}

TEST(Network, MassActionRate) {
  ReactionNetwork net = parse_network("2*A + B -> C ; k1\n");
  EXPECT_EQ(rate_function(net.reactions[0]), rf("k1*[A]^2*[B]"));
}

TEST(Network, FractionalReactantIsNotPolynomial) {
  ReactionNetwork net = parse_network("1/2*A -> B ; k1\n");
  try {
    rate_function(net.reactions[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_polynomial_rate);
  }
}

TEST(Network, StoichiometricMatrixColumns) {
  ReactionNetwork net = parse_network("A + B -> 2*C ; k1\nC -> A ; k2\n");
  RationalMatrix n = stoichiometric_matrix(net);
  ASSERT_EQ(n.size(), 3u);
  EXPECT_EQ(n[0], (std::vector<Rational>{-1, 1}));
  EXPECT_EQ(n[1], (std::vector<Rational>{-1, 0}));
  EXPECT_EQ(n[2], (std::vector<Rational>{2, -1}));
}

TEST(Network, ConservationLawsAreOrthogonalToReactions) {
  for (const char* name : {"pingpong.crn", "bibi.crn", "nsite3.crn", "temkin.crn", "exinterm.crn"}) {
    ReactionNetwork net = load_fixture(name);
    RationalMatrix n = stoichiometric_matrix(net);
    ConservationBasis basis = conservation_basis(net);
    EXPECT_EQ(basis.vectors.size() + rank(n), net.species.size()) << name;
    for (const auto& w : basis.vectors) {
      for (std::size_t j = 0; j < net.reactions.size(); ++j) {
        Rational dot = 0;
        for (std::size_t i = 0; i < w.size(); ++i) dot += w[i] * n[i][j];
        EXPECT_EQ(dot, 0) << name;
      }
    }
  }
}

TEST(Network, LawRendering) {
  EXPECT_EQ(law_to_string({"A", "B", "C"}, {1, 0, -2}), "[A] - 2*[C]");
}

TEST(Network, OdeRightHandSide) {
  ReactionNetwork net = parse_network("A -> 2*B ; k1\nB -> A ; k2\n");
  auto g = ode_rhs(net);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], rf("-k1*[A] + k2*[B]"));
  EXPECT_EQ(g[1], rf("2*k1*[A] - k2*[B]"));
}

TEST(Network, CollapseSumsParallelReactions) {
  ReactionNetwork net = parse_network("A -> B ; k1\nB -> C ; k2\nA -> B ; 2\nA -> B ; 3\n");
  ReactionNetwork c = collapse_parallel(net);
  ASSERT_EQ(c.reactions.size(), 2u);
  EXPECT_EQ(c.reactions[0].id, 1);
  EXPECT_EQ(c.reactions[1].id, 2);
  EXPECT_TRUE(rate_function(c.reactions[0]).equivalent(rf("(k1 + 5)*[A]")));
  auto g1 = ode_rhs(net);
  auto g2 = ode_rhs(c);
  for (std::size_t i = 0; i < g1.size(); ++i) EXPECT_TRUE(g1[i].equivalent(g2[i]));

  ReactionNetwork numeric = collapse_parallel(parse_network("A -> B ; 2\nA -> B ; 3\n"));
  ASSERT_TRUE(std::holds_alternative<MassAction>(numeric.reactions[0].kinetics));
}

TEST(Network, InteractingPairs) {
  ReactionNetwork net = parse_network("species: A, B, C\nB + A -> C ; k1\n");
  auto pairs = interacting_pairs(net);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], (std::pair<std::string, std::string>{"A", "B"}));
}

TEST(Network, SpeciesIndex) {
  ReactionNetwork net = parse_network("A -> B ; k1\n");
  EXPECT_EQ(net.species_index("B"), 1u);
  EXPECT_THROW(net.species_index("Z"), Error);
}

}  // namespace
}  // namespace crnreduce
