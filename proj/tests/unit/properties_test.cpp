#include <gtest/gtest.h>

#include <random>

#include "crnreduce/reduce.hpp"
#include "generators.hpp"
#include "properties.hpp"

namespace crnreduce::testing {
namespace {

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kInstances = 100;

void expect_ok(const PropertyOutcome& out) {
  EXPECT_GE(out.instances, kInstances) << out.name;
  EXPECT_EQ(out.failures, 0u) << out.name << "\n" << out.first_failure;
}

TEST(Properties, TreeSumsMatchMatrixTreeDeterminant) { expect_ok(check_tree_sums(kSeed, kInstances)); }

TEST(Properties, GammaIndependentOfEdge) { expect_ok(check_gamma_edge_choice(kSeed, kInstances)); }

TEST(Properties, PhiMatchesLinearSolve) { expect_ok(check_phi_against_oracle(kSeed, kInstances)); }

TEST(Properties, ReducedOdeMatchesProjection) { expect_ok(check_ode_symbolic(kSeed, kInstances)); }

TEST(Properties, PhiSumsToTotal) { expect_ok(check_phi_totals(kSeed, kInstances)); }

TEST(Properties, ReversiblePairsExcludedFromDelta) { expect_ok(check_reversible_pairs(kSeed, kInstances)); }

TEST(Properties, StandardnessPreserved) { expect_ok(check_standardness_kept(kSeed, kInstances)); }

TEST(Properties, CycleSpaceRankIdentity) { expect_ok(check_cycle_ranks(kSeed, kInstances)); }

TEST(Properties, OracleAgreesOnHandGraph) {
  // Two nodes, a <-> b with labels x, y: trees rooted at a are {b->a}.
  ReactionNetwork net;
  net.species = {"S", "A", "B"};
  Reaction r1;
  r1.id = 1;
  r1.reactant = Complex({{"A", 1}, {"S", 1}});
  r1.product = Complex({{"B", 1}});
  r1.kinetics = MassAction{Symbol::rate_constant("x")};
  Reaction r2;
  r2.id = 2;
  r2.reactant = Complex({{"B", 1}});
  r2.product = Complex({{"A", 1}, {"S", 1}});
  r2.kinetics = MassAction{Symbol::rate_constant("y")};
  net.reactions = {r1, r2};
  ElimGraph g = build_elimination_graph(net, {"A", "B"});
  EXPECT_EQ(matrix_tree_oracle(g, {0, 1}, 0), RationalFunction(Symbol::rate_constant("y")));
  EXPECT_TRUE(matrix_tree_oracle(g, {0, 1}, 1).equivalent(
      RationalFunction(Symbol::rate_constant("x")) * RationalFunction(Symbol::concentration("S"))));
}

TEST(Properties, GeneratorIsDeterministic) {
  std::mt19937_64 a(11);
  std::mt19937_64 b(11);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(structurally_equal(random_instance(a).net, random_instance(b).net));
  }
}

TEST(Properties, MutationsTouchOneCoefficient) {
  ReactionNetwork net;
  net.species = {"A", "B"};
  Reaction r;
  r.id = 1;
  r.reactant = Complex({{"A", 1}});
  r.product = Complex({{"B", 1}});
  r.kinetics = General{RationalFunction(Polynomial(Symbol::rate_constant("a")) + Polynomial(Symbol::rate_constant("b")),
                                        Polynomial(Symbol::rate_constant("c")))};
  net.reactions = {r};
  auto mutants = coefficient_mutations(net);
  ASSERT_EQ(mutants.size(), 2u);
  for (const auto& m : mutants) {
    auto diff = rate_function(m.reactions[0]) - rate_function(net.reactions[0]);
    EXPECT_EQ(diff.num().size(), 1u);
  }
}

}  // namespace
}  // namespace crnreduce::testing
