#include <gtest/gtest.h>

#include <algorithm>

#include "crnreduce/crnparse.hpp"
#include "crnreduce/eliminate.hpp"
#include "fixtures.hpp"

namespace crnreduce {
namespace {

using testing::load_fixture;
using testing::rf;

const Symbol T1 = Symbol::total("T1");

TEST(Eliminate, RunningExamplePhi) {
  ReactionNetwork net = load_fixture("runex.crn");
  ElimGraph g = build_elimination_graph(net, {"S4", "S5"});
  EliminationResult r = eliminate(g, {TotalValue(T1)});
  ASSERT_EQ(r.factors.size(), 1u);
  EXPECT_TRUE(r.factors[0].q.equivalent(rf("T1/(v1 + v2 + v3)")));
  EXPECT_TRUE(r.phi[0].equivalent(rf("T1*(v2 + v3)/(v1 + v2 + v3)")));
  EXPECT_TRUE(r.phi[1].equivalent(rf("T1*v1/(v1 + v2 + v3)")));
  EXPECT_TRUE(verify_steady_state(net, {"S4", "S5"}, r).ok);
}

TEST(Eliminate, StarComponentHasNoTotal) {
  ReactionNetwork net = parse_network("0 -> U ; k0\nU -> A ; k1\n");
  ElimGraph g = build_elimination_graph(net, {"U"});
  EliminationResult r = eliminate(g, {std::nullopt});
  EXPECT_TRUE(r.factors[0].with_star);
  EXPECT_TRUE(r.phi[0].equivalent(rf("k0/k1")));
  EXPECT_TRUE(verify_steady_state(net, {"U"}, r).ok);
}

TEST(Eliminate, TotalMismatchesThrow) {
  ElimGraph closed = build_elimination_graph(load_fixture("runex.crn"), {"S4", "S5"});
  try {
    component_factor(closed, 0, std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::total_required);
  }
  ElimGraph open = build_elimination_graph(parse_network("0 -> U ; k0\nU -> A ; k1\n"), {"U"});
  try {
    component_factor(open, 0, TotalValue(T1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::total_forbidden);
  }
}

TEST(Eliminate, NodesWithoutTreeGetZero) {
  ReactionNetwork net = load_fixture("cyclenoreact.crn");
  ElimGraph g = build_elimination_graph(net, {"U1", "U2", "U3"});
  EliminationResult r = eliminate(g, {TotalValue(T1)});
  EXPECT_TRUE(r.phi[0].is_zero());
  EXPECT_TRUE(r.phi[1].is_zero());
  EXPECT_EQ(r.phi[2], rf("T1"));
}

TEST(Eliminate, StarBlocksFactorTheStarTreeSum) {
  ReactionNetwork net = load_fixture("noncut.crn");
  ElimGraph g = build_elimination_graph(net, {"U1", "U2", "U3"});
  ASSERT_TRUE(g.has_star);
  auto blocks = star_blocks(g, 0);
  ASSERT_FALSE(blocks.empty());
  RationalFunction product(1);
  for (const auto& b : blocks) {
    EXPECT_NE(std::find(b.begin(), b.end(), g.star()), b.end());
    product = product * tree_label_sum(g, b, g.star());
  }
  EXPECT_TRUE(product.equivalent(tree_label_sum(g, g.components[0].nodes, g.star())));
  EliminationResult r = eliminate(g, {std::nullopt});
  EXPECT_TRUE(verify_steady_state(net, {"U1", "U2", "U3"}, r).ok);
}

TEST(Eliminate, NumericTotals) {
  ElimGraph g = build_elimination_graph(load_fixture("runex.crn"), {"S4", "S5"});
  EliminationResult r = eliminate(g, {TotalValue(Rational(3))});
  EXPECT_TRUE(r.phi[1].equivalent(rf("3*v1/(v1 + v2 + v3)")));
  EXPECT_EQ(to_string(TotalValue(Rational(3))), "3");
  EXPECT_EQ(to_string(TotalValue(T1)), "T1");
}

TEST(Eliminate, AssignTotalsSkipsTakenNames) {
  ElimGraph g = build_elimination_graph(load_fixture("2c1r.crn"), {"E1", "E2", "Y1", "Y2"});
  int next = 1;
  TotalAssignment a = assign_totals(g, {"T1"}, next);
  EXPECT_EQ(a.names, (std::vector<std::string>{"T2", "T3"}));
  EXPECT_EQ(next, 4);
  int again = 1;
  TotalAssignment bound = assign_totals(g, {}, again, {{"T2", TotalValue(Rational(5))}});
  EXPECT_EQ(bound.values[1], TotalValue(Rational(5)));
  int third = 1;
  EXPECT_THROW(assign_totals(g, {}, third, {{"T9", TotalValue(Rational(5))}}), Error);
}

TEST(Eliminate, UsedNamesCoverRatesAndSpecies) {
  auto names = used_names(load_fixture("runex.crn"));
  EXPECT_TRUE(names.count("v4"));
  EXPECT_TRUE(names.count("S3"));
}

}  // namespace
}  // namespace crnreduce
