#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "crnreduce/crnparse.hpp"
#include "crnreduce/reduce.hpp"
#include "fixtures.hpp"

namespace crnreduce {
namespace {

using testing::load_fixture;
using testing::rf;

Complex single(const std::string& s) { return Complex({{s, Rational(1)}}); }

TEST(Cycles, RunningExample) {
  ReactionNetwork net = load_fixture("runex.crn");
  ElimGraph g = build_elimination_graph(net, {"S4", "S5"});
  auto cycles = enumerate_cycles(g);
  EXPECT_EQ(cycles, (std::vector<Cycle>{{0, 1}, {0, 2}, {3}}));
  EXPECT_THROW(enumerate_cycles(g, 2), Error);

  EXPECT_TRUE(cycle_change(net, g, {0, 1}).empty());
  EXPECT_EQ(cycle_change(net, g, {0, 2}), (std::map<std::string, Rational>{{"S1", -1}, {"S2", 1}}));
  EXPECT_EQ(delta(net, g, cycles), (std::vector<Cycle>{{0, 2}, {3}}));
  EXPECT_EQ(gamma(g, {0, 2}), (std::vector<InTree>{{0, 2}}));
  EXPECT_TRUE(big_pi(g, {0, 2}).equivalent(rf("v1*v3")));
  EXPECT_TRUE(big_pi(g, {3}).equivalent(rf("v4*(v2 + v3)")));
}

// With mass-action input the label product of a cycle in delta is one
// monomial: the product of its rate constants times x to the reduced reactant.
TEST(Cycles, MassActionCycleProductIsMonomial) {
  struct Case {
    const char* name;
    std::vector<std::string> u;
  };
  for (const Case& c : std::vector<Case>{{"pingpong.crn", {"E", "E*", "Y1", "Y2"}},
                                         {"bibi.crn", {"E", "EA", "EAB", "EPQ", "EQ"}},
                                         {"exinterm.crn", {"Y1", "Y2", "Y3", "Y4", "Y5"}},
                                         {"nsite2.crn", {"E", "F", "Y1", "Y2", "Z1", "Z2"}},
                                         {"temkin.crn", {"S6", "S7"}},
                                         {"2c1r.crn", {"E1", "E2", "Y1", "Y2"}}}) {
    ReactionNetwork net = load_fixture(c.name);
    ElimGraph g = build_elimination_graph(net, c.u);
    std::set<std::string> uset(c.u.begin(), c.u.end());
    for (const auto& sigma : delta(net, g, enumerate_cycles(g))) {
      RationalFunction pi = label_product(g, sigma);
      ASSERT_TRUE(pi.is_polynomial()) << c.name;
      ASSERT_EQ(pi.num().size(), 1u) << c.name;
      const Term& t = pi.num().leading();
      EXPECT_EQ(t.coefficient, 1) << c.name;
      Complex reactant;
      for (int e : sigma) {
        const Reaction& r = net.reactions[g.edges[e].reaction_id - 1];
        reactant = reactant + r.reactant.without(uset);
      }
      for (const auto& s : net.species) {
        if (uset.count(s)) continue;
        EXPECT_EQ(Rational(t.monomial.exponent(concentration_symbol(s))), reactant.coefficient(s))
            << c.name << " species " << s;
      }
      for (const auto& [sym, e] : t.monomial.factors()) {
        if (sym.kind() == SymbolKind::concentration) {
          EXPECT_FALSE(uset.count(sym.name())) << c.name;
        }
      }
    }
  }
}

TEST(Cycles, GammaDoesNotDependOnChosenEdge) {
  ReactionNetwork net = load_fixture("pingpong.crn");
  ElimGraph g = build_elimination_graph(net, {"E", "E*", "Y1", "Y2"});
  for (const auto& sigma : enumerate_cycles(g)) {
    for (std::size_t p = 1; p < sigma.size(); ++p) EXPECT_EQ(gamma(g, sigma, p), gamma(g, sigma, 0));
  }
}

TEST(Reduce, EmptySetReturnsInput) {
  ReactionNetwork net = load_fixture("runex.crn");
  EXPECT_TRUE(structurally_equal(reduce_network(net, {}).network, net));
}

TEST(Reduce, RunningExampleWithProvenance) {
  ReducedNetwork red = reduce_network(load_fixture("runex.crn"), {"S4", "S5"});
  const auto& out = red.network;
  EXPECT_EQ(out.species, (std::vector<std::string>{"S1", "S2", "S3"}));
  ASSERT_EQ(out.reactions.size(), 2u);
  EXPECT_EQ(red.eliminated, (std::vector<std::string>{"S4", "S5"}));
  EXPECT_EQ(out.reactions[0].reactant, single("S1"));
  EXPECT_TRUE(rate_function(out.reactions[0]).equivalent(rf("T1*v1*v3/(v1 + v2 + v3)")));
  ASSERT_FALSE(out.reactions[0].provenance.empty());
  EXPECT_EQ(out.reactions[0].provenance[0].kind, Provenance::Kind::cycle);
  EXPECT_EQ(red.next_total_index, 2);
}

TEST(Reduce, ProjectedReactionsSubstitutePhi) {
  ReducedNetwork red = reduce_network(load_fixture("noclcorr.crn"), {"U1", "U2"});
  ASSERT_EQ(red.network.reactions.size(), 1u);
  const Reaction& r = red.network.reactions[0];
  EXPECT_EQ(r.reactant, single("S2"));
  EXPECT_EQ(r.product, single("S1"));
  EXPECT_EQ(r.provenance[0].kind, Provenance::Kind::projected);
}

TEST(Reduce, RatesOutsideTheGraphMayDependOnU) {
  ReactionNetwork net = parse_network("A -> B ; rate k1*[U]\n0 -> U ; k0\nU -> 0 ; k2\n");
  ReducedNetwork red = reduce_network(net, {"U"});
  ASSERT_EQ(red.network.reactions.size(), 1u);
  EXPECT_TRUE(rate_function(red.network.reactions[0]).equivalent(rf("k1*k0/k2*[A]^0")));
}

TEST(Reduce, CollapseOption) {
  ReactionNetwork net = load_fixture("extfact5.crn");
  ReduceOptions raw;
  raw.collapse = false;
  ReducedNetwork split = reduce_network(net, {"U1", "U2", "U3"}, raw);
  ReducedNetwork merged = reduce_network(net, {"U1", "U2", "U3"});
  EXPECT_GT(split.network.reactions.size(), merged.network.reactions.size());
  EXPECT_TRUE(compare_networks(split.network, merged.network).empty());
}

TEST(Reduce, TotalBindings) {
  ReduceOptions opts;
  opts.totals = {{"T1", TotalValue(Symbol::total("Etot"))}};
  ReducedNetwork red = reduce_network(load_fixture("runex.crn"), {"S4", "S5"}, opts);
  EXPECT_TRUE(rate_function(red.network.reactions[0]).contains(Symbol::total("Etot")));
  opts.totals = {{"T7", TotalValue(Rational(1))}};
  EXPECT_THROW(reduce_network(load_fixture("runex.crn"), {"S4", "S5"}, opts), Error);
  opts.strict_totals = false;
  EXPECT_NO_THROW(reduce_network(load_fixture("runex.crn"), {"S4", "S5"}, opts));
}

TEST(Reduce, GeneratedTotalsAvoidExistingNames) {
  ReactionNetwork net = parse_network("species: A, B, U1, U2\nA + U1 -> B + U2 ; rate T1*[U1]\nU2 -> U1 ; k2\n");
  ReducedNetwork red = reduce_network(net, {"U1", "U2"});
  EXPECT_EQ(red.elimination.factors[0].total_name, "T2");
}

TEST(Reduce, NotEliminableThrows) {
  ReactionNetwork net = parse_network("A + U1 -> B + U2 ; k1\nA + U1 -> B + U3 ; k2\n");
  try {
    reduce_network(net, {"U1", "U2", "U3"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_linearly_eliminable);
  }
}

TEST(Reduce, TreeLimitThrows) {
  ReduceOptions opts;
  opts.max_trees = 1;
  try {
    reduce_network(load_fixture("pingpong.crn"), {"E", "E*", "Y1", "Y2"}, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::limit_exceeded);
  }
}

TEST(Iterative, ChainMustIncrease) {
  ReactionNetwork net = load_fixture("iterative.crn");
  try {
    iterative_reduce(net, {{"U1", "U2"}, {"U2"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
  }
}

TEST(Iterative, StepNotEliminableNamesStep) {
  ReactionNetwork net = parse_network("S + U1 <-> S2 ; k1, k2\nU2 + U3 <-> S ; k3, k4\n");
  try {
    iterative_reduce(net, {{"U1"}, {"U1", "U2", "U3"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::step_not_eliminable);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos) << e.what();
  }
}

TEST(Iterative, StepsAgreeWithDirectOnTwoKinases) {
  IterativeResult r = iterative_reduce(load_fixture("2c1r.crn"), {{"E1", "Y1"}, {"E1", "E2", "Y1", "Y2"}});
  ASSERT_EQ(r.steps.size(), 2u);
  ASSERT_TRUE(r.direct.has_value());
  EXPECT_TRUE(r.equivalent);
  EXPECT_TRUE(r.differences.empty());
}

TEST(Compare, ReportsRateAndShapeDifferences) {
  ReactionNetwork a = parse_network("A -> B ; k1\nB -> A ; k2\n");
  ReactionNetwork b = parse_network("A -> B ; k1\nA -> B ; k3\n");
  auto d = compare_networks(a, b, "left", "right");
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NE(d[0].find("left"), std::string::npos);
  EXPECT_TRUE(compare_networks(a, a).empty());
}

TEST(Ptm, IntermediatesExample) {
  auto pairs = ptm_reduce(load_fixture("exinterm.crn"), {"S1", "S4", "S7"}, {"Y1", "Y2", "Y3", "Y4", "Y5"});
  std::vector<ReactionPair> expected = {
      {single("S2"), single("S3")}, {single("S2"), single("S5")},
      {single("S2"), single("S6")}, {single("S3"), single("S2")}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(pairs, expected);
}

// Substrate-level pairs of a general reduction: enzymes dropped from both sides.
std::vector<ReactionPair> substrate_pairs(const ReactionNetwork& reduced, const std::vector<std::string>& enzymes) {
  std::set<std::string> drop(enzymes.begin(), enzymes.end());
  std::set<ReactionPair> out;
  for (const auto& [a, b] : reaction_pairs(reduced)) out.insert({a.without(drop), b.without(drop)});
  return {out.begin(), out.end()};
}

TEST(Ptm, AgreesWithGeneralReduction) {
  struct Case {
    const char* name;
    std::vector<std::string> enzymes;
    std::vector<std::string> intermediates;
  };
  for (const Case& c : std::vector<Case>{{"exinterm.crn", {"S1", "S4", "S7"}, {"Y1", "Y2", "Y3", "Y4", "Y5"}},
                                         {"2c1r.crn", {"E1", "E2"}, {"Y1", "Y2"}},
                                         {"nsite1.crn", {"E", "F"}, {"Y1", "Z1"}},
                                         {"nsite2.crn", {"E", "F"}, {"Y1", "Y2", "Z1", "Z2"}},
                                         {"nsite3.crn", {"E", "F"}, {"Y1", "Y2", "Y3", "Z1", "Z2", "Z3"}}}) {
    ReactionNetwork net = load_fixture(c.name);
    std::vector<std::string> u = c.enzymes;
    u.insert(u.end(), c.intermediates.begin(), c.intermediates.end());
    auto general = substrate_pairs(reduce_network(net, u).network, c.enzymes);
    EXPECT_EQ(ptm_reduce(net, c.enzymes, c.intermediates), general) << c.name;
  }
}

TEST(Ptm, TwoSiteChain) {
  auto pairs = ptm_reduce(load_fixture("nsite2.crn"), {"E", "F"}, {"Y1", "Y2", "Z1", "Z2"});
  std::vector<ReactionPair> expected = {{single("S0"), single("S1")}, {single("S1"), single("S0")},
                                        {single("S1"), single("S2")}, {single("S2"), single("S1")}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(pairs, expected);
}

TEST(Ptm, SubstratesWithoutSharedEnzymeDoNotReact) {
  ReactionNetwork net = parse_network(
      "species: A, B, C, D, E1, E2, Y1, Y2\n"
      "A + E1 -> Y1 ; k1\nY1 -> B + E1 ; k2\nC + E2 -> Y2 ; k3\nY2 -> D + E2 ; k4\n");
  auto pairs = ptm_reduce(net, {"E1", "E2"}, {"Y1", "Y2"});
  std::vector<ReactionPair> expected = {{single("A"), single("B")}, {single("C"), single("D")}};
  EXPECT_EQ(pairs, expected);
}

TEST(Ptm, RejectsOtherShapes) {
  try {
    ptm_reduce(load_fixture("pingpong.crn"), {"E", "E*"}, {"Y1", "Y2"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_ptm_shape);
  }
}

TEST(Ptm, ReactionPairsDeduplicate) {
  ReactionNetwork net = parse_network("A -> B ; k1\nA -> B ; k2\nB -> A ; k3\n");
  EXPECT_EQ(reaction_pairs(net).size(), 2u);
}

}  // namespace
}  // namespace crnreduce
