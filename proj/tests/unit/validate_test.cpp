#include <gtest/gtest.h>

#include "crnreduce/crnparse.hpp"
#include "crnreduce/validate.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

namespace crnreduce {
namespace {

using testing::load_fixture;
using testing::rf;

const CheckResult* find_check(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(Sampling, PointsArePositiveAndReproducible) {
  std::set<Symbol> syms = {Symbol::rate_constant("k1"), Symbol::concentration("A")};
  Assignment p = random_point(syms, 9, 0);
  EXPECT_EQ(p, random_point(syms, 9, 0));
  EXPECT_NE(p, random_point(syms, 9, 1));
  for (const auto& [s, v] : p) {
    EXPECT_GT(v, 0);
    EXPECT_LE(v.get_num(), 1000);
    EXPECT_LE(v.get_den(), 1000);
  }
}

TEST(Oracle, MatchesTreeFormulaOnFixtures) {
  struct Case {
    const char* name;
    std::vector<std::string> u;
  };
  for (const Case& c : std::vector<Case>{{"runex.crn", {"S4", "S5"}},
                                         {"pingpong.crn", {"E", "E*", "Y1", "Y2"}},
                                         {"2c1r.crn", {"E1", "E2", "Y1", "Y2"}},
                                         {"noncut.crn", {"U1", "U2", "U3"}},
                                         {"exinterm.crn", {"Y1", "Y2", "Y3", "Y4", "Y5"}}}) {
    ReactionNetwork net = load_fixture(c.name);
    ReducedNetwork red = reduce_network(net, c.u);
    auto phi = linear_solve_oracle(net, red.eliminated, closed_totals(red));
    ASSERT_EQ(phi.size(), red.elimination.phi.size()) << c.name;
    for (std::size_t i = 0; i < phi.size(); ++i) EXPECT_TRUE(phi[i].equivalent(red.elimination.phi[i])) << c.name;
    EXPECT_TRUE(check_phi_oracle(net, red).passed()) << c.name;
  }
}

TEST(Oracle, TotalCountMustMatchClosedComponents) {
  ReactionNetwork net = load_fixture("runex.crn");
  try {
    linear_solve_oracle(net, {"S4", "S5"}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::total_required);
  }
  ReactionNetwork open = parse_network("0 -> U ; k0\nU -> A ; k1\n");
  try {
    linear_solve_oracle(open, {"U"}, {TotalValue(Symbol::total("T1"))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::total_forbidden);
  }
}

TEST(OdeEquivalence, PassesOnReductionAndFailsOnMutation) {
  ReactionNetwork net = load_fixture("pingpong.crn");
  ReducedNetwork red = reduce_network(net, {"E", "E*", "Y1", "Y2"});
  ValidationReport ok = check_ode_equivalence(net, red, {11, 10});
  EXPECT_TRUE(ok.passed()) << ok.to_text();
  EXPECT_EQ(ok.seed, 11u);
  auto mutants = testing::coefficient_mutations(red.network);
  ASSERT_FALSE(mutants.empty());
  ValidationReport bad = check_ode_equivalence(net, red.eliminated, mutants[0], closed_totals(red), {11, 10});
  EXPECT_FALSE(bad.passed());
  bool witnessed = false;
  for (const auto& c : bad.checks) witnessed = witnessed || (c.status == CheckResult::Status::fail && !c.witness.empty());
  EXPECT_TRUE(witnessed);
}

TEST(Conservation, ProjectionOnRunningExample) {
  ReactionNetwork net = load_fixture("runex.crn");
  ReducedNetwork red = reduce_network(net, {"S4", "S5"});
  ValidationReport r = check_conservation_projection(net, red.eliminated, red.network);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Conservation, ProperSubspaceWithoutStrongConnectivity) {
  ReactionNetwork net = load_fixture("cyclenoreact.crn");
  ReducedNetwork red = reduce_network(net, {"U1", "U2", "U3"});
  ValidationReport r = check_conservation_projection(net, red.eliminated, red.network);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Standardness, Verdicts) {
  ReactionNetwork net = parse_network(
      "A -> B ; rate k1*[A]\n"
      "A -> C ; rate k2*[A]*[C]\n"
      "B -> C ; rate k3 + k4*[B]\n");
  auto v = standardness(net);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_TRUE(v[0].fully_standard);
  EXPECT_TRUE(v[1].standard);
  EXPECT_FALSE(v[1].fully_standard);
  EXPECT_FALSE(v[2].standard);
  EXPECT_FALSE(v[2].witness.empty());
}

TEST(Standardness, DomainExemptsVanishingReactant) {
  ReactionNetwork net = parse_network("A -> B ; rate k1*[B]/([A] + k2*[A]*[B])\n");
  EXPECT_FALSE(standardness(net)[0].standard);
  EXPECT_TRUE(standardness(net, {rf("[A] + k2*[A]*[B]")})[0].standard);
}

TEST(Standardness, InformationalWhenInputIsNotStandard) {
  ReactionNetwork net = load_fixture("noncut.crn");
  ReducedNetwork red = reduce_network(net, {"U1", "U2", "U3"});
  ValidationReport r = check_standardness(net, red.network, red.elimination.domain_note);
  const CheckResult* c = find_check(r, "standard");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->required);
  EXPECT_TRUE(r.passed());
}

TEST(CycleSpace, RankIdentityOnPingPong) {
  ElimGraph g = build_elimination_graph(load_fixture("pingpong.crn"), {"E", "E*", "Y1", "Y2"});
  ValidationReport r = check_cycle_space(g);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Report, TextAndJson) {
  ValidationReport r;
  r.checks.push_back({"alpha", CheckResult::Status::pass, true, "fine", ""});
  r.checks.push_back({"beta", CheckResult::Status::fail, false, "off", "x = 1"});
  EXPECT_TRUE(r.passed());
  std::string text = r.to_text();
  EXPECT_NE(text.find("[PASS] alpha: fine"), std::string::npos);
  EXPECT_NE(text.find("x = 1"), std::string::npos);
  EXPECT_NE(r.to_json().find("\"beta\""), std::string::npos);
  r.checks[1].required = true;
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(to_string(CheckResult::Status::skipped), "SKIP");
}

}  // namespace
}  // namespace crnreduce
