#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "crnreduce/elimgraph.hpp"

namespace crnreduce {

/// Total amount of a component: a symbol or a fixed positive number.
using TotalValue = std::variant<Symbol, Rational>;

RationalFunction to_rational_function(const TotalValue& t);
std::string to_string(const TotalValue& t);

struct ComponentFactor {
  std::size_t component = 0;
  bool with_star = false;
  /// T / (sum of tree sums over all roots) without star; 1 / (tree sum at the
  /// star) with star.
  RationalFunction q;
  std::optional<TotalValue> total;
  /// Name the total was generated under (T1, T2, ...), empty with star.
  std::string total_name;
  /// Tree sums whose nonvanishing defines the domain of q. With star there is
  /// one per star block and q is the reciprocal of their product.
  std::vector<RationalFunction> denominators;
};

struct EliminationResult {
  std::vector<std::string> u_species;
  std::vector<RationalFunction> phi;  // parallel to u_species; zeros kept
  std::vector<ComponentFactor> factors;
  std::vector<RationalFunction> domain_note;
};

/// Node sets (each containing the star node) of the pieces a star component
/// falls into once the star node is removed, ordered by smallest node. Tree
/// sums rooted at the star factor over these pieces.
std::vector<std::vector<int>> star_blocks(const ElimGraph& g, std::size_t component);

/// Throws Error(total_required) for a component without star and no total,
/// Error(total_forbidden) for a component with star and a total.
ComponentFactor component_factor(const ElimGraph& g, std::size_t component, const std::optional<TotalValue>& total,
                                 std::size_t max_trees = default_max_trees);

/// phi_i = q_H * (tree sum rooted at U_i). Factors must cover every component.
EliminationResult phi(const ElimGraph& g, const std::vector<ComponentFactor>& factors,
                      std::size_t max_trees = default_max_trees);

/// Totals for each component: fresh names T<k> (skipping `taken`, counting
/// from `next_index`, which is advanced) for components without star,
/// nullopt for the others. `bindings` replaces a generated name by a symbol
/// or a number; names that are never generated raise Error(invalid_argument).
struct TotalAssignment {
  std::vector<std::optional<TotalValue>> values;
  std::vector<std::string> names;
};
TotalAssignment assign_totals(const ElimGraph& g, const std::set<std::string>& taken, int& next_index,
                              const std::map<std::string, TotalValue>& bindings = {});

/// Every symbol name used in the network's rates and complexes.
std::set<std::string> used_names(const ReactionNetwork& net);

/// Factors and phi for every component.
EliminationResult eliminate(const ElimGraph& g, const std::vector<std::optional<TotalValue>>& totals,
                            std::size_t max_trees = default_max_trees);

struct SteadyStateReport {
  bool ok = true;
  std::string counterexample;
};

/// Symbolic check that u = phi zeroes every eliminated coordinate of the ODE
/// right-hand side and that phi sums to the total on components without star.
SteadyStateReport verify_steady_state(const ReactionNetwork& net, const std::vector<std::string>& u,
                                      const EliminationResult& result);

}  // namespace crnreduce
