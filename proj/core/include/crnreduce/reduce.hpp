#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crnreduce/eliminate.hpp"

namespace crnreduce {

/// Edge ids of an elementary cycle in traversal order, rotated so that the
/// smallest id comes first. A self-edge is a cycle of length one.
using Cycle = std::vector<int>;

/// Every elementary cycle; parallel edges give distinct cycles. Sorted
/// lexicographically. Throws Error(limit_exceeded) past max_cycles.
std::vector<Cycle> enumerate_cycles(const ElimGraph& g, std::size_t max_cycles = default_max_cycles);

/// Spanning in-trees of `nodes` rooted at the source of sigma[edge_pos] that
/// contain every other cycle edge, each extended by sigma[edge_pos]. Results
/// are ascending edge-id lists, sorted.
std::vector<InTree> gamma(const ElimGraph& g, const std::vector<int>& nodes, const Cycle& sigma,
                          std::size_t edge_pos = 0, std::size_t max_trees = default_max_trees);

/// gamma over the whole component holding the cycle.
std::vector<InTree> gamma(const ElimGraph& g, const Cycle& sigma, std::size_t edge_pos = 0,
                          std::size_t max_trees = default_max_trees);

/// Sum of label products over gamma(g, sigma).
RationalFunction big_pi(const ElimGraph& g, const Cycle& sigma, std::size_t max_trees = default_max_trees);

/// Net change of the remaining species along the cycle, as a signed map
/// without zero entries.
std::map<std::string, Rational> cycle_change(const ReactionNetwork& net, const ElimGraph& g, const Cycle& sigma);

/// Cycles with a nonzero net change and a nonempty gamma.
std::vector<Cycle> delta(const ReactionNetwork& net, const ElimGraph& g, const std::vector<Cycle>& cycles,
                         std::size_t max_trees = default_max_trees);

struct ReduceOptions {
  bool collapse = true;
  std::size_t max_trees = default_max_trees;
  std::size_t max_cycles = default_max_cycles;
  /// Replaces generated total names by symbols or numbers.
  std::map<std::string, TotalValue> totals;
  /// Counter for generated total names T<k>.
  int first_total_index = 1;
  /// When false, bindings for names this reduction does not generate are
  /// ignored instead of rejected.
  bool strict_totals = true;
};

struct ReducedNetwork {
  ReactionNetwork network;
  std::vector<std::string> eliminated;  // network order of the input
  ElimGraph graph;
  EliminationResult elimination;
  std::vector<Cycle> cycles;
  std::vector<Cycle> delta;
  int next_total_index = 1;
};

/// Full pipeline: eligibility, elimination, projected reactions with
/// u replaced by phi, one reaction per cycle in delta, renumbering and the
/// optional collapse of parallel reactions. An empty set returns the input.
/// Throws Error(not_noninteracting | not_u_linear | not_linearly_eliminable |
/// limit_exceeded | total_*).
ReducedNetwork reduce_network(const ReactionNetwork& net, const std::vector<std::string>& u,
                              const ReduceOptions& opts = {});

/// Reaction-level differences between two networks over the same species:
/// reactions present on one side only and pairs whose rates disagree.
/// Parallel reactions are summed before comparing. Empty iff equivalent.
std::vector<std::string> compare_networks(const ReactionNetwork& a, const ReactionNetwork& b,
                                          const std::string& a_name = "first",
                                          const std::string& b_name = "second");

struct IterativeResult {
  std::vector<ReducedNetwork> steps;
  /// Absent when the last set is not eliminable in one step; the reason is
  /// then in direct_error.
  std::optional<ReducedNetwork> direct;
  std::string direct_error;
  bool equivalent = true;
  std::vector<std::string> differences;
};

/// `chain` lists cumulative species sets; step i eliminates chain[i] minus
/// chain[i-1] from the previous result. The direct reduction of the last set
/// is computed alongside and compared. Total bindings apply to whichever
/// step generates the name. Throws Error(step_not_eliminable)
/// naming the failing step, Error(invalid_argument) if the chain is not
/// increasing.
IterativeResult iterative_reduce(const ReactionNetwork& net, const std::vector<std::vector<std::string>>& chain,
                                 const ReduceOptions& opts = {});

/// Reactant/product pair of a reduced reaction.
using ReactionPair = std::pair<Complex, Complex>;

/// Sorted, deduplicated pairs of the reactions a reduction of a network
/// carries.
std::vector<ReactionPair> reaction_pairs(const ReactionNetwork& net);

/// Substrate-level reactions of a network of substrates, enzymes and
/// intermediates reduced by enzymes and intermediates, from path reachability
/// through intermediates. Throws Error(not_ptm_shape).
std::vector<ReactionPair> ptm_reduce(const ReactionNetwork& net, const std::vector<std::string>& enzymes,
                                     const std::vector<std::string>& intermediates);

}  // namespace crnreduce
