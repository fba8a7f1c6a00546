#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "crnreduce/network.hpp"

namespace crnreduce {

inline constexpr std::size_t default_max_trees = 1000000;
inline constexpr std::size_t default_max_cycles = 100000;

/// Edge of the elimination graph; `id` is the index into ElimGraph::edges.
struct ElimEdge {
  int id = 0;
  int source = 0;
  int target = 0;
  RationalFunction label;
  int reaction_id = 0;
};

struct GraphComponent {
  std::vector<int> nodes;  // ascending
  std::vector<int> edges;  // ascending
  bool contains_star = false;
  bool strongly_connected = false;
};

/// Labeled multidigraph on the eliminated species. Nodes 0..n-1 are the
/// eliminated species in network order; node n is the star node when present.
/// Components are listed by smallest node.
struct ElimGraph {
  std::vector<std::string> u_species;
  bool has_star = false;
  std::vector<ElimEdge> edges;
  std::vector<GraphComponent> components;
  std::vector<int> component_of;  // per node

  int node_count() const { return static_cast<int>(u_species.size()) + (has_star ? 1 : 0); }
  int star() const { return static_cast<int>(u_species.size()); }
  bool is_star(int node) const { return has_star && node == star(); }
  std::string node_name(int node) const { return is_star(node) ? "*" : u_species.at(node); }
  /// Edge id for a reaction id, or -1 if the reaction has no edge.
  int edge_of_reaction(int reaction_id) const;
};

/// Outcome of an eligibility check; `problems` is empty iff ok.
struct EligibilityReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// No complex contains two eliminated species, and every eliminated species
/// appears with coefficient 0 or 1. Throws Error(unknown_species).
EligibilityReport check_noninteracting(const ReactionNetwork& net, const std::vector<std::string>& u);

/// Species set sorted into network order, duplicates removed.
/// Throws Error(unknown_species).
std::vector<std::string> ordered_subset(const ReactionNetwork& net, const std::vector<std::string>& u);

/// Label v_r for every reaction touching an eliminated species, keyed by
/// reaction id. Rates consuming U_i must factor as u_i * v with v free of
/// eliminated species; other rates must be free of them entirely.
/// Throws Error(not_u_linear).
std::map<int, RationalFunction> extract_ulinear(const ReactionNetwork& net, const std::vector<std::string>& u);

ElimGraph build_graph(const ReactionNetwork& net, const std::vector<std::string>& u,
                      const std::map<int, RationalFunction>& labels);

/// Runs the noninteracting and linearity checks, then builds the graph.
/// Throws Error(not_noninteracting) or Error(not_u_linear).
ElimGraph build_elimination_graph(const ReactionNetwork& net, const std::vector<std::string>& u);

/// Spanning tree directed towards its root, as ascending edge ids.
using InTree = std::vector<int>;

/// All spanning in-trees of the subgraph induced by `nodes` rooted at `root`.
/// `forced` maps a node to the edge it must use. Self-edges never appear.
/// Throws Error(limit_exceeded) when more than max_trees trees exist.
std::vector<InTree> spanning_in_trees(const ElimGraph& g, const std::vector<int>& nodes, int root,
                                      std::size_t max_trees = default_max_trees,
                                      const std::map<int, int>& forced = {});

std::vector<InTree> spanning_in_trees(const ElimGraph& g, std::size_t component, int root,
                                      std::size_t max_trees = default_max_trees);

/// Product of edge labels.
RationalFunction label_product(const ElimGraph& g, const std::vector<int>& edges);

/// Sum of label products over spanning_in_trees.
RationalFunction tree_label_sum(const ElimGraph& g, const std::vector<int>& nodes, int root,
                                std::size_t max_trees = default_max_trees);
RationalFunction tree_label_sum(const ElimGraph& g, std::size_t component, int root,
                                std::size_t max_trees = default_max_trees);

/// Reachability test for the existence of an in-tree rooted at `root`.
bool has_in_tree(const ElimGraph& g, const std::vector<int>& nodes, int root);

/// Components with the star node need a tree rooted at the star; the others
/// need a tree rooted at some node.
EligibilityReport is_linearly_eliminable(const ElimGraph& g);

/// Node-by-edge matrix: -1 at the source, +1 at the target, zero columns for
/// self-edges.
std::vector<std::vector<int>> incidence_matrix(const ElimGraph& g);

/// Deterministic Graphviz document with one cluster per component.
std::string export_dot(const ElimGraph& g);

}  // namespace crnreduce
