#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crnreduce/network.hpp"

namespace crnreduce::testing {

struct GeneratorOptions {
  int min_u = 1;
  int max_u = 4;
  int max_outer = 3;
  /// Chance that a reaction exchanges an eliminated species with the outside.
  double star_probability = 0.25;
  /// Chance that a generated reaction also gets its reverse.
  double reverse_probability = 0.2;
  /// Chance that a conversion keeps its eliminated species (a self-edge).
  double self_edge_probability = 0.05;
};

/// Mass-action network over U1..Um and S1..Sk in which {U1..Um} is
/// noninteracting. Rate constants are k1, k2, ... in reaction order.
struct Instance {
  ReactionNetwork net;
  std::vector<std::string> u;
};

Instance random_instance(std::mt19937_64& rng, const GeneratorOptions& opts = {});

/// Draws until reduce_network accepts the instance.
Instance random_eliminable(std::mt19937_64& rng, const GeneratorOptions& opts = {});

/// Random polynomial over the given symbols with small integer coefficients.
Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<Symbol>& symbols, int max_terms,
                             unsigned max_degree);

}  // namespace crnreduce::testing
