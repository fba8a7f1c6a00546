#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crnreduce/reduce.hpp"

namespace crnreduce {

struct CheckResult {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::pass;
  /// Informational checks never make a report fail.
  bool required = true;
  std::string detail;
  /// Concrete counterexample; nonempty whenever status is fail.
  std::string witness;
};

std::string_view to_string(CheckResult::Status s);

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;

  /// No required check failed.
  bool passed() const;
  void append(const ValidationReport& other);
  /// One `[PASS] name: detail` line per check, witnesses indented below.
  std::string to_text() const;
  std::string to_json() const;
};

struct SamplingOptions {
  std::uint64_t seed = 20240601;
  std::size_t points = 50;
};

/// Strictly positive rational with numerator and denominator in [1, 1000]
/// for every listed symbol.
Assignment random_point(const std::set<Symbol>& symbols, std::uint64_t seed, std::size_t index);

/// Totals of the components without star, in component order.
std::vector<TotalValue> closed_totals(const ReducedNetwork& reduced);

/// Steady state of the eliminated species from the linear system
/// du/dt = 0, with the first row of each closed component (no reaction
/// exchanges its species with the outside) replaced by the sum of its species
/// equal to the total. One total per closed component, ordered by smallest
/// member. Each component is solved on its own by fraction-free elimination.
/// Throws Error(singular_system | not_u_linear | total_required |
/// total_forbidden).
std::vector<RationalFunction> linear_solve_oracle(const ReactionNetwork& net, const std::vector<std::string>& u,
                                                  const std::vector<TotalValue>& totals);

/// Compares the reduced right-hand side with the original one projected to
/// the remaining species after u is replaced by the oracle's steady state:
/// symbolically and at sampled points.
ValidationReport check_ode_equivalence(const ReactionNetwork& net, const std::vector<std::string>& u,
                                       const ReactionNetwork& reduced, const std::vector<TotalValue>& totals,
                                       const SamplingOptions& opts = {});

/// Totals taken from the reduction's component factors.
ValidationReport check_ode_equivalence(const ReactionNetwork& net, const ReducedNetwork& reduced,
                                       const SamplingOptions& opts = {});

/// Tree-formula phi against linear_solve_oracle.
ValidationReport check_phi_oracle(const ReactionNetwork& net, const ReducedNetwork& reduced);

/// Projected conservation laws: orthogonal to every reduced reaction; equal
/// to the reduced laws when every graph component is strongly connected;
/// dimension drops by the number of components without star.
ValidationReport check_conservation_projection(const ReactionNetwork& net, const std::vector<std::string>& u,
                                               const ReactionNetwork& reduced);

struct StandardnessVerdict {
  int reaction_id = 0;
  bool standard = false;
  bool fully_standard = false;
  std::string witness;  // first failure, empty if fully standard
};

/// Standard: every numerator monomial contains each reactant species.
/// Fully standard: additionally the numerator stays nonzero once every
/// non-reactant concentration is set to zero. A reactant is exempt from the
/// first condition when setting it to zero makes one of the `domain`
/// polynomials vanish identically, since such points lie outside the domain.
StandardnessVerdict standardness(const Reaction& r, const std::vector<std::string>& species,
                                 const std::vector<RationalFunction>& domain = {});
std::vector<StandardnessVerdict> standardness(const ReactionNetwork& net,
                                              const std::vector<RationalFunction>& domain = {});

/// Required check `standard`, informational check `fully-standard`.
ValidationReport check_standardness(const ReactionNetwork& net, const std::vector<RationalFunction>& domain = {});

/// Same checks on the reduced network; `standard` is only required when the
/// original network is standard.
ValidationReport check_standardness(const ReactionNetwork& original, const ReactionNetwork& reduced,
                                    const std::vector<RationalFunction>& domain = {});

/// Per strongly connected component: rows of H are cycle indicator vectors
/// over the component's edges, C is its incidence matrix; checks
/// H * C^T = 0 and rank H + rank C = #edges.
ValidationReport check_cycle_space(const ElimGraph& g, std::size_t max_cycles = default_max_cycles);

}  // namespace crnreduce
