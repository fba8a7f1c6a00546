#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "crnreduce/linalg.hpp"
#include "crnreduce/rational_function.hpp"

namespace crnreduce {

/// Nonnegative combination of species, stored sparsely by name. Zero
/// coefficients are never stored; the empty complex is the zero complex.
class Complex {
 public:
  Complex() = default;
  /// Throws Error(invalid_argument) on a negative coefficient.
  explicit Complex(std::map<std::string, Rational> coefficients);

  const std::map<std::string, Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(const std::string& species) const;
  bool empty() const noexcept { return coeffs_.empty(); }
  bool involves(const std::string& species) const { return coeffs_.count(species) > 0; }

  Complex operator+(const Complex& other) const;
  /// Drops the listed species.
  Complex without(const std::set<std::string>& species) const;

  friend bool operator==(const Complex& a, const Complex& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const Complex& a, const Complex& b) { return a.coeffs_ < b.coeffs_; }

  /// `0`, or terms like `2*A + B` listed in the given species order.
  std::string to_string(const std::vector<std::string>& order) const;

 private:
  std::map<std::string, Rational> coeffs_;
};

struct MassAction {
  /// Named rate constant or a positive number.
  std::variant<Symbol, Rational> constant;
  friend bool operator==(const MassAction&, const MassAction&) = default;
};

struct General {
  RationalFunction rate;
  friend bool operator==(const General&, const General&) = default;
};

using Kinetics = std::variant<MassAction, General>;

/// Where a reaction came from. `input` refers to reactions of the network a
/// collapse was applied to; `projected` and `cycle` refer to reactions of the
/// network a reduction was applied to.
struct Provenance {
  enum class Kind { input, projected, cycle };
  Kind kind = Kind::input;
  std::vector<int> reaction_ids;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

std::string to_string(const Provenance& p);

struct Reaction {
  int id = 0;
  Complex reactant;
  Complex product;
  Kinetics kinetics;
  std::vector<Provenance> provenance;
  friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// Species order fixes the coordinate order of every vector derived from the
/// network. Species may be unused by the reactions.
struct ReactionNetwork {
  std::vector<std::string> species;
  std::vector<Reaction> reactions;

  bool has_species(const std::string& name) const;
  /// Throws Error(unknown_species).
  std::size_t species_index(const std::string& name) const;

  friend bool operator==(const ReactionNetwork&, const ReactionNetwork&) = default;
};

/// Same species order and, reaction by reaction, the same id, complexes and
/// kinetics. Provenance is ignored.
bool structurally_equal(const ReactionNetwork& a, const ReactionNetwork& b);

Symbol concentration_symbol(const std::string& species);

/// Rate as a rational function of concentrations and parameters. Mass-action
/// rates expand to k * prod x_i^{y_i}; throws Error(non_polynomial_rate) when
/// a reactant coefficient is not a nonnegative integer.
RationalFunction rate_function(const Reaction& r);

/// Column j is y'_j - y_j in species order (n x l).
RationalMatrix stoichiometric_matrix(const ReactionNetwork& net);

/// Conservation-law basis: RREF rows spanning the left kernel of the
/// stoichiometric matrix, in species order.
struct ConservationBasis {
  std::vector<std::string> species;
  RationalMatrix vectors;
};

ConservationBasis conservation_basis(const ReactionNetwork& net);

/// Renders one law as `[A] + 2*[B] - [C]`.
std::string law_to_string(const std::vector<std::string>& species, const std::vector<Rational>& w);

/// g_i = sum_r rate_r * (y'_r - y_r)_i in species order.
std::vector<RationalFunction> ode_rhs(const ReactionNetwork& net);

/// One reaction per (reactant, product) pair, in order of first occurrence,
/// renumbered from 1. Merged rates are summed; all-numeric mass-action
/// constants stay mass-action, anything else becomes a general rate.
ReactionNetwork collapse_parallel(const ReactionNetwork& net);

/// Unordered species pairs that occur together in some complex, each pair
/// ordered and listed by species order.
std::vector<std::pair<std::string, std::string>> interacting_pairs(const ReactionNetwork& net);

}  // namespace crnreduce
