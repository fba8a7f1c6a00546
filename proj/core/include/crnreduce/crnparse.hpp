#pragma once

#include <set>
#include <string>
#include <string_view>

#include "crnreduce/error.hpp"
#include "crnreduce/expression.hpp"
#include "crnreduce/network.hpp"

namespace crnreduce {

/// 1-based position of a diagnostic inside the parsed document.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, SourceSpan span, const std::string& message);
  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

/// Parses the line-oriented network format:
///
///     # comment
///     species: A, B, C          (optional; pins the species order)
///     totals: T                 (optional; names of total-amount symbols)
///     A + B <-> C ; k1, k2
///     C -> 2*D ; 3/2
///     0 -> A ; rate k3*[B]/(1 + [C])
///
/// Without a species header the order is the order of first occurrence.
/// Reversible arrows produce the forward reaction first; ids count from 1.
/// Throws ParseError with codes syntax_error, self_edge_reaction,
/// duplicate_species_declaration, non_positive_rate_constant or
/// unknown_species.
ReactionNetwork parse_network(std::string_view text);

/// Parses a rate expression (the text after `rate`). Bare identifiers are
/// rate constants unless listed in `totals`; `[Name]` is a concentration.
Expression parse_expression(std::string_view text, const std::set<std::string>& totals = {});

/// JSON document as produced by serialize_network(.., Format::json).
ReactionNetwork parse_network_json(std::string_view text);

/// Dispatches on the first non-blank character: `{` selects JSON.
ReactionNetwork load_network(std::string_view text);

enum class Format { dsl, json };

/// Deterministic rendering; parsing the result reproduces the network up to
/// provenance (DSL) or exactly (JSON).
std::string serialize_network(const ReactionNetwork& net, Format format);

/// Total-amount symbol names referenced by any rate, in symbol order.
std::vector<std::string> total_symbols(const ReactionNetwork& net);

}  // namespace crnreduce
