#include "crnreduce/rational.hpp"

#include <cctype>

#include "crnreduce/error.hpp"

namespace crnreduce {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::self_edge_reaction: return "SelfEdgeReaction";
    case ErrorCode::duplicate_species_declaration: return "DuplicateSpeciesDeclaration";
    case ErrorCode::non_positive_rate_constant: return "NonPositiveRateConstant";
    case ErrorCode::unknown_species: return "UnknownSpecies";
    case ErrorCode::missing_assignment: return "MissingAssignment";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::non_polynomial_rate: return "NonPolynomialRate";
    case ErrorCode::not_noninteracting: return "NotNoninteracting";
    case ErrorCode::not_u_linear: return "NotULinear";
    case ErrorCode::not_linearly_eliminable: return "NotLinearlyEliminable";
    case ErrorCode::limit_exceeded: return "LimitExceeded";
    case ErrorCode::total_required: return "TotalRequired";
    case ErrorCode::total_forbidden: return "TotalForbidden";
    case ErrorCode::singular_system: return "SingularSystem";
    case ErrorCode::symbolic_check_failed: return "SymbolicCheckFailed";
    case ErrorCode::step_not_eliminable: return "StepNotEliminable";
    case ErrorCode::not_ptm_shape: return "NotPTMShape";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::io_error: return "IOError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorCode::syntax_error, "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d{std::string(den), 10};
    if (d == 0) bad(text);
    value = Rational(mpz_class{std::string(num), 10}, d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class digits{std::string(whole.empty() ? "0" : whole) + std::string(frac), 10};
    value = Rational(digits, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) bad(text);
    value = Rational(mpz_class(std::string(body), 10));
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace crnreduce
