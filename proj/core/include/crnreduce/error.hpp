#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crnreduce {

/// Machine-readable failure reasons. The CLI prints `code_name(code)` and
/// maps groups of codes onto its exit status.
enum class ErrorCode {
  syntax_error,
  self_edge_reaction,
  duplicate_species_declaration,
  non_positive_rate_constant,
  unknown_species,
  missing_assignment,
  division_by_zero,
  non_polynomial_rate,
  not_noninteracting,
  not_u_linear,
  not_linearly_eliminable,
  limit_exceeded,
  total_required,
  total_forbidden,
  singular_system,
  symbolic_check_failed,
  step_not_eliminable,
  not_ptm_shape,
  invalid_argument,
  io_error,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crnreduce
