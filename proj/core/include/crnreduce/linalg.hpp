#pragma once

#include <cstddef>
#include <vector>

#include "crnreduce/rational.hpp"

namespace crnreduce {

/// Dense row-major matrix of exact rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols);
RationalMatrix transpose(const RationalMatrix& m, std::size_t cols);

/// Reduced row-echelon form with pivots chosen left to right; zero rows are
/// dropped. `pivots`, if given, receives the pivot column of each row.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RationalMatrix& m);

/// Basis of { x : m x = 0 } as rows, in RREF. `cols` fixes the width when m
/// has no rows.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);

/// True if the two row sets span the same subspace.
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b, std::size_t cols);

/// True if `v` lies in the row space of `basis`.
bool in_row_space(const RationalMatrix& basis, const std::vector<Rational>& v);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b, std::size_t b_cols);

}  // namespace crnreduce
