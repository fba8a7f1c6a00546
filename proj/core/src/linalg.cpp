#include "crnreduce/linalg.hpp"

#include <utility>

namespace crnreduce {

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

RationalMatrix transpose(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix t = zero_matrix(cols, m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  m.resize(row);
  return m;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).size(); }

RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  RationalMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b, std::size_t cols) {
  RationalMatrix ra = rref(a);
  RationalMatrix rb = rref(b);
  if (ra.size() != rb.size()) return false;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (ra[i][j] != rb[i][j]) return false;
    }
  }
  return true;
}

bool in_row_space(const RationalMatrix& basis, const std::vector<Rational>& v) {
  RationalMatrix extended = basis;
  extended.push_back(v);
  return rank(extended) == rank(basis);
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b, std::size_t b_cols) {
  RationalMatrix out = zero_matrix(a.size(), b_cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace crnreduce
