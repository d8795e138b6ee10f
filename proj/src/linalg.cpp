#include "blowup/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace blowup::linalg {

Matrix from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& row : rows)
    m.emplace_back(row.begin(), row.end());
  return m;
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero())
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& x : m[row])
      x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero())
        continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < m[i].size(); ++j)
        if (!m[row][j].is_zero())
          m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t rank(Matrix m) {
  if (m.empty())
    return 0;
  return eliminate(m, m.front().size()).size();
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("determinant of non-square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].is_zero())
      ++p;
    if (p == n)
      return Rational(0);
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero())
        continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j)
        m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<Vector> solve(Matrix m, Vector rhs) {
  if (m.size() != rhs.size())
    throw std::invalid_argument("solve: row count mismatch");
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i].push_back(rhs[i]);
  auto pivots = eliminate(m, cols);
  for (std::size_t i = pivots.size(); i < m.size(); ++i)
    if (!m[i][cols].is_zero())
      return std::nullopt;
  Vector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = m[i][cols];
  return x;
}

} // namespace blowup::linalg
