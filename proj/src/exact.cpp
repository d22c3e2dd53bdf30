#include <lattice/error.hpp>
#include <lattice/exact.hpp>

namespace lattice {

std::vector<std::size_t> pivot_columns(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<std::vector<Rational>> solve_full_column_rank(
    RationalMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw InputError("solve: rhs length differs from row count");

  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = c;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) throw ConsistencyError("solve: matrix is column rank deficient");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t j = c; j < cols; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = cols; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  b.resize(cols);
  return b;
}

}  // namespace lattice
