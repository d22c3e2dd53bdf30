#include <lattice/error.hpp>
#include <lattice/lp.hpp>

#include <limits>

namespace lattice::lp {
namespace {

struct Tableau {
  RationalMatrix rows;  // each row: coefficients followed by the rhs
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  const Rational& rhs(std::size_t i) const { return rows[i][columns]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Runs the simplex method for `cost` restricted to columns < allowed.
  Status optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    for (;;) {
      std::size_t entering = std::numeric_limits<std::size_t>::max();
      for (std::size_t j = 0; j < allowed; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (rows[i][j] != 0) reduced -= cost[basis[i]] * rows[i][j];
        if (reduced > 0) {
          entering = j;
          break;
        }
      }
      if (entering == std::numeric_limits<std::size_t>::max())
        return Status::optimal;

      std::size_t leave = std::numeric_limits<std::size_t>::max();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][entering] <= 0) continue;
        Rational ratio = rhs(i) / rows[i][entering];
        if (leave == std::numeric_limits<std::size_t>::max() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == std::numeric_limits<std::size_t>::max())
        return Status::unbounded;
      pivot(leave, entering);
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rhs(i);
    return v;
  }
};

}  // namespace

Result maximize(const RationalMatrix& a, std::span<const Rational> b,
                std::span<const Rational> c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw InputError("lp: rhs length differs from row count");
  for (const auto& row : a)
    if (row.size() != n) throw InputError("lp: ragged constraint matrix");

  Tableau tab;
  tab.columns = n + m;
  tab.rows.assign(m, std::vector<Rational>(n + m + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.rows[i][j] = flip ? -a[i][j] : a[i][j];
    tab.rows[i][n + i] = 1;
    tab.rows[i][n + m] = flip ? -b[i] : b[i];
    tab.basis[i] = n + i;
  }

  // Phase one drives the artificial columns to zero.
  std::vector<Rational> phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.optimize(phase1, n + m);
  if (tab.objective(phase1) < 0) return {};

  for (std::size_t i = 0; i < tab.rows.size();) {
    if (tab.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.rows[i][j] != 0) {
        col = j;
        break;
      }
    if (col < n) {
      tab.pivot(i, col);
      ++i;
    } else {
      // Redundant equation.
      tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  std::vector<Rational> phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  Result out;
  out.status = tab.optimize(phase2, n);
  if (out.status == Status::unbounded) return out;
  out.value = tab.objective(phase2);
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows.size(); ++i) out.x[tab.basis[i]] = tab.rhs(i);
  return out;
}

}  // namespace lattice::lp
