#include "region.hpp"

#include <lattice/error.hpp>

namespace lattice::detail {
namespace {

struct RationalForm {
  std::vector<Rational> coeffs;
  Rational constant;
};

// Clears denominators, then divides out the content. Positive scaling only,
// so the sign of the form is preserved at every point.
AffineForm integerize(const RationalForm& f) {
  Integer lcm = f.constant.get_den();
  for (const auto& c : f.coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  AffineForm out;
  out.coeffs.reserve(f.coeffs.size());
  Integer content = 0;
  for (const auto& c : f.coeffs) {
    Rational scaled = c * lcm;
    out.coeffs.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.coeffs.back().get_mpz_t());
  }
  out.constant = Rational(f.constant * lcm).get_num();
  mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.constant.get_mpz_t());
  if (content > 1) {
    for (auto& c : out.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    mpz_divexact(out.constant.get_mpz_t(), out.constant.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

}  // namespace

Region make_region(const Simplex& s, bool strict) {
  const std::size_t d = s.ambient_dim();
  const std::size_t m = s.intrinsic_dim();
  const LatticePoint& v0 = s.vertex(0);

  Region reg{s, strict, {}, {}, {}, {}};
  reg.lo = v0.coords;
  reg.hi = v0.coords;
  for (const auto& v : s.vertices())
    for (std::size_t r = 0; r < d; ++r) {
      if (v[r] < reg.lo[r]) reg.lo[r] = v[r];
      if (v[r] > reg.hi[r]) reg.hi[r] = v[r];
    }

  // Edge matrix E (d x m) and a set R of m coordinates on which it is invertible.
  RationalMatrix edges_t(m, std::vector<Rational>(d));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < d; ++r) edges_t[i][r] = s.vertex(i + 1)[r] - v0[r];
  const std::vector<std::size_t> rows = pivot_columns(edges_t);
  if (rows.size() != m) throw ConsistencyError("region: simplex lost affine independence");

  // inv = (E_R)^-1, so mu = inv (x_R - v0_R) are the coordinates along the edges.
  RationalMatrix inv(m, std::vector<Rational>(m));
  for (std::size_t k = 0; k < m; ++k) {
    RationalMatrix er(m, std::vector<Rational>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < m; ++i) er[a][i] = edges_t[i][rows[a]];
    std::vector<Rational> unit(m);
    unit[k] = 1;
    auto col = solve_full_column_rank(std::move(er), std::move(unit));
    if (!col) throw ConsistencyError("region: singular coordinate block");
    for (std::size_t i = 0; i < m; ++i) inv[i][k] = (*col)[i];
  }

  std::vector<RationalForm> mu(m, RationalForm{std::vector<Rational>(d), 0});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      mu[i].coeffs[rows[k]] += inv[i][k];
      mu[i].constant -= inv[i][k] * v0[rows[k]];
    }

  RationalForm lambda0{std::vector<Rational>(d), 1};
  for (const auto& f : mu) {
    for (std::size_t r = 0; r < d; ++r) lambda0.coeffs[r] -= f.coeffs[r];
    lambda0.constant -= f.constant;
  }

  std::vector<bool> in_rows(d, false);
  for (std::size_t r : rows) in_rows[r] = true;
  for (std::size_t r = 0; r < d; ++r) {
    if (in_rows[r]) continue;
    // x_r - v0_r - Σ_i E[r][i] mu_i = 0 on the affine hull.
    RationalForm eq{std::vector<Rational>(d), -Rational(v0[r])};
    eq.coeffs[r] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = 0; c < d; ++c) eq.coeffs[c] -= edges_t[i][r] * mu[i].coeffs[c];
      eq.constant -= edges_t[i][r] * mu[i].constant;
    }
    reg.equalities.push_back(integerize(eq));
  }

  if (m > 0) {
    reg.inequalities.push_back(integerize(lambda0));
    for (const auto& f : mu) reg.inequalities.push_back(integerize(f));
  }
  if (strict)
    for (auto& f : reg.inequalities) f.constant -= 1;
  return reg;
}

}  // namespace lattice::detail
