#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lattice {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; constructors from strings need canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

using RationalMatrix = std::vector<std::vector<Rational>>;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Representative in [0, m) for m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::optional<std::int64_t> to_int64(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  static_assert(sizeof(long) == 8, "expects LP64");
  return static_cast<std::int64_t>(v.get_si());
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Row-reduces a copy of `m` and returns the pivot column of each pivot row.
std::vector<std::size_t> pivot_columns(RationalMatrix m);

// Solves A x = b for a matrix of full column rank. Returns nullopt when the
// system is inconsistent.
std::optional<std::vector<Rational>> solve_full_column_rank(
    RationalMatrix a, std::vector<Rational> b);

}  // namespace lattice
